#include "artinsum/parser.hpp"

#include <cctype>
#include <optional>

#include "artinsum/error.hpp"

namespace artinsum {

namespace {

enum class Tok { IDENT, NUMBER, SYMBOL, END };

struct Token {
  Tok kind = Tok::END;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(message, at.line, at.column);
  }

  bool accept_symbol(char c) {
    if (current_.kind == Tok::SYMBOL && current_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_symbol(char c) {
    if (!accept_symbol(c)) fail(current_, std::string("expected '") + c + "', found " + describe(current_));
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::END) return "end of input";
    return "'" + t.text + "'";
  }

 private:
  void advance() {
    skip_space();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Tok::IDENT;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        current_.text += take_char();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Tok::NUMBER;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        current_.text += take_char();
      }
    } else {
      current_.kind = Tok::SYMBOL;
      current_.text = std::string(1, take_char());
    }
  }

  char take_char() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take_char();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take_char();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

Rational parse_number(Lexer& lex) {
  Token num = lex.take();
  std::string text = num.text;
  if (lex.accept_symbol('/')) {
    Token den = lex.take();
    if (den.kind != Tok::NUMBER) lex.fail(den, "expected denominator, found " + Lexer::describe(den));
    if (den.text.find_first_not_of('0') == std::string::npos) lex.fail(den, "zero denominator");
    text += "/" + den.text;
  }
  return Rational::parse(text);
}

// term := coeff? ("*"? ident ("^" integer)?)*
Polynomial parse_term(Lexer& lex, const RingPtr& ring) {
  const Token start = lex.peek();
  Rational coeff(1);
  bool have_factor = false;
  if (lex.peek().kind == Tok::NUMBER) {
    coeff = parse_number(lex);
    have_factor = true;
  }
  Monomial mono = ring->one();
  while (true) {
    const Token& t = lex.peek();
    if (t.kind == Tok::SYMBOL && t.text == "*") {
      lex.take();
      const Token& next = lex.peek();
      if (next.kind == Tok::NUMBER) {
        coeff = coeff * parse_number(lex);
        have_factor = true;
        continue;
      }
      if (next.kind != Tok::IDENT) lex.fail(next, "expected variable after '*', found " + Lexer::describe(next));
      continue;
    }
    if (t.kind != Tok::IDENT) break;
    Token ident = lex.take();
    int idx = ring->index_of(ident.text);
    if (idx < 0) lex.fail(ident, "unknown variable '" + ident.text + "'");
    unsigned power = 1;
    if (lex.accept_symbol('^')) {
      Token e = lex.take();
      if (e.kind != Tok::NUMBER) lex.fail(e, "expected exponent, found " + Lexer::describe(e));
      if (e.text.size() > 4 || std::stoul(e.text) > kMaxExponent) lex.fail(e, "exponent too large");
      power = static_cast<unsigned>(std::stoul(e.text));
    }
    unsigned total = mono[static_cast<std::size_t>(idx)] + power;
    if (total > kMaxExponent) lex.fail(ident, "exponent too large");
    mono.set(static_cast<std::size_t>(idx), total);
    have_factor = true;
  }
  if (!have_factor) lex.fail(start, "expected a term, found " + Lexer::describe(start));
  Scalar c;
  try {
    c = Scalar(ring->field, coeff);
  } catch (const Error& e) {
    lex.fail(start, e.what());
  }
  return Polynomial::term(ring, mono, c);
}

// poly := ("+"|"-")? term (("+"|"-") term)*
Polynomial parse_poly(Lexer& lex, const RingPtr& ring) {
  Polynomial result(ring);
  bool negative = false;
  if (lex.accept_symbol('-')) {
    negative = true;
  } else {
    lex.accept_symbol('+');
  }
  while (true) {
    Polynomial t = parse_term(lex, ring);
    result = negative ? result - t : result + t;
    if (lex.accept_symbol('+')) {
      negative = false;
    } else if (lex.accept_symbol('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return result;
}

void expect_keyword(Lexer& lex, const char* word) {
  const Token& t = lex.peek();
  if (t.kind != Tok::IDENT || t.text != word) {
    lex.fail(t, std::string("expected '") + word + "', found " + Lexer::describe(t));
  }
  lex.take();
}

Field parse_field(Lexer& lex) {
  expect_keyword(lex, "field");
  Token t = lex.take();
  Field field;
  if (t.kind == Tok::IDENT && t.text == "QQ") {
    field = Field::rationals();
  } else if (t.kind == Tok::IDENT && t.text == "GF") {
    lex.expect_symbol('(');
    Token p = lex.take();
    if (p.kind != Tok::NUMBER) lex.fail(p, "expected modulus, found " + Lexer::describe(p));
    if (p.text.size() > 10) lex.fail(p, "modulus must be below 2^32");
    unsigned long long value = std::stoull(p.text);
    try {
      field = Field::prime(value);
    } catch (const Error& e) {
      lex.fail(p, e.what());
    }
    lex.expect_symbol(')');
  } else {
    lex.fail(t, "expected QQ or GF(p), found " + Lexer::describe(t));
  }
  lex.expect_symbol(';');
  return field;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Lexer lex(text);
  Field field = parse_field(lex);
  expect_keyword(lex, "vars");
  std::vector<std::string> names;
  while (lex.peek().kind == Tok::IDENT) {
    Token t = lex.take();
    for (const auto& n : names) {
      if (n == t.text) lex.fail(t, "duplicate variable '" + t.text + "'");
    }
    names.push_back(t.text);
  }
  if (names.size() > kMaxVariables) lex.fail(lex.peek(), "too many variables");
  lex.expect_symbol(';');
  Presentation out;
  out.ring = make_ring(field, std::move(names));
  expect_keyword(lex, "ideal");
  // An empty generator list is accepted so the zero ideal round-trips.
  if (!(lex.peek().kind == Tok::SYMBOL && lex.peek().text == ";") && lex.peek().kind != Tok::END) {
    while (true) {
      Polynomial p = parse_poly(lex, out.ring);
      if (!p.is_zero()) out.generators.push_back(std::move(p));
      if (!lex.accept_symbol(',')) break;
    }
  }
  lex.accept_symbol(';');
  if (lex.peek().kind != Tok::END) lex.fail(lex.peek(), "unexpected " + Lexer::describe(lex.peek()));
  return out;
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Lexer lex(text);
  Polynomial p = parse_poly(lex, ring);
  if (lex.peek().kind != Tok::END) lex.fail(lex.peek(), "unexpected " + Lexer::describe(lex.peek()));
  return p;
}

std::string format_presentation(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  std::string out = "field " + ring->field.to_string() + ";\nvars";
  for (const auto& n : ring->names) out += " " + n;
  out += ";\nideal ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators[i].to_string();
  }
  out += ";\n";
  return out;
}

}  // namespace artinsum
