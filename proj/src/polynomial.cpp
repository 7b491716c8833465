#include "artinsum/polynomial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "artinsum/error.hpp"

namespace artinsum {

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr make_ring(Field field, std::vector<std::string> names) {
  if (names.size() > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable '" + n + "'");
  }
  return std::make_shared<const Ring>(Ring{field, std::move(names)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- construction

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  return term(ring, ring->one(), c);
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
  return constant(ring, Scalar(ring->field, c));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->nvars()) throw MismatchError("variable index out of range");
  return term(ring, Monomial::variable(ring->nvars(), index), ring->unit());
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name) {
  int i = ring->index_of(name);
  if (i < 0) throw MismatchError("unknown variable '" + name + "'");
  return variable(ring, static_cast<std::size_t>(i));
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& m, const Scalar& c) {
  if (m.nvars() != ring->nvars()) throw MismatchError("monomial not in ring");
  if (!(c.field() == ring->field)) throw MismatchError("coefficient from another field");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_grevlex(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (t.monomial.nvars() != ring->nvars()) throw MismatchError("monomial not in ring");
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
  return p;
}

void Polynomial::check_same(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw MismatchError("polynomials from different rings");
}

// ---------------------------------------------------------------- queries

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

const Term& Polynomial::leading(const TermOrder& order) const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  if (order.kind() == TermOrder::Kind::GREVLEX) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coefficient;
  }
  return ring_->zero();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

int Polynomial::lowest_degree() const {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().monomial.degree());
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const { return degree() == lowest_degree(); }

Polynomial Polynomial::homogeneous_component(unsigned d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == d) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::truncate_below(unsigned d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() < d) p.terms_.push_back(t);
  }
  return p;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    for (const auto& t : terms_) {
      if (t.monomial[i] != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- arithmetic

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial p(a.ring_);
  p.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) {
      c = -1;
    } else if (j == b.terms_.size()) {
      c = 1;
    } else {
      c = compare_grevlex(a.terms_[i].monomial, b.terms_[j].monomial);
    }
    if (c > 0) {
      p.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = a.terms_[i].coefficient + b.terms_[j].coefficient;
      if (!s.is_zero()) p.terms_.push_back({a.terms_[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coefficient);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coefficient);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m = s.monomial * t.monomial;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, s.coefficient * t.coefficient);
      } else {
        it->second.subtract_product(-s.coefficient, t.coefficient);
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, c});
  }
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
  Polynomial p(a.ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) p.terms_.push_back({t.monomial, c * t.coefficient});
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, c * t.coefficient});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().coefficient.inverse() * *this;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  const RingPtr& target) const {
  if (images.size() != ring_->nvars()) throw MismatchError("wrong number of substitution images");
  for (const auto& img : images) {
    if (!same_ring(img.ring_, target)) throw MismatchError("substitution image in wrong ring");
  }
  if (!(target->field == ring_->field)) throw MismatchError("substitution changes the field");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coefficient);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    }
    result += prod;
  }
  return result;
}

Polynomial Polynomial::embed(const RingPtr& target) const {
  if (!(target->field == ring_->field)) throw MismatchError("embedding changes the field");
  std::vector<int> where(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    where[i] = target->index_of(ring_->names[i]);
    if (where[i] < 0) throw MismatchError("variable '" + ring_->names[i] + "' missing in target");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.monomial[i] != 0) m.set(static_cast<std::size_t>(where[i]), t.monomial[i]);
    }
    terms.push_back({m, t.coefficient});
  }
  return from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------- printing

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string coeff = t.coefficient.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (negative) {
      out += '-';
    } else if (k > 0) {
      out += '+';
    }
    if (t.monomial.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + '*';
      out += t.monomial.to_string(ring_->names);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

}  // namespace artinsum
