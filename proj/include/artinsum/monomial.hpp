#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace artinsum {

inline constexpr std::size_t kMaxVariables = 32;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector over a fixed number of variables. Exponents are bytes;
/// products that would overflow throw ResourceError.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, const std::vector<unsigned>& exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned exponent);
  std::vector<unsigned> exponents() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Index of the only variable with positive exponent, or -1.
  int pure_power_variable() const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// Requires divides(numerator).
  Monomial quotient_of(const Monomial& numerator) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;
  /// Product notation over the given names, "1" for the empty monomial.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_same(const Monomial& other) const;

  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// GREVLEX and LEX rank the first declared variable highest. BLOCK compares the
/// front variables by grevlex first and breaks ties by grevlex on the back
/// variables, so any monomial containing a front variable beats one that does not.
class TermOrder {
 public:
  enum class Kind { GREVLEX, LEX, BLOCK };

  static TermOrder grevlex() { return TermOrder(Kind::GREVLEX); }
  static TermOrder lex() { return TermOrder(Kind::LEX); }
  static TermOrder block(std::vector<std::size_t> front, std::vector<std::size_t> back);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& front() const { return front_; }
  const std::vector<std::size_t>& back() const { return back_; }

  /// Negative, zero or positive. Throws MismatchError on different variable counts
  /// or when a BLOCK order does not partition the variables.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string to_string() const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  explicit TermOrder(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::GREVLEX;
  std::vector<std::size_t> front_;
  std::vector<std::size_t> back_;
};

int compare_grevlex(const Monomial& a, const Monomial& b);

/// Strict weak ordering adaptor, ascending.
struct OrderLess {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) < 0; }
};

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grevlex(a, b) < 0; }
};

}  // namespace artinsum
