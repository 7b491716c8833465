#pragma once

// Exact coefficient arithmetic: rationals with a machine-word fast path and
// prime fields GF(p) with p < 2^32.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "artinsum/error.hpp"

namespace artinsum {

/// The coefficient field: the rationals (characteristic 0) or GF(p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws PreconditionError unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t characteristic() const { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Reduced fraction. Values whose numerator and denominator fit in int64
/// are stored inline; larger values spill into a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Accepts "n" or "n/d" with an optional leading sign; arbitrary size.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  int sign() const;

  /// Valid only when is_small().
  std::int64_t small_numerator() const { return num_; }
  std::int64_t small_denominator() const { return den_; }

  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign(const mpq_class& value);
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// An element of a Field. Over GF(p) the value is the canonical residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, std::int64_t value);
  /// Over GF(p) the denominator must be invertible modulo p.
  Scalar(Field field, const Rational& value);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }

  Field field() const;
  bool is_zero() const { return modulus_ != 0 ? residue_ == 0 : value_.is_zero(); }
  bool is_one() const { return modulus_ != 0 ? residue_ == 1 : value_.is_one(); }

  /// Rational value; over GF(p) the residue as an integer.
  Rational to_rational() const;
  std::uint64_t residue() const { return residue_; }
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);

  /// this -= factor * b, the inner step of every elimination loop.
  void subtract_product(const Scalar& factor, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& other) const {
    if (modulus_ != other.modulus_) throw MismatchError("scalars from different fields");
  }

  std::uint64_t modulus_ = 0;
  std::uint64_t residue_ = 0;
  Rational value_;
};

}  // namespace artinsum
