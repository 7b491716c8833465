#include "artinsum/scalar.hpp"

#include <cstdlib>
#include <limits>

namespace artinsum {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr i128 kInt64Min = std::numeric_limits<std::int64_t>::min();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits(i128 v) { return v >= kInt64Min && v <= kInt64Max; }

mpz_class to_mpz(i128 v) {
  bool negative = v < 0;
  u128 magnitude = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(magnitude >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(magnitude)));
  mpz_class result = (hi << 64) + lo;
  return negative ? mpz_class(-result) : result;
}

static_assert(sizeof(long) == 8, "long must be 64 bits");

bool mpz_fits_int64(const mpz_class& z) { return z.fits_slong_p(); }

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("element is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

// ---------------------------------------------------------------- Field

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw PreconditionError("modulus must be below 2^32");
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.modulus_ = p;
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(modulus_) + ")";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { assign(value); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign(const mpq_class& value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (mpz_fits_int64(n) && mpz_fits_int64(d)) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(value);
    big_->canonicalize();
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  r.assign(q);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpq_class q;
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class n(s.substr(0, slash), 10);
      mpz_class d(s.substr(slash + 1), 10);
      if (d == 0) throw Error("zero denominator");
      q = mpq_class(n, d);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational '" + s + "'");
  }
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (!big_) return from_wide(den_, num_);
  return Rational(mpq_class(1 / *big_));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(a.num_, b.num_, &sum)) return Rational(sum);
    }
    i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 den = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t prod;
      if (!__builtin_mul_overflow(a.num_, b.num_, &prod)) return Rational(prod);
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field field, std::int64_t value) : modulus_(field.characteristic()) {
  if (modulus_ == 0) {
    value_ = Rational(value);
  } else {
    std::int64_t m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    residue_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(Field field, const Rational& value) : modulus_(field.characteristic()) {
  if (modulus_ == 0) {
    value_ = value;
    return;
  }
  mpq_class q = value.to_mpq();
  std::uint64_t num = reduce_mod(q.get_num(), modulus_);
  std::uint64_t den = reduce_mod(q.get_den(), modulus_);
  if (den == 0) throw Error("denominator vanishes in " + field.to_string());
  residue_ = (num * mod_inverse(den, modulus_)) % modulus_;
}

Field Scalar::field() const {
  Field f;
  f.modulus_ = modulus_;
  return f;
}

Rational Scalar::to_rational() const {
  if (modulus_ == 0) return value_;
  return Rational(static_cast<std::int64_t>(residue_));
}

std::string Scalar::to_string() const {
  return modulus_ == 0 ? value_.to_string() : std::to_string(residue_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0) {
    r.value_ = -value_;
  } else if (residue_ != 0) {
    r.residue_ = modulus_ - residue_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r = *this;
  if (modulus_ == 0) {
    r.value_ = value_.inverse();
  } else {
    r.residue_ = mod_inverse(residue_, modulus_);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  check_same(b);
  if (modulus_ == 0) {
    value_ = value_ + b.value_;
  } else {
    residue_ += b.residue_;
    if (residue_ >= modulus_) residue_ -= modulus_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  check_same(b);
  if (modulus_ == 0) {
    value_ = value_ - b.value_;
  } else {
    residue_ = residue_ >= b.residue_ ? residue_ - b.residue_ : residue_ + modulus_ - b.residue_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  check_same(b);
  if (modulus_ == 0) {
    value_ = value_ * b.value_;
  } else {
    residue_ = (residue_ * b.residue_) % modulus_;
  }
  return *this;
}

void Scalar::subtract_product(const Scalar& factor, const Scalar& b) {
  check_same(b);
  check_same(factor);
  if (modulus_ == 0) {
    value_ = value_ - factor.value_ * b.value_;
  } else {
    std::uint64_t prod = (factor.residue_ * b.residue_) % modulus_;
    residue_ = residue_ >= prod ? residue_ - prod : residue_ + modulus_ - prod;
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  r += b;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  r -= b;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  r *= b;
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

}  // namespace artinsum
