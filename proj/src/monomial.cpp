#include "artinsum/monomial.hpp"

#include <algorithm>

#include "artinsum/error.hpp"

namespace artinsum {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::size_t nvars, const std::vector<unsigned>& exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw MismatchError("exponent vector has wrong length");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(exponents.size(), std::vector<unsigned>(exponents)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= nvars_) throw MismatchError("variable index out of range");
  if (exponent > kMaxExponent) throw ResourceError("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + exponent);
  exps_[i] = static_cast<std::uint8_t>(exponent);
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + nvars_);
}

void Monomial::check_same(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw MismatchError("monomials from different rings");
}

bool Monomial::divides(const Monomial& other) const {
  check_same(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same(other);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

int Monomial::pure_power_variable() const {
  int found = -1;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::max(exps_[i], other.exps_[i]));
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  check_same(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::min(exps_[i], other.exps_[i]));
  return r;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
  if (!divides(numerator)) throw PreconditionError("monomial does not divide");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.set(i, numerator.exps_[i] - exps_[i]);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  a.check_same(b);
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) throw ResourceError("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1099511628211ULL + exps_[i] + 1;
  return h;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- orders

namespace {

int grevlex_on(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& vars) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t v : vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw MismatchError("monomials from different rings");
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

TermOrder TermOrder::block(std::vector<std::size_t> front, std::vector<std::size_t> back) {
  std::vector<std::size_t> all = front;
  all.insert(all.end(), back.begin(), back.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) throw PreconditionError("block order must partition the variables");
  }
  TermOrder t(Kind::BLOCK);
  t.front_ = std::move(front);
  t.back_ = std::move(back);
  return t;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::GREVLEX:
      return compare_grevlex(a, b);
    case Kind::LEX:
      if (a.nvars() != b.nvars()) throw MismatchError("monomials from different rings");
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::BLOCK: {
      if (a.nvars() != b.nvars() || front_.size() + back_.size() != a.nvars()) {
        throw MismatchError("block order does not match the ring");
      }
      int c = grevlex_on(a, b, front_);
      return c != 0 ? c : grevlex_on(a, b, back_);
    }
  }
  return 0;
}

std::string TermOrder::to_string() const {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (kind_) {
    case Kind::GREVLEX:
      return "GREVLEX";
    case Kind::LEX:
      return "LEX";
    case Kind::BLOCK:
      return "BLOCK({" + list(front_) + "},{" + list(back_) + "})";
  }
  return "";
}

}  // namespace artinsum
