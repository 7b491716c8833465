#include "artinsum/series.hpp"

#include <algorithm>

#include "artinsum/error.hpp"

namespace artinsum {

namespace {

void check_same(const SeriesTrunc& a, const SeriesTrunc& b) {
  if (a.truncation() != b.truncation()) throw MismatchError("series truncated at different orders");
}

}  // namespace

SeriesTrunc::SeriesTrunc(std::size_t n) : coeffs_(n + 1, 0) {}

SeriesTrunc::SeriesTrunc(std::size_t n, const std::vector<mpz_class>& coefficients) : coeffs_(n + 1, 0) {
  for (std::size_t i = 0; i <= n && i < coefficients.size(); ++i) coeffs_[i] = coefficients[i];
}

SeriesTrunc::SeriesTrunc(std::size_t n, std::initializer_list<long> coefficients) : coeffs_(n + 1, 0) {
  std::size_t i = 0;
  for (long c : coefficients) {
    if (i > n) break;
    coeffs_[i++] = c;
  }
}

SeriesTrunc SeriesTrunc::monomial(std::size_t n, std::size_t k, long c) {
  SeriesTrunc s(n);
  if (k <= n) s.coeffs_[k] = c;
  return s;
}

SeriesTrunc SeriesTrunc::reciprocal() const {
  const mpz_class& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) throw PreconditionError("constant term is not a unit");
  const std::size_t n = truncation();
  SeriesTrunc r(n);
  r.coeffs_[0] = c0;  // 1/c0 = c0 for c0 = ±1
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * r.coeffs_[k - i];
    r.coeffs_[k] = -acc * c0;
  }
  return r;
}

SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b) {
  check_same(a, b);
  SeriesTrunc s = a;
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] += b.coeffs_[i];
  return s;
}

SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b) {
  check_same(a, b);
  SeriesTrunc s = a;
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) s.coeffs_[i] -= b.coeffs_[i];
  return s;
}

SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
  check_same(a, b);
  const std::size_t n = a.truncation();
  SeriesTrunc s(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

std::string SeriesTrunc::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace artinsum
