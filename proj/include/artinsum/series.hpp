#pragma once

// Integer power series modulo t^{N+1}.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace artinsum {

class SeriesTrunc {
 public:
  SeriesTrunc() = default;
  /// The zero series modulo t^{n+1}.
  explicit SeriesTrunc(std::size_t n);
  /// Coefficients beyond t^n are dropped; missing ones are zero.
  SeriesTrunc(std::size_t n, const std::vector<mpz_class>& coefficients);
  SeriesTrunc(std::size_t n, std::initializer_list<long> coefficients);

  /// c t^k modulo t^{n+1}.
  static SeriesTrunc monomial(std::size_t n, std::size_t k, long c = 1);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  /// Throws PreconditionError unless the constant term is 1 or -1.
  SeriesTrunc reciprocal() const;

  friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b);
  friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b);
  friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b);
  friend bool operator==(const SeriesTrunc& a, const SeriesTrunc& b) { return a.coeffs_ == b.coeffs_; }

  /// "1 - 2t + t^2"; "0" for the zero series.
  std::string to_string() const;

 private:
  std::vector<mpz_class> coeffs_{0};
};

}  // namespace artinsum
