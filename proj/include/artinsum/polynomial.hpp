#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artinsum/monomial.hpp"
#include "artinsum/scalar.hpp"

namespace artinsum {

/// A polynomial ring k[x_1..x_n]: the coefficient field plus variable names.
struct Ring {
  Field field;
  std::vector<std::string> names;

  std::size_t nvars() const { return names.size(); }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  Monomial one() const { return Monomial(nvars()); }
  Scalar zero() const { return Scalar::zero(field); }
  Scalar unit() const { return Scalar::one(field); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field == b.field && a.names == b.names;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

/// Throws PreconditionError on duplicate names or too many variables.
RingPtr make_ring(Field field, std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial. Terms are kept in strictly decreasing grevlex order with
/// nonzero coefficients, which is also the canonical printing order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial constant(const RingPtr& ring, std::int64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial variable(const RingPtr& ring, const std::string& name);
  static Polynomial term(const RingPtr& ring, const Monomial& m, const Scalar& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Leading term under grevlex; requires nonzero.
  const Term& leading() const;
  /// Leading term under an arbitrary order; requires nonzero.
  const Term& leading(const TermOrder& order) const;

  Scalar coefficient(const Monomial& m) const;
  /// Largest total degree; -1 for zero.
  int degree() const;
  /// Smallest total degree of a term; -1 for zero.
  int lowest_degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(unsigned d) const;
  /// Sum of the components of degree below d.
  Polynomial truncate_below(unsigned d) const;
  /// Variable indices that occur.
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& a);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// Replaces variable i by images[i]; all images share a target ring.
  Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;
  /// Moves into a ring whose variables include all of ours (matched by name).
  Polynomial embed(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace artinsum
