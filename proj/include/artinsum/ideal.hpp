#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "artinsum/linalg.hpp"
#include "artinsum/polynomial.hpp"

namespace artinsum {

/// Upper bound on the total degree of intermediate polynomials in Buchberger's
/// algorithm; exceeding it throws ResourceError. Defaults to 64.
unsigned default_max_degree();
void set_default_max_degree(unsigned degree);

/// Reduced Gröbner basis: monic, inter-reduced, sorted by increasing leading term.
/// An ideal containing 1 yields {1}; the zero ideal yields {}.
std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                       const TermOrder& order = TermOrder::grevlex(),
                                       unsigned max_degree = 0);

/// Remainder of f by a Gröbner basis for `order`; every remaining term is standard.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order = TermOrder::grevlex());

/// An ideal given by generators, with a per-order cache of reduced bases that
/// can be shared safely between threads.
class IdealPresentation {
 public:
  IdealPresentation() = default;
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

  /// Wraps a basis already known to be the reduced Gröbner basis for `order`.
  static IdealPresentation from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis,
                                              const TermOrder& order = TermOrder::grevlex());

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& groebner_basis(const TermOrder& order = TermOrder::grevlex()) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const IdealPresentation& other) const;
  bool is_unit() const;

  /// Canonical text: the reduced grevlex basis in presentation syntax.
  std::string to_string() const;

  /// Same ring and same reduced grevlex basis.
  friend bool operator==(const IdealPresentation& a, const IdealPresentation& b);

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<TermOrder, std::shared_ptr<const std::vector<Polynomial>>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// I ∩ k[keep]; the result lives in a ring over the kept variables in their
/// original order. Computed with BLOCK(eliminated, kept).
IdealPresentation contract(const IdealPresentation& ideal, const std::vector<std::string>& keep);

/// True when every variable has a pure power among the leading terms.
bool is_zero_dimensional(const IdealPresentation& ideal);

/// Standard monomials of a zero-dimensional ideal under grevlex, increasing.
std::vector<Monomial> standard_monomials(const IdealPresentation& ideal);

/// Kernel of k[x] -> V, f |-> f(M_1..M_n) * start, for commuting matrices M_i
/// on a finite-dimensional space V. Returns the ideal with its reduced grevlex
/// basis already in place.
IdealPresentation kernel_presentation(const RingPtr& ring, const std::vector<Matrix>& actions,
                                      const Vec& start);

}  // namespace artinsum
