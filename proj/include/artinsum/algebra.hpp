#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artinsum/ideal.hpp"
#include "artinsum/linalg.hpp"

namespace artinsum {

/// Sparse vector: (index, nonzero value) pairs in increasing index order.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// A local Artinian algebra k[x]/I as a finite-dimensional vector space.
///
/// The basis is the standard monomials of the reduced grevlex basis listed in
/// decreasing order, so the unit 1 comes last and echelon pivots favour large
/// monomials. When the input presentation has linear relations the algebra is
/// rebuilt on a subset of the variables that is independent modulo m^2; the
/// original ring stays available as the source ring and image() accepts
/// polynomials from either ring.
class ArtinAlgebra {
 public:
  ArtinAlgebra() = default;

  /// Throws UnitIdealError, NotZeroDimensionalError or NotLocalError.
  static ArtinAlgebra build(const IdealPresentation& presentation);
  static ArtinAlgebra parse(std::string_view text);

  const IdealPresentation& presentation() const { return presentation_; }
  const RingPtr& ring() const { return presentation_.ring(); }
  Field field() const { return presentation_.field(); }
  std::size_t nvars() const { return ring()->nvars(); }
  std::size_t length() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t index_of(const Monomial& m) const;

  bool minimalized() const { return minimalized_; }
  const IdealPresentation& source_presentation() const { return source_; }
  /// Images of the source variables as polynomials in ring().
  const std::vector<Polynomial>& source_images() const { return source_images_; }

  Vec zero() const { return zero_vector(field(), length()); }
  Vec one() const { return unit_vector(field(), length(), length() - 1); }
  Vec basis_vector(std::size_t i) const { return unit_vector(field(), length(), i); }
  Vec variable(std::size_t i) const;
  Vec times_variable(std::size_t i, const Vec& v) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  /// Product of two basis elements straight from the multiplication table.
  const SparseVec& table(std::size_t i, std::size_t j) const { return table_[i * length() + j]; }
  /// Accepts polynomials over ring() or over the source ring.
  Vec image(const Polynomial& f) const;
  /// The unique combination of standard monomials representing v.
  Polynomial lift(const Vec& v) const;
  /// Matrix of multiplication by x_i.
  Matrix action(std::size_t i) const;

  /// m^i for i >= 0; zero beyond the Loewy length.
  const Subspace& power(std::size_t i) const;
  const Subspace& maximal_ideal() const { return power(1); }
  std::size_t loewy_length() const { return filtration_.size() - 2; }

 private:
  static ArtinAlgebra build_local(const IdealPresentation& presentation);

  IdealPresentation presentation_;
  IdealPresentation source_;
  std::vector<Polynomial> source_images_;
  bool minimalized_ = false;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<std::vector<SparseVec>> actions_;  // [variable][basis index]
  std::vector<SparseVec> table_;                 // [i * length + j]
  std::vector<Subspace> filtration_;             // m^0 .. m^{s+1}
};

// ---------------------------------------------------------------- invariants

std::size_t length(const ArtinAlgebra& a);
std::size_t loewy_length(const ArtinAlgebra& a);
std::size_t embedding_dimension(const ArtinAlgebra& a);
/// {x : x m = 0}
Subspace socle(const ArtinAlgebra& a);
std::size_t type(const ArtinAlgebra& a);
bool is_gorenstein(const ArtinAlgebra& a);
/// H(i) = dim m^i / m^{i+1} for i = 0..s.
std::vector<std::size_t> hilbert_function(const ArtinAlgebra& a);

// ---------------------------------------------------------------- ideals

Subspace span(const ArtinAlgebra& a, const std::vector<Vec>& vectors);
bool is_ideal(const ArtinAlgebra& a, const Subspace& w);
/// Smallest ideal containing the given elements.
Subspace ideal_generated(const ArtinAlgebra& a, const std::vector<Vec>& gens);
/// Span of all products u v with u in U and v in V.
Subspace product(const ArtinAlgebra& a, const Subspace& u, const Subspace& v);

struct Annihilator {
  Subspace space;
  bool is_ideal = false;
};

/// {v : v g = 0 for every g in gens}
Annihilator annihilator(const ArtinAlgebra& a, const std::vector<Vec>& gens);

struct MinimalGenerators {
  std::size_t count = 0;
  /// Echelon representatives of W / mW.
  std::vector<Vec> representatives;
};

/// Throws PreconditionError unless w is an ideal.
MinimalGenerators minimal_generators(const ArtinAlgebra& a, const Subspace& w);

/// Minimal number of generators of the defining ideal, counted directly as
/// dim I / <x> I inside k[x] / <x>^{s+2}.
std::size_t relation_count(const ArtinAlgebra& a);

std::string format_algebra(const ArtinAlgebra& a);

}  // namespace artinsum
