#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "artinsum/algebra.hpp"

namespace artinsum {

/// A standard graded Artinian algebra k[x]/I with I homogeneous. The basis of
/// the underlying algebra consists of monomials, so the degree of a basis
/// vector is its monomial degree.
///
/// When produced by associated_graded the source local algebra is kept, along
/// with a basis of it adapted to the m-adic filtration, so elements of the
/// source can be sent to their initial forms.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;

  /// Throws PreconditionError unless every generator is homogeneous.
  static GradedAlgebra from_presentation(const IdealPresentation& presentation);
  static GradedAlgebra parse(std::string_view text);

  const ArtinAlgebra& algebra() const { return algebra_; }
  const IdealPresentation& presentation() const { return algebra_.presentation(); }
  const RingPtr& ring() const { return algebra_.ring(); }
  Field field() const { return algebra_.field(); }
  std::size_t top_degree() const { return algebra_.loewy_length(); }
  std::size_t degree_of(std::size_t basis_index) const { return algebra_.basis()[basis_index].degree(); }

  /// G_i inside the algebra; empty beyond the top degree.
  Subspace piece(std::size_t i) const;
  std::vector<std::size_t> hilbert_function() const;
  bool is_homogeneous(const Vec& v) const;

  bool has_source() const { return source_ != nullptr; }
  /// Throws PreconditionError when there is no source.
  const ArtinAlgebra& source() const;
  /// Class in G_i of an element of m^i of the source.
  Vec graded_class(const Vec& v, std::size_t i) const;
  /// Initial form x*; zero for x = 0.
  Vec initial_form(const Vec& v) const;

 private:
  friend GradedAlgebra associated_graded(const ArtinAlgebra& a);

  ArtinAlgebra algebra_;
  std::shared_ptr<const ArtinAlgebra> source_;
  Matrix coordinates_;                  // source vector -> filtration-adapted coordinates
  std::vector<std::size_t> rep_degree_;
  std::vector<Vec> rep_images_;         // adapted basis vectors as elements of G
};

/// gr(A) = ⊕ m^i / m^{i+1} with its homogeneous presentation I*.
GradedAlgebra associated_graded(const ArtinAlgebra& a);

/// Homogeneous ideal given by its graded pieces.
struct GradedIdeal {
  std::vector<Subspace> components;  // indexed by degree

  std::size_t dim() const;
  std::vector<std::size_t> dims() const;
  std::vector<Vec> generators() const;
};

/// Throws PreconditionError on inhomogeneous input.
GradedIdeal graded_ideal_generated(const GradedAlgebra& g, const std::vector<Vec>& homogeneous);
/// Each component lies in its degree and is mapped into the next by G_1.
bool is_graded_ideal(const GradedAlgebra& g, const GradedIdeal& ideal);
/// G / <elements>; the elements must be homogeneous.
GradedAlgebra graded_quotient(const GradedAlgebra& g, const std::vector<Vec>& homogeneous);

struct GradedSocle {
  std::vector<Subspace> by_degree;

  std::size_t linear_dim() const { return by_degree.size() > 1 ? by_degree[1].dim() : 0; }
  /// dim soc(G) ∩ (G_+)^2
  std::size_t higher_dim() const;
};

GradedSocle graded_socle(const GradedAlgebra& g);

struct GlsResult {
  bool holds = false;
  /// Echelon basis of soc(G) ∩ G_1.
  std::vector<Vec> witness;
};

/// Gorenstein up to linear socle: the socle in degrees >= 2 is one-dimensional.
/// Throws PreconditionError when the top degree is below 2.
GlsResult is_gls(const GradedAlgebra& g);

struct GlsSplit {
  /// G / <soc(G) ∩ G_1>, graded Gorenstein.
  GradedAlgebra gorenstein_part;
  /// k ⊕ (soc(G) ∩ G_1) with zero multiplication, on the variables the
  /// Gorenstein part no longer needs.
  GradedAlgebra square_zero_part;
  std::vector<Polynomial> witness_forms;
};

/// Throws PreconditionError unless G is Gorenstein up to linear socle.
GlsSplit gls_split(const GradedAlgebra& g);

/// The three equivalent formulations of being Gorenstein up to linear socle,
/// each decided independently.
struct GlsEquivalences {
  bool socle_condition = false;  // dim soc(G) ∩ (G_+)^2 = 1
  bool fibre_product = false;    // G = A x_k B, A Gorenstein, B_+^2 = 0
  bool projection = false;       // G -> A Gorenstein with kernel meeting (G_+)^2 trivially
};

GlsEquivalences check_gls_equivalences(const GradedAlgebra& g);

struct IarrobinoResult {
  GradedAlgebra graded;
  GradedIdeal c;
  GradedAlgebra q0;
};

/// C_i = ((0:m^{s-i}) ∩ m^i) / ((0:m^{s-i}) ∩ m^{i+1}) inside G_i and Q0 = G/C.
/// Throws NotGorensteinError.
IarrobinoResult iarrobino(const ArtinAlgebra& a);

struct Classification {
  bool is_short = false;
  bool stretched = false;
  bool compressed = false;
};

/// Pattern match on a Hilbert function (1, d, ..., 1) with socle degree s:
/// short is (1,h,n,1), stretched is (1,h,1,...,1) with s >= 3, compressed is
/// H(i) = min(C(d+i-1,i), C(d+s-i-1,s-i)) for all i.
Classification classify(const std::vector<std::size_t>& hilbert);
Classification classify(const ArtinAlgebra& a);

}  // namespace artinsum
