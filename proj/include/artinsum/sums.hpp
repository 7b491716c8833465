#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artinsum/algebra.hpp"

namespace artinsum {

/// A constructed algebra. `trivial` marks the degenerate cases where one
/// factor disappears and the other is returned unchanged.
struct SumResult {
  ArtinAlgebra algebra;
  bool trivial = false;
};

/// R x_k S over the union of the variables: I_R + I_S + <Y_i Z_j>.
/// Throws MismatchError on different fields and PreconditionError on a shared
/// variable name. A factor equal to k yields the other factor, flagged trivial.
SumResult fibre_product(const ArtinAlgebra& r, const ArtinAlgebra& s);

/// The echelon representative of soc(R) with the largest leading standard
/// monomial, lifted to a polynomial. Throws NotGorensteinError.
Polynomial socle_generator(const ArtinAlgebra& r);

struct ConnectedSumSpec {
  ArtinAlgebra left;
  ArtinAlgebra right;
  /// Socle elements Δ_R, Δ_S; socle_generator is used when absent.
  std::optional<Polynomial> socle_left;
  std::optional<Polynomial> socle_right;
  /// The twist u in Δ_R - u Δ_S; 1 when absent.
  std::optional<Scalar> unit;
};

/// R #_k S = (R x_k S) / <Δ_R - u Δ_S>. When one factor has length 2 the other
/// is returned flagged trivial. Throws NotGorensteinError, BadSocleError,
/// MismatchError, or PreconditionError (shared variables, a factor equal to k,
/// a zero unit).
SumResult connected_sum(const ConnectedSumSpec& spec);

/// k[X]/Ann(F) where X_i acts on F by partial differentiation in the i-th dual
/// variable. `names` labels the X_i and defaults to X1..Xn. Throws
/// PreconditionError for F = 0 or when the characteristic is positive and at
/// most deg F.
ArtinAlgebra apolar_algebra(const Polynomial& f, std::vector<std::string> names = {});

struct ApolarSumReport {
  bool match = false;
  /// The u with apolar(F+G) = apolar(F) #_u apolar(G) when one exists.
  std::optional<Scalar> unit;
  IdealPresentation sum_presentation;
  IdealPresentation connected_presentation;
  std::string detail;
};

/// Compares apolar(F + G) with the connected sum of apolar(F) and apolar(G).
/// F and G live in rings with disjoint variables; the apolar algebras use the
/// dual variable names.
ApolarSumReport apolar_sum_check(const Polynomial& f, const Polynomial& g);

}  // namespace artinsum
