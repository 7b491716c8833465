#pragma once

// Minimal free resolutions of the residue field and the Poincaré series
// identities for fibre products, connected sums and socle quotients.

#include <cstddef>
#include <string>
#include <vector>

#include "artinsum/algebra.hpp"
#include "artinsum/series.hpp"

namespace artinsum {

struct ResolutionLimits {
  /// Largest k-dimension β_i · λ(A) of a free module in the resolution.
  std::size_t max_columns = 20000;
};

struct BettiData {
  std::vector<std::size_t> betti;  // β_0 .. β_N
  std::size_t truncation = 0;
  long epsilon1 = 0;  // β_1
  long epsilon2 = 0;  // β_2 - C(β_1, 2)
  /// Every differential has all entries in m.
  bool minimal = false;
  /// Homology vanishes at F_0 .. F_{exact_through}.
  std::size_t exact_through = 0;

  /// Σ β_i t^i modulo t^{N+1}.
  SeriesTrunc poincare() const;
};

/// Resolves k over A to homological degree n (at least 2). Throws
/// PreconditionError for n < 2 and ResourceError past the limits.
BettiData betti_numbers(const ArtinAlgebra& a, std::size_t n = 6, const ResolutionLimits& limits = {});

/// μ(I_A) read off as β_2 - C(edim, 2).
std::size_t mu_from_betti(const ArtinAlgebra& a);

struct SeriesCheck {
  bool holds = false;
  SeriesTrunc lhs;
  SeriesTrunc rhs;
  /// The correction term φ for connected sums, zero otherwise.
  SeriesTrunc phi;
};

/// 1/P^P = 1/P^R + 1/P^S - 1 for P = R ×_k S.
SeriesCheck verify_fp_series(const ArtinAlgebra& r, const ArtinAlgebra& s, const ArtinAlgebra& p, std::size_t n = 6);

/// 1/P^Q = 1/P^R + 1/P^S - 1 + φ with φ = -t^2 when both embedding dimensions
/// are at least 2, t^2 when both are 1, and 0 otherwise. Throws
/// PreconditionError unless ll(R), ll(S) >= 2.
SeriesCheck verify_cs_series(const ArtinAlgebra& r, const ArtinAlgebra& s, const ArtinAlgebra& q, std::size_t n = 6);

/// 1/P^T = 1/P^{T/soc T} + t^2. Throws NotGorensteinError, and
/// PreconditionError when edim(T) < 2.
SeriesCheck verify_socle_quotient(const ArtinAlgebra& t, std::size_t n = 6);

struct MuReport {
  std::size_t m = 0;  // edim R
  std::size_t n = 0;  // edim S
  std::size_t mu_r = 0;
  std::size_t mu_s = 0;
  std::size_t mu_p = 0;
  std::size_t mu_q = 0;
  int psi = 0;       // μ(I_Q) - μ(I_P)
  int expected_psi = 0;
  bool fibre_holds = false;      // μ(I_P) = μ(I_R) + μ(I_S) + mn
  bool connected_holds = false;  // μ(I_Q) = μ(I_P) + ψ
  /// mu_from_betti agrees with the direct generator count on all four rings.
  bool direct_agrees = false;
  bool holds() const { return fibre_holds && connected_holds && direct_agrees; }
};

/// ψ = 1 when m, n >= 2, -1 when m = n = 1, 0 otherwise.
int expected_psi(std::size_t m, std::size_t n);

/// Builds P = R ×_k S and Q = R # S and checks both μ formulas. Throws
/// NotGorensteinError and PreconditionError when a factor has length <= 2.
MuReport verify_mu_formulas(const ArtinAlgebra& r, const ArtinAlgebra& s);

}  // namespace artinsum
