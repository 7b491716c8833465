#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artinsum/graded.hpp"
#include "artinsum/sums.hpp"

namespace artinsum {

struct SplitCheck {
  bool ok = false;
  /// Products Y_i Z_j that are not in I_Q.
  std::vector<std::string> offending;
  /// Human-readable reasons for failure, empty on success.
  std::vector<std::string> reasons;
  std::optional<ArtinAlgebra> r;  // k[Y] / (I_Q ∩ k[Y])
  std::optional<ArtinAlgebra> s;  // k[Z] / (I_Q ∩ k[Z])
  /// Δ_R = u Δ_S in Q, with the default socle generators.
  std::optional<Scalar> unit;
};

/// Decides whether Q is the connected sum of its contractions to the two
/// variable sets: every Y_i Z_j lies in I_Q and both contractions are
/// Gorenstein. On success also checks λ(R) + λ(S) = λ(Q) + 2 and that the
/// connected sum of the contractions reproduces I_Q. Throws NotGorensteinError
/// and PreconditionError when the sets do not partition the variables.
SplitCheck check_split(const ArtinAlgebra& q, const std::vector<std::string>& ys,
                       const std::vector<std::string>& zs);

/// New variables Y1..Ym, Z1..Zn for Q. The forward map sends each new variable
/// to an element of Q written in the old variables; the inverse writes each
/// old variable in the new ones. Both are exact and checked to compose to the
/// identity on Q.
struct CoordinateChange {
  RingPtr old_ring;
  RingPtr new_ring;
  std::vector<Polynomial> forward;
  std::vector<Polynomial> inverse;
  /// I_Q in the new variables.
  IdealPresentation rewritten;
};

struct SplitWitness {
  std::vector<Vec> z;  // minimal generators of J, lifts of a basis of (0:m^2)/m^{s-1}
  std::vector<Vec> y;  // minimal generators of I = 0:J
  Subspace j;
  Subspace i;
  CoordinateChange change;
};

/// Builds J from (0:m^2) and I = 0:J and checks every structural identity
/// (J m^2 = 0, J m ⊆ soc Q, I J = 0, I + J = m, m^r = I^r for r >= 2,
/// μ(I) + μ(J) = edim Q). Returns nothing when gr(Q) is Gorenstein. Throws
/// NotGorensteinError, or PreconditionError naming the failing condition
/// (Loewy length below 3, gr(Q) not Gorenstein up to linear socle, or one of
/// the identities).
std::optional<SplitWitness> split_witness(const ArtinAlgebra& q);

enum class CertificateKind { HILBERT2, COMPLETE_INTERSECTION, COMPRESSED };

struct Certificate {
  CertificateKind kind;
  std::string detail;
};

std::string to_string(CertificateKind kind);

/// Numerical reasons why a Gorenstein Q is not a nontrivial connected sum:
/// H(2) >= C(d,2) + 2; complete intersection of embedding dimension >= 3;
/// compressed with Loewy length >= 4. Empty for non-Gorenstein input.
std::vector<Certificate> certify_indecomposable(const ArtinAlgebra& q);

/// H_Q(2) <= C(m+n+1, 2) - mn for Q = R # S with edim R = m, edim S = n.
bool h2_bound_check(const ArtinAlgebra& r, const ArtinAlgebra& s, const ArtinAlgebra& q);

enum class DecompositionStatus { DECOMPOSED, INDECOMPOSABLE_CERTIFIED, INCONCLUSIVE };

std::string to_string(DecompositionStatus status);

struct DecompositionReport {
  DecompositionStatus status = DecompositionStatus::INCONCLUSIVE;
  /// Decomposed as Q # k[Z]/Z^2 because gr(Q) is already Gorenstein.
  bool trivial = false;
  std::optional<ArtinAlgebra> r;
  std::optional<ArtinAlgebra> s;
  std::optional<Scalar> unit;
  std::optional<CoordinateChange> change;
  std::vector<Certificate> certificates;
  /// Identities checked along the way.
  std::vector<std::string> verified;
  /// Identities that failed; nonempty only for inconclusive results.
  std::vector<std::string> failures;
};

/// Decomposition through the associated graded ring. When gr(Q) is
/// Gorenstein up to linear socle but not Gorenstein, Q is rewritten in split
/// coordinates and separated into R # S with ll(S) = 2 and
/// gr(R) = gr(Q) / <soc(gr Q) ∩ G_1>. Throws NotGorensteinError and
/// PreconditionError when ll(Q) < 3.
DecompositionReport structure_decompose(const ArtinAlgebra& q);

}  // namespace artinsum
