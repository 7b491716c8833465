// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "artinsum/decompose.hpp"
#include "artinsum/error.hpp"
#include "artinsum/graded.hpp"
#include "artinsum/parser.hpp"
#include "artinsum/resolution.hpp"
#include "artinsum/sums.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace artinsum;

namespace {

using Sizes = std::vector<std::size_t>;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

IdealPresentation presentation(const std::string& text) {
  Presentation p = parse_presentation(text);
  return IdealPresentation(p.ring, p.generators);
}

ArtinAlgebra quadric(const std::vector<std::string>& names, Field f = Field::prime(101)) {
  std::string text;
  for (const auto& x : names) text += (text.empty() ? "" : " + ") + x + "^2";
  return apolar_algebra(parse_polynomial(make_ring(f, names), text), names);
}

ArtinAlgebra sum(const ArtinAlgebra& r, const ArtinAlgebra& s) { return connected_sum({r, s, {}, {}, {}}).algebra; }

std::string text(const ArtinAlgebra& a) { return a.presentation().to_string(); }

std::string sizes(const Sizes& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

bool same(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& v : a.basis()) {
    if (!b.contains(v)) return false;
  }
  return true;
}

/// Gorenstein inputs for the graded suites: sums of constructed pairs, sums of
/// random pairs, and random algebras in three variables.
std::vector<ArtinAlgebra> gorenstein_corpus() {
  std::vector<ArtinAlgebra> out;
  for (const auto& [r, s] : corpus::stretched_short_pairs(25, 9)) out.push_back(sum(r, s));
  for (const auto& [r, s] : corpus::gorenstein_pairs(40, 21)) {
    if (length(r) > 2 && length(s) > 2) out.push_back(sum(r, s));
  }
  std::mt19937_64 rng(33);
  for (int i = 0; i < 40; ++i) out.push_back(corpus::random_gorenstein(Field::prime(101), {"X1", "X2", "X3"}, rng, 4));
  return out;
}

Outcome contraction_golden() {
  Outcome o;
  IdealPresentation i = presentation("field QQ; vars Y1 Z1 Z2; ideal Y1*Z1 - Z2^2, Y1^2, Z1^2");
  IdealPresentation c = contract(i, {"Z1", "Z2"});
  IdealPresentation want = presentation("field QQ; vars Z1 Z2; ideal Z1^2, Z1*Z2^2, Z2^4");
  o.expect(c == want, "contraction is " + c.to_string());
  std::vector<std::string> basis;
  for (const auto& g : c.groebner_basis()) basis.push_back(g.to_string());
  o.expect(basis == std::vector<std::string>{"Z1^2", "Z1*Z2^2", "Z2^4"}, "unexpected reduced basis");
  return o;
}

Outcome additivity() {
  Outcome o;
  for (const auto& [r, s] : corpus::gorenstein_pairs(100, 2024)) {
    const std::string tag = text(r) + " / " + text(s);
    ArtinAlgebra p = fibre_product(r, s).algebra;
    o.expect(length(p) == length(r) + length(s) - 1, "λ(P) on " + tag);
    o.expect(embedding_dimension(p) == embedding_dimension(r) + embedding_dimension(s), "edim(P) on " + tag);
    o.expect(type(p) == type(r) + type(s), "type(P) on " + tag);
    if (loewy_length(r) < 2 || loewy_length(s) < 2) continue;
    ArtinAlgebra q = sum(r, s);
    o.expect(length(q) == length(r) + length(s) - 2, "λ(Q) on " + tag);
    o.expect(embedding_dimension(q) == embedding_dimension(r) + embedding_dimension(s), "edim(Q) on " + tag);
    unsigned n = static_cast<unsigned>(std::max(loewy_length(r), loewy_length(s)) + 2);
    o.expect(oracle::length(q.ring(), q.presentation().generators(), n) == length(q), "truncated λ(Q) on " + tag);
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (const auto& [r, s] : corpus::gorenstein_pairs(100, 2024)) {
    if (length(r) <= 2 || length(s) <= 2) continue;
    ArtinAlgebra q = sum(r, s);
    const std::string tag = text(q);
    SplitCheck c = check_split(q, r.ring()->names, s.ring()->names);
    o.expect(c.ok, "check_split failed on " + tag);
    if (!c.ok) continue;
    o.expect(c.r->presentation() == r.presentation(), "I_R not recovered from " + tag);
    o.expect(c.s->presentation() == s.presentation(), "I_S not recovered from " + tag);
    std::vector<std::size_t> keep;
    for (const auto& name : r.ring()->names) keep.push_back(static_cast<std::size_t>(q.ring()->index_of(name)));
    o.expect(oracle::contraction_length(q.ring(), q.presentation().groebner_basis(), keep,
                                        static_cast<unsigned>(q.loewy_length() + 1)) == length(r),
             "truncated contraction length on " + tag);
  }
  return o;
}

/// gr(R) = G/<soc(G) ∩ G_1> checked through the forward coordinate map: the
/// initial forms of the new Y variables satisfy the relations of gr(R), span
/// the degree one part, and both sides have the same length.
bool graded_part_matches(const ArtinAlgebra& q, const DecompositionReport& d) {
  GradedAlgebra g = associated_graded(q);
  GradedAlgebra a = gls_split(g).gorenstein_part;
  const ArtinAlgebra& aa = a.algebra();
  GradedAlgebra gr = associated_graded(*d.r);
  std::vector<Polynomial> images;
  Subspace linear(q.field(), aa.length());
  for (const auto& name : d.r->ring()->names) {
    std::size_t idx = static_cast<std::size_t>(d.change->new_ring->index_of(name));
    Vec star = g.initial_form(q.image(d.change->forward[idx]));
    Polynomial lifted = g.algebra().lift(star);
    images.push_back(lifted);
    linear.insert(aa.image(lifted));
  }
  for (const auto& rel : gr.presentation().generators()) {
    if (!is_zero(aa.image(rel.substitute(images, g.ring())))) return false;
  }
  return linear.dim() == a.hilbert_function()[1] && gr.algebra().length() == aa.length() &&
         gr.hilbert_function() == a.hilbert_function();
}

Outcome structure_pipeline() {
  Outcome o;
  std::vector<ArtinAlgebra> inputs = {ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y*Z, Z^2 - Y^3")};
  for (const auto& [r, s] : corpus::stretched_short_pairs(25, 5)) inputs.push_back(sum(r, s));
  for (const auto& q : inputs) {
    const std::string tag = text(q);
    DecompositionReport d = structure_decompose(q);
    o.expect(d.status == DecompositionStatus::DECOMPOSED,
             "status " + to_string(d.status) + " on " + tag + (d.failures.empty() ? "" : ": " + d.failures[0]));
    if (d.status != DecompositionStatus::DECOMPOSED) continue;
    o.expect(!d.trivial, "trivial decomposition of " + tag);
    o.expect(loewy_length(*d.s) == 2, "ll(S) != 2 on " + tag);
    o.expect(length(*d.r) + length(*d.s) == length(q) + 2, "λ identity on " + tag);
    o.expect(graded_part_matches(q, d), "gr(R) differs from G/<soc(G) ∩ G_1> on " + tag);
  }
  DecompositionReport first = structure_decompose(inputs[0]);
  o.expect(first.r && text(*first.r) == "field QQ;\nvars Y1;\nideal Y1^4;\n", "stretched example R");
  return o;
}

Outcome poincare() {
  Outcome o;
  ArtinAlgebra y3 = ArtinAlgebra::parse("field QQ; vars Y; ideal Y^3");
  ArtinAlgebra z3 = ArtinAlgebra::parse("field QQ; vars Z; ideal Z^3");
  ArtinAlgebra y4 = ArtinAlgebra::parse("field QQ; vars Y; ideal Y^4");
  ArtinAlgebra y2 = ArtinAlgebra::parse("field QQ; vars Y; ideal Y^2");
  ArtinAlgebra z2 = ArtinAlgebra::parse("field QQ; vars Z; ideal Z^2");
  ArtinAlgebra fp = ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y^2, Z^2, Y*Z");
  ArtinAlgebra cs = ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y*Z, Y^2 - Z^2");

  BettiData a = betti_numbers(y3, 6);
  o.expect(a.betti == Sizes{1, 1, 1, 1, 1, 1, 1}, "β(k[Y]/Y^3) = " + sizes(a.betti));
  BettiData b = betti_numbers(fp, 6);
  o.expect(b.betti == Sizes{1, 2, 4, 8, 16, 32, 64}, "β(k[Y,Z]/(Y^2,Z^2,YZ)) = " + sizes(b.betti));
  BettiData c = betti_numbers(cs, 6);
  o.expect(c.betti == Sizes{1, 2, 3, 4, 5, 6, 7}, "β(k[Y,Z]/(YZ,Y^2-Z^2)) = " + sizes(c.betti));
  o.expect(c.poincare().reciprocal() == SeriesTrunc(6, {1, -2, 1}), "1/P = " + c.poincare().reciprocal().to_string());
  for (const BettiData* x : {&a, &b, &c}) o.expect(x->minimal, "resolution not minimal");

  ArtinAlgebra r2 = quadric({"Y1", "Y2"});
  ArtinAlgebra s2 = quadric({"Z1", "Z2"});
  ArtinAlgebra s1 = quadric({"Z"});
  std::vector<std::pair<ArtinAlgebra, ArtinAlgebra>> pairs = {{y3, z3}, {y4, z3}, {y2, z2}, {r2, s2}, {r2, s1}};
  for (const auto& [r, s] : pairs) {
    const std::string tag = text(r) + " / " + text(s);
    SeriesCheck f = verify_fp_series(r, s, fibre_product(r, s).algebra);
    o.expect(f.holds, "fibre product identity on " + tag + ": " + f.lhs.to_string() + " vs " + f.rhs.to_string());
    if (loewy_length(r) < 2 || loewy_length(s) < 2) continue;
    SeriesCheck q = verify_cs_series(r, s, sum(r, s));
    o.expect(q.holds, "connected sum identity on " + tag + ": " + q.lhs.to_string() + " vs " + q.rhs.to_string());
  }
  for (const auto& t : {cs, quadric({"Y1", "Y2", "Y3"}), sum(r2, s2)}) {
    SeriesCheck q = verify_socle_quotient(t);
    o.expect(q.holds, "socle quotient identity on " + text(t));
  }
  return o;
}

Outcome mu_formulas() {
  Outcome o;
  struct Case {
    ArtinAlgebra r, s;
    int psi;
  };
  std::vector<Case> cases = {
      {ArtinAlgebra::parse("field QQ; vars Y; ideal Y^3"), ArtinAlgebra::parse("field QQ; vars Z; ideal Z^3"), -1},
      {quadric({"Y1", "Y2"}), ArtinAlgebra::parse("field GF(101); vars Z; ideal Z^4"), 0},
      {quadric({"Y1", "Y2"}), quadric({"Z1", "Z2"}), 1},
  };
  for (const auto& c : cases) {
    MuReport m = verify_mu_formulas(c.r, c.s);
    const std::string tag = "m=" + std::to_string(m.m) + ",n=" + std::to_string(m.n);
    o.expect(m.fibre_holds, "μ(I_P) formula at " + tag);
    o.expect(m.connected_holds, "μ(I_Q) formula at " + tag);
    o.expect(m.direct_agrees, "betti and direct counts disagree at " + tag);
    o.expect(m.psi == c.psi && m.expected_psi == c.psi, "ψ = " + std::to_string(m.psi) + " at " + tag);
    o.expect(relation_count(sum(c.r, c.s)) == m.mu_q, "direct μ(I_Q) at " + tag);
  }
  return o;
}

bool has(const std::vector<Certificate>& cs, CertificateKind kind) {
  for (const auto& c : cs) {
    if (c.kind == kind) return true;
  }
  return false;
}

Outcome certificates() {
  Outcome o;
  auto check_sum = [&](const ArtinAlgebra& r, const ArtinAlgebra& s) {
    ArtinAlgebra q = sum(r, s);
    const std::size_t m = embedding_dimension(r), n = embedding_dimension(s);
    const Sizes h = hilbert_function(q);
    const std::size_t h2 = h.size() > 2 ? h[2] : 0;
    o.expect(h2 <= (m + n + 1) * (m + n) / 2 - m * n, "H(2) bound on " + text(q));
    o.expect(h2_bound_check(r, s, q), "h2_bound_check on " + text(q));
    o.expect(certify_indecomposable(q).empty(), "certificate fired on the sum " + text(q));
  };
  for (const auto& [r, s] : corpus::gorenstein_pairs(100, 2024)) {
    if (length(r) > 2 && length(s) > 2) check_sum(r, s);
  }
  for (const auto& [r, s] : corpus::stretched_short_pairs(25, 5)) check_sum(r, s);

  auto ci = certify_indecomposable(ArtinAlgebra::parse("field QQ; vars X1 X2 X3; ideal X1^2, X2^2, X3^2"));
  o.expect(has(ci, CertificateKind::COMPLETE_INTERSECTION), "no complete intersection certificate");

  // A generic quartic in three variables has H = (1,3,6,3,1), compressed.
  Field f = Field::prime(101);
  RingPtr dual = make_ring(f, {"Z1", "Z2", "Z3"});
  std::mt19937_64 rng(7);
  bool found = false;
  for (int attempt = 0; attempt < 20 && !found; ++attempt) {
    ArtinAlgebra q = apolar_algebra(corpus::random_dual(dual, rng, 4, true));
    if (hilbert_function(q) != Sizes{1, 3, 6, 3, 1}) continue;
    found = true;
    o.expect(classify(q).compressed, "generic quartic not classified compressed");
    o.expect(has(certify_indecomposable(q), CertificateKind::COMPRESSED), "no compressed certificate on " + text(q));
  }
  o.expect(found, "no generic quartic found");
  return o;
}

Outcome iarrobino_values() {
  Outcome o;
  std::size_t stretched = 0, short_ones = 0;
  for (const auto& q : gorenstein_corpus()) {
    if (loewy_length(q) < 2) continue;
    const std::string tag = text(q);
    IarrobinoResult r = iarrobino(q);
    o.expect(is_gorenstein(r.q0.algebra()), "Q0 not Gorenstein on " + tag);
    o.expect(r.q0.top_degree() == loewy_length(q), "socle degree of Q0 on " + tag);
    const Sizes h = hilbert_function(q);
    const Sizes h0 = r.q0.hilbert_function();
    Classification c = classify(h);
    if (c.stretched) {
      ++stretched;
      o.expect(h0 == Sizes(h.size(), 1), "H(Q0) = " + sizes(h0) + " on stretched " + tag);
    } else if (c.is_short) {
      ++short_ones;
      o.expect(h0 == Sizes{1, h[2], h[2], 1}, "H(Q0) = " + sizes(h0) + " on short " + tag);
    }
  }
  o.expect(stretched > 0 && short_ones > 0, "corpus lacks stretched or short inputs");
  o.detail = o.pass ? std::to_string(stretched) + " stretched, " + std::to_string(short_ones) + " short" : o.detail;
  return o;
}

Outcome socle_lemma() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& q : gorenstein_corpus()) {
    const std::size_t s = loewy_length(q);
    if (s < 3) continue;
    GradedAlgebra g = associated_graded(q);
    if (is_gorenstein(g.algebra()) || !is_gls(g).holds) continue;
    ++instances;
    const std::string tag = text(q);
    Subspace w = annihilator(q, q.power(2).basis()).space;
    o.expect(same(w.intersect(q.power(2)), q.power(s - 1)), "(0:m^2) ∩ m^2 != m^{s-1} on " + tag);
    o.expect(w.dim() - q.power(s - 1).dim() == type(g.algebra()) - 1, "dim (0:m^2)/m^{s-1} on " + tag);
    std::optional<SplitWitness> sw = split_witness(q);
    o.expect(sw.has_value() && sw->z.size() == type(g.algebra()) - 1, "witness count on " + tag);
    if (!sw) continue;
    const Subspace soc = socle(q);
    for (const auto& z : sw->z) {
      o.expect(w.contains(z), "witness outside (0:m^2) on " + tag);
      o.expect(same(product(q, span(q, {z}), q.maximal_ideal()), soc), "w m != soc(Q) on " + tag);
    }
  }
  o.expect(instances >= 25, "only " + std::to_string(instances) + " instances");
  o.detail = o.pass ? std::to_string(instances) + " instances" : o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "contraction golden", 1.0, contraction_golden},
      {2, "additivity on 100 random pairs", 30.0, additivity},
      {3, "round-trip decomposition", 0.0, round_trip},
      {4, "structure pipeline", 10.0, structure_pipeline},
      {5, "Poincare identities to t^6", 60.0, poincare},
      {6, "mu formulas", 0.0, mu_formulas},
      {7, "H(2) bound and certificates", 0.0, certificates},
      {8, "Iarrobino Q0 Hilbert functions", 0.0, iarrobino_values},
      {9, "(0:m^2) lemma suite", 0.0, socle_lemma},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail = "time limit " + std::to_string(c.limit_seconds) + " s exceeded";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s  %-32s %7.2f s  %zu checks%s%s\n", c.number, o.pass ? "PASS" : "FAIL",
                c.name.c_str(), seconds, o.checked, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
