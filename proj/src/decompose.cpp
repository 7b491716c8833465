#include "artinsum/decompose.hpp"

#include <algorithm>
#include <set>

#include "artinsum/error.hpp"

namespace artinsum {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Matrix multiplication_matrix(const ArtinAlgebra& a, const Vec& v) {
  Matrix m(a.field(), a.length(), a.length());
  for (std::size_t j = 0; j < a.length(); ++j) m.set_column(j, a.multiply(v, a.basis_vector(j)));
  return m;
}

/// f evaluated at the given elements of A, one per variable of f's ring.
Vec evaluate(const ArtinAlgebra& a, const Polynomial& f, const std::vector<Vec>& values) {
  Vec out = a.zero();
  for (const auto& t : f.terms()) {
    Vec v = a.one();
    for (std::size_t i = 0; i < t.monomial.nvars(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v = a.multiply(v, values[i]);
    }
    axpy(out, t.coefficient, v);
  }
  return out;
}

Subspace power_of(const ArtinAlgebra& a, const Subspace& ideal, std::size_t r) {
  Subspace p = ideal;
  for (std::size_t k = 1; k < r; ++k) p = product(a, p, ideal);
  return p;
}

std::string fresh_name(const Ring& ring, const std::string& stem) {
  if (ring.index_of(stem) < 0) return stem;
  for (int k = 1;; ++k) {
    std::string name = stem + std::to_string(k);
    if (ring.index_of(name) < 0) return name;
  }
}

/// The ideal I_R + I_S + <Y Z> + <Δ_R - u Δ_S> in the ring of Q.
IdealPresentation sum_ideal(const ArtinAlgebra& q, const ArtinAlgebra& r, const ArtinAlgebra& s,
                            const Polynomial& dr, const Polynomial& ds, const Scalar& u) {
  const RingPtr& ring = q.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : r.presentation().groebner_basis()) gens.push_back(g.embed(ring));
  for (const auto& g : s.presentation().groebner_basis()) gens.push_back(g.embed(ring));
  for (const auto& y : r.ring()->names) {
    for (const auto& z : s.ring()->names) {
      gens.push_back(Polynomial::variable(ring, y) * Polynomial::variable(ring, z));
    }
  }
  gens.push_back(dr.embed(ring) - u * ds.embed(ring));
  return IdealPresentation(ring, std::move(gens));
}

}  // namespace

// ---------------------------------------------------------------- check_split

SplitCheck check_split(const ArtinAlgebra& q, const std::vector<std::string>& ys,
                       const std::vector<std::string>& zs) {
  if (!is_gorenstein(q)) throw NotGorensteinError("Q is not Gorenstein");
  const Ring& ring = *q.ring();
  std::set<std::string> seen;
  for (const auto* side : {&ys, &zs}) {
    if (side->empty()) throw PreconditionError("both sides of the partition must be nonempty");
    for (const auto& name : *side) {
      if (ring.index_of(name) < 0) throw PreconditionError("unknown variable " + name + " in partition");
      if (!seen.insert(name).second) throw PreconditionError("variable " + name + " appears twice in partition");
    }
  }
  if (seen.size() != ring.nvars()) throw PreconditionError("partition does not cover every variable");

  SplitCheck out;
  for (const auto& y : ys) {
    for (const auto& z : zs) {
      Polynomial p = Polynomial::variable(q.ring(), y) * Polynomial::variable(q.ring(), z);
      if (!q.presentation().contains(p)) out.offending.push_back(y + "*" + z);
    }
  }
  if (!out.offending.empty()) {
    std::string list;
    for (const auto& o : out.offending) list += (list.empty() ? "" : ", ") + o;
    out.reasons.push_back("products not in the ideal: " + list);
  }
  out.r = ArtinAlgebra::build(contract(q.presentation(), ys));
  out.s = ArtinAlgebra::build(contract(q.presentation(), zs));
  for (const auto& [alg, label] : {std::pair{&*out.r, "Y"}, std::pair{&*out.s, "Z"}}) {
    std::size_t t = type(*alg);
    if (t != 1) {
      out.reasons.push_back(std::string("contraction to the ") + label + " variables has type " + std::to_string(t));
    }
  }
  if (!out.reasons.empty()) return out;

  if (length(*out.r) + length(*out.s) != length(q) + 2) {
    out.reasons.push_back("lengths do not satisfy λ(R) + λ(S) = λ(Q) + 2");
    return out;
  }
  Polynomial dr = socle_generator(*out.r);
  Polynomial ds = socle_generator(*out.s);
  Vec vr = q.image(dr.embed(q.ring()));
  Vec vs = q.image(ds.embed(q.ring()));
  std::size_t p = pivot_of(vs);
  if (p == vs.size() || is_zero(vr)) {
    out.reasons.push_back("a socle generator of a contraction vanishes in Q");
    return out;
  }
  Scalar u = vr[p] / vs[p];
  if (!(vr == scaled(u, vs))) {
    out.reasons.push_back("socle generators of the contractions are not proportional in Q");
    return out;
  }
  out.unit = u;
  if (!(sum_ideal(q, *out.r, *out.s, dr, ds, u) == q.presentation())) {
    out.reasons.push_back("the connected sum of the contractions differs from Q");
    return out;
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------- split_witness

std::optional<SplitWitness> split_witness(const ArtinAlgebra& q) {
  if (!is_gorenstein(q)) throw NotGorensteinError("Q is not Gorenstein");
  const std::size_t s = q.loewy_length();
  if (s < 3) throw PreconditionError("Loewy length " + std::to_string(s) + " is below 3");
  GradedAlgebra g = associated_graded(q);
  GlsResult gls = is_gls(g);
  if (!gls.holds) throw PreconditionError("gr(Q) is not Gorenstein up to linear socle");
  const std::size_t n = gls.witness.size();
  if (n == 0) return std::nullopt;

  const Subspace& m = q.maximal_ideal();
  Subspace w = annihilator(q, q.power(2).basis()).space;
  if (!(w.intersect(q.power(2)) == q.power(s - 1))) {
    throw PreconditionError("(0:m^2) ∩ m^2 differs from m^{s-1}");
  }
  SplitWitness out;
  out.z = q.power(s - 1).complement_in(w);
  if (out.z.size() != n) {
    throw PreconditionError("dim (0:m^2)/m^{s-1} = " + std::to_string(out.z.size()) + " but type(gr Q) - 1 = " +
                            std::to_string(n));
  }
  Subspace soc = socle(q);
  for (const auto& z : out.z) {
    if (!(product(q, span(q, {z}), m) == soc)) throw PreconditionError("a witness w does not satisfy w m = soc(Q)");
  }
  out.j = ideal_generated(q, out.z);
  out.i = annihilator(q, out.j.basis()).space;
  out.y = minimal_generators(q, out.i).representatives;

  if (!product(q, out.j, q.power(2)).empty()) throw PreconditionError("J m^2 != 0");
  if (!soc.contains(product(q, out.j, m))) throw PreconditionError("J m is not inside soc(Q)");
  if (!product(q, out.i, out.j).empty()) throw PreconditionError("I J != 0");
  if (!(out.i.sum(out.j) == m)) throw PreconditionError("I + J != m");
  for (std::size_t r = 2; r <= s + 1; ++r) {
    if (!(power_of(q, out.i, r) == q.power(r))) throw PreconditionError("m^" + std::to_string(r) + " != I^" + std::to_string(r));
  }
  if (minimal_generators(q, out.j).count != n) throw PreconditionError("μ(J) != type(gr Q) - 1");
  if (out.y.size() + n != embedding_dimension(q)) throw PreconditionError("μ(I) + μ(J) != edim(Q)");

  // Split coordinates: Y_i -> y_i, Z_j -> z_j.
  CoordinateChange& c = out.change;
  c.old_ring = q.ring();
  std::vector<std::string> names;
  std::vector<Vec> values;
  for (std::size_t i = 0; i < out.y.size(); ++i) {
    names.push_back("Y" + std::to_string(i + 1));
    values.push_back(out.y[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    names.push_back("Z" + std::to_string(j + 1));
    values.push_back(out.z[j]);
  }
  c.new_ring = make_ring(q.field(), names);
  std::vector<Matrix> actions;
  for (const auto& v : values) {
    actions.push_back(multiplication_matrix(q, v));
    c.forward.push_back(q.lift(v));
  }
  c.rewritten = kernel_presentation(c.new_ring, actions, q.one());
  std::vector<Monomial> standard = standard_monomials(c.rewritten);
  if (standard.size() != q.length()) throw Error("split coordinates do not generate Q");
  std::vector<Vec> images;
  for (const auto& mono : standard) {
    images.push_back(evaluate(q, Polynomial::term(c.new_ring, mono, c.new_ring->unit()), values));
  }
  for (std::size_t k = 0; k < q.nvars(); ++k) {
    auto coeffs = solve(q.field(), images, q.variable(k));
    if (!coeffs) throw Error("old variable is not expressible in split coordinates");
    std::vector<Term> terms;
    for (std::size_t t = 0; t < standard.size(); ++t) terms.push_back({standard[t], (*coeffs)[t]});
    c.inverse.push_back(Polynomial::from_terms(c.new_ring, std::move(terms)));
  }
  // Both composites are the identity on Q.
  for (std::size_t k = 0; k < q.nvars(); ++k) {
    if (!(evaluate(q, c.inverse[k], values) == q.variable(k))) throw Error("inverse coordinate change is wrong");
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    Polynomial back = c.forward[j].substitute(c.inverse, c.new_ring) - Polynomial::variable(c.new_ring, j);
    if (!c.rewritten.contains(back)) throw Error("forward coordinate change is not inverted");
  }
  return out;
}

// ---------------------------------------------------------------- certificates

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::HILBERT2: return "HILBERT2";
    case CertificateKind::COMPLETE_INTERSECTION: return "COMPLETE_INTERSECTION";
    case CertificateKind::COMPRESSED: return "COMPRESSED";
  }
  return "UNKNOWN";
}

std::vector<Certificate> certify_indecomposable(const ArtinAlgebra& q) {
  std::vector<Certificate> out;
  if (!is_gorenstein(q)) return out;
  auto h = hilbert_function(q);
  const std::size_t d = embedding_dimension(q);
  const std::size_t h2 = h.size() > 2 ? h[2] : 0;
  const std::uint64_t threshold = binomial(d, 2) + 2;
  if (h2 >= threshold) {
    out.push_back({CertificateKind::HILBERT2,
                   "H(2) = " + std::to_string(h2) + " >= C(" + std::to_string(d) + ",2) + 2 = " + std::to_string(threshold)});
  }
  if (d >= 3) {
    std::size_t mu = relation_count(q);
    if (mu == d) {
      out.push_back({CertificateKind::COMPLETE_INTERSECTION,
                     "complete intersection: μ(I) = edim = " + std::to_string(d)});
    }
  }
  const std::size_t s = q.loewy_length();
  if (s >= 4 && classify(h).compressed) {
    out.push_back({CertificateKind::COMPRESSED, "compressed with Loewy length " + std::to_string(s)});
  }
  return out;
}

bool h2_bound_check(const ArtinAlgebra& r, const ArtinAlgebra& s, const ArtinAlgebra& q) {
  const std::uint64_t m = embedding_dimension(r);
  const std::uint64_t n = embedding_dimension(s);
  auto h = hilbert_function(q);
  const std::uint64_t h2 = h.size() > 2 ? h[2] : 0;
  return h2 + m * n <= binomial(m + n + 1, 2);
}

// ---------------------------------------------------------------- structure decomposition

std::string to_string(DecompositionStatus status) {
  switch (status) {
    case DecompositionStatus::DECOMPOSED: return "decomposed";
    case DecompositionStatus::INDECOMPOSABLE_CERTIFIED: return "indecomposable-certified";
    case DecompositionStatus::INCONCLUSIVE: return "inconclusive";
  }
  return "unknown";
}

DecompositionReport structure_decompose(const ArtinAlgebra& q) {
  if (!is_gorenstein(q)) throw NotGorensteinError("Q is not Gorenstein");
  const std::size_t s = q.loewy_length();
  if (s < 3) throw PreconditionError("Loewy length " + std::to_string(s) + " is below 3");
  DecompositionReport out;
  GradedAlgebra g = associated_graded(q);
  GlsResult gls = is_gls(g);

  if (gls.holds && gls.witness.empty()) {
    out.status = DecompositionStatus::DECOMPOSED;
    out.trivial = true;
    out.r = q;
    RingPtr ring = make_ring(q.field(), {fresh_name(*q.ring(), "Z")});
    Polynomial z = Polynomial::variable(ring, 0);
    out.s = ArtinAlgebra::build(IdealPresentation(ring, {z * z}));
    out.unit = Scalar::one(q.field());
    out.verified.push_back("gr(Q) is Gorenstein, so Q = Q # k[Z]/Z^2 is the trivial decomposition");
    return out;
  }
  if (!gls.holds) {
    out.certificates = certify_indecomposable(q);
    out.status = out.certificates.empty() ? DecompositionStatus::INCONCLUSIVE
                                          : DecompositionStatus::INDECOMPOSABLE_CERTIFIED;
    return out;
  }

  std::optional<SplitWitness> witness = split_witness(q);
  if (!witness) throw Error("split witness missing for a non-Gorenstein graded ring");
  out.verified.push_back("(0:m^2) ∩ m^2 = m^{s-1}");
  out.verified.push_back("dim (0:m^2)/m^{s-1} = type(gr Q) - 1 = " + std::to_string(witness->z.size()));
  out.verified.push_back("w m = soc(Q) for every witness w");
  out.verified.push_back("J m^2 = 0, I J = 0, I + J = m, m^r = I^r for r >= 2, μ(I) + μ(J) = edim(Q)");
  const CoordinateChange& change = witness->change;
  ArtinAlgebra split = ArtinAlgebra::build(change.rewritten);
  std::vector<std::string> ys, zs;
  for (const auto& name : change.new_ring->names) (name[0] == 'Y' ? ys : zs).push_back(name);
  SplitCheck check = check_split(split, ys, zs);
  out.change = change;
  if (!check.ok) {
    out.failures = check.reasons;
    return out;
  }
  out.r = check.r;
  out.s = check.s;
  out.unit = check.unit;
  out.verified.push_back("Y_i Z_j in I_Q and both contractions Gorenstein in split coordinates");
  out.verified.push_back("Q = R # S with the reported unit");

  if (loewy_length(*out.s) == 2) {
    out.verified.push_back("ll(S) = 2");
  } else {
    out.failures.push_back("ll(S) = " + std::to_string(loewy_length(*out.s)));
  }
  if (length(*out.r) + length(*out.s) == length(q) + 2) {
    out.verified.push_back("λ(R) + λ(S) = λ(Q) + 2");
  } else {
    out.failures.push_back("λ(R) + λ(S) != λ(Q) + 2");
  }

  // gr(R) against G/<soc(G) ∩ G_1>, through Y_i -> y_i*.
  GradedAlgebra a = gls_split(g).gorenstein_part;
  const ArtinAlgebra& aa = a.algebra();
  std::vector<Matrix> actions;
  for (const auto& name : out.r->ring()->names) {
    std::size_t idx = static_cast<std::size_t>(std::stoul(name.substr(1))) - 1;
    Vec star = g.initial_form(witness->y[idx]);
    actions.push_back(multiplication_matrix(aa, aa.image(g.algebra().lift(star))));
  }
  IdealPresentation induced = kernel_presentation(out.r->ring(), actions, aa.one());
  if (induced == associated_graded(*out.r).presentation()) {
    out.verified.push_back("gr(R) = gr(Q)/<soc(gr Q) ∩ G_1> under Y_i -> y_i*");
  } else {
    out.failures.push_back("gr(R) differs from gr(Q)/<soc(gr Q) ∩ G_1>");
  }
  out.status = out.failures.empty() ? DecompositionStatus::DECOMPOSED : DecompositionStatus::INCONCLUSIVE;
  return out;
}

}  // namespace artinsum
