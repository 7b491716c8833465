#include "artinsum/sums.hpp"

#include <algorithm>
#include <map>

#include "artinsum/error.hpp"

namespace artinsum {

namespace {

void check_compatible(const ArtinAlgebra& r, const ArtinAlgebra& s) {
  if (!(r.field() == s.field())) throw MismatchError("factors are over different fields");
  for (const auto& name : r.ring()->names) {
    if (s.ring()->index_of(name) >= 0) {
      throw PreconditionError("variable " + name + " occurs in both factors");
    }
  }
}

RingPtr joint_ring(const ArtinAlgebra& r, const ArtinAlgebra& s) {
  std::vector<std::string> names = r.ring()->names;
  names.insert(names.end(), s.ring()->names.begin(), s.ring()->names.end());
  return make_ring(r.field(), std::move(names));
}

std::vector<Polynomial> fibre_generators(const ArtinAlgebra& r, const ArtinAlgebra& s, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : r.presentation().groebner_basis()) gens.push_back(g.embed(ring));
  for (const auto& g : s.presentation().groebner_basis()) gens.push_back(g.embed(ring));
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    for (std::size_t j = 0; j < s.nvars(); ++j) {
      gens.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, r.nvars() + j));
    }
  }
  return gens;
}

/// Canonical form of a prescribed socle element; throws BadSocleError unless
/// it spans the (one-dimensional) socle.
Polynomial checked_socle_element(const ArtinAlgebra& a, const Polynomial& delta, const char* side) {
  Vec v;
  try {
    v = a.image(delta);
  } catch (const MismatchError&) {
    throw BadSocleError(std::string(side) + " socle element is not a polynomial over its factor");
  }
  if (is_zero(v) || !socle(a).contains(v)) {
    throw BadSocleError(std::string(side) + " socle element " + delta.to_string() + " does not generate the socle");
  }
  return a.lift(v);
}

}  // namespace

SumResult fibre_product(const ArtinAlgebra& r, const ArtinAlgebra& s) {
  check_compatible(r, s);
  if (r.length() == 1) return {s, true};
  if (s.length() == 1) return {r, true};
  RingPtr ring = joint_ring(r, s);
  return {ArtinAlgebra::build(IdealPresentation(ring, fibre_generators(r, s, ring))), false};
}

Polynomial socle_generator(const ArtinAlgebra& r) {
  Subspace soc = socle(r);
  if (soc.dim() != 1) throw NotGorensteinError("socle has dimension " + std::to_string(soc.dim()));
  // Basis vectors run from the largest standard monomial down, so the pivot of
  // the echelon row is the largest monomial in its support.
  return r.lift(soc.basis().front());
}

SumResult connected_sum(const ConnectedSumSpec& spec) {
  const ArtinAlgebra& r = spec.left;
  const ArtinAlgebra& s = spec.right;
  check_compatible(r, s);
  if (r.length() == 1 || s.length() == 1) throw PreconditionError("a connected sum factor equals k");
  if (!is_gorenstein(r)) throw NotGorensteinError("left factor is not Gorenstein");
  if (!is_gorenstein(s)) throw NotGorensteinError("right factor is not Gorenstein");
  Polynomial dr = checked_socle_element(r, spec.socle_left ? *spec.socle_left : socle_generator(r), "left");
  Polynomial ds = checked_socle_element(s, spec.socle_right ? *spec.socle_right : socle_generator(s), "right");
  Scalar u = spec.unit ? *spec.unit : Scalar::one(r.field());
  if (u.is_zero()) throw PreconditionError("the unit must be nonzero");
  if (!(u.field() == r.field())) throw MismatchError("unit lies in a different field");
  if (s.length() == 2) return {r, true};
  if (r.length() == 2) return {s, true};
  RingPtr ring = joint_ring(r, s);
  std::vector<Polynomial> gens = fibre_generators(r, s, ring);
  gens.push_back(dr.embed(ring) - u * ds.embed(ring));
  return {ArtinAlgebra::build(IdealPresentation(ring, std::move(gens))), false};
}

ArtinAlgebra apolar_algebra(const Polynomial& f, std::vector<std::string> names) {
  if (f.is_zero()) throw PreconditionError("the dual polynomial must be nonzero");
  const RingPtr& dual = f.ring();
  const std::size_t n = dual->nvars();
  const std::uint64_t p = f.field().characteristic();
  if (p != 0 && static_cast<std::uint64_t>(f.degree()) >= p) {
    throw PreconditionError("characteristic " + std::to_string(p) + " is too small for degree " +
                            std::to_string(f.degree()));
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  }
  if (names.size() != n) throw MismatchError("one name per dual variable is required");
  RingPtr ring = make_ring(f.field(), std::move(names));

  // Every monomial dividing a term of F; the span is closed under differentiation.
  std::map<std::vector<unsigned>, std::size_t> index;
  std::vector<Monomial> monos;
  std::vector<Monomial> pending;
  for (const auto& t : f.terms()) pending.push_back(t.monomial);
  while (!pending.empty()) {
    Monomial m = pending.back();
    pending.pop_back();
    if (index.count(m.exponents())) continue;
    index[m.exponents()] = monos.size();
    monos.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Monomial d = m;
      d.set(i, m[i] - 1);
      pending.push_back(d);
    }
  }
  const std::size_t dim = monos.size();
  std::vector<Matrix> actions;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a(f.field(), dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Monomial& m = monos[j];
      if (m[i] == 0) continue;
      Monomial d = m;
      d.set(i, m[i] - 1);
      a.at(index.at(d.exponents()), j) = Scalar(f.field(), static_cast<std::int64_t>(m[i]));
    }
    actions.push_back(std::move(a));
  }
  Vec start = zero_vector(f.field(), dim);
  for (const auto& t : f.terms()) start[index.at(t.monomial.exponents())] = t.coefficient;
  return ArtinAlgebra::build(kernel_presentation(ring, actions, start));
}

namespace {

/// The constant Δ(∂) F for a socle element Δ of apolar(F).
Scalar socle_pairing(const Polynomial& delta, const Polynomial& f) {
  const RingPtr& dual = f.ring();
  Polynomial total(dual);
  for (const auto& t : delta.terms()) {
    Polynomial g = f;
    for (std::size_t i = 0; i < t.monomial.nvars(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) {
        std::vector<Term> terms;
        for (const auto& ft : g.terms()) {
          if (ft.monomial[i] == 0) continue;
          Monomial d = ft.monomial;
          d.set(i, ft.monomial[i] - 1);
          terms.push_back({d, Scalar(f.field(), static_cast<std::int64_t>(ft.monomial[i])) * ft.coefficient});
        }
        g = Polynomial::from_terms(dual, std::move(terms));
      }
    }
    total += t.coefficient * g;
  }
  if (!total.is_constant()) throw Error("socle element does not reduce F to a constant");
  return total.coefficient(dual->one());
}

}  // namespace

ApolarSumReport apolar_sum_check(const Polynomial& f, const Polynomial& g) {
  ApolarSumReport out;
  if (!(f.field() == g.field())) throw MismatchError("dual polynomials over different fields");
  std::vector<std::string> names = f.ring()->names;
  for (const auto& name : g.ring()->names) {
    if (f.ring()->index_of(name) >= 0) throw PreconditionError("dual variable " + name + " is shared");
    names.push_back(name);
  }
  RingPtr joint = make_ring(f.field(), names);
  ArtinAlgebra q = apolar_algebra(f.embed(joint) + g.embed(joint), names);
  ArtinAlgebra r = apolar_algebra(f, f.ring()->names);
  ArtinAlgebra s = apolar_algebra(g, g.ring()->names);
  out.sum_presentation = q.presentation();
  if (r.length() <= 2 || s.length() <= 2) {
    out.detail = "a factor has length at most 2";
    return out;
  }
  Polynomial dr = socle_generator(r);
  Polynomial ds = socle_generator(s);
  Scalar u = socle_pairing(dr, f) / socle_pairing(ds, g);
  out.unit = u;
  ConnectedSumSpec spec{r, s, dr, ds, u};
  SumResult c = connected_sum(spec);
  out.connected_presentation = c.algebra.presentation();
  out.match = out.sum_presentation == out.connected_presentation;
  out.detail = out.match ? "presentations agree" : "presentations differ";
  return out;
}

}  // namespace artinsum
