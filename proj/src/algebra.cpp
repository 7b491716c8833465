#include "artinsum/algebra.hpp"

#include <algorithm>
#include <map>

#include "artinsum/error.hpp"
#include "artinsum/parser.hpp"

namespace artinsum {

namespace {

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

void add_scaled(Vec& y, const Scalar& c, const SparseVec& x) {
  if (c.is_zero()) return;
  Scalar minus = -c;
  for (const auto& [i, s] : x) y[i].subtract_product(minus, s);
}

}  // namespace

ArtinAlgebra ArtinAlgebra::parse(std::string_view text) {
  Presentation p = parse_presentation(text);
  return build(IdealPresentation(p.ring, p.generators));
}

ArtinAlgebra ArtinAlgebra::build(const IdealPresentation& presentation) {
  if (presentation.is_unit()) throw UnitIdealError("the ideal contains 1");
  if (!is_zero_dimensional(presentation)) {
    throw NotZeroDimensionalError("the quotient is not finite-dimensional");
  }
  ArtinAlgebra a = build_local(presentation);
  a.source_ = presentation;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    a.source_images_.push_back(Polynomial::variable(a.ring(), i));
  }
  std::size_t edim = a.power(1).dim() - a.power(2).dim();
  if (edim == a.nvars()) return a;

  // Keep the variables that stay independent modulo m^2, in declaration order.
  Subspace seen = a.power(2);
  std::vector<std::string> kept;
  std::vector<Matrix> kept_actions;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (seen.insert(a.variable(i))) {
      kept.push_back(a.ring()->names[i]);
      kept_actions.push_back(a.action(i));
    }
  }
  RingPtr ring = make_ring(a.field(), kept);
  ArtinAlgebra b = build_local(kernel_presentation(ring, kept_actions, a.one()));
  // Express the source variables through the kept ones.
  std::vector<Vec> old_coords;
  for (const auto& m : b.basis()) {
    old_coords.push_back(a.image(Polynomial::term(ring, m, ring->unit()).embed(a.ring())));
  }
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    auto c = solve(a.field(), old_coords, a.variable(i));
    if (!c) throw Error("kept variables do not generate the algebra");
    std::vector<Term> terms;
    for (std::size_t j = 0; j < c->size(); ++j) terms.push_back({b.basis()[j], (*c)[j]});
    b.source_images_.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  b.source_ = presentation;
  b.minimalized_ = true;
  return b;
}

ArtinAlgebra ArtinAlgebra::build_local(const IdealPresentation& presentation) {
  ArtinAlgebra a;
  a.presentation_ = presentation;
  a.basis_ = standard_monomials(presentation);
  std::reverse(a.basis_.begin(), a.basis_.end());
  const std::size_t len = a.basis_.size();
  const std::size_t n = a.nvars();
  if (len == 0) throw UnitIdealError("the ideal contains 1");
  for (std::size_t j = 0; j < len; ++j) a.index_.emplace(a.basis_[j], j);
  const auto& gb = presentation.groebner_basis();
  const RingPtr& ring = a.ring();

  a.actions_.assign(n, std::vector<SparseVec>(len));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < len; ++j) {
      Monomial m = a.basis_[j] * Monomial::variable(n, v);
      auto it = a.index_.find(m);
      if (it != a.index_.end()) {
        a.actions_[v][j] = {{static_cast<std::uint32_t>(it->second), ring->unit()}};
        continue;
      }
      Polynomial nf = normal_form(Polynomial::term(ring, m, ring->unit()), gb);
      SparseVec sv;
      for (const auto& t : nf.terms()) {
        sv.emplace_back(static_cast<std::uint32_t>(a.index_.at(t.monomial)), t.coefficient);
      }
      std::sort(sv.begin(), sv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      a.actions_[v][j] = std::move(sv);
    }
  }

  // Multiplication table, built up from smaller monomials: b_j = x_v * b_p.
  a.table_.assign(len * len, {});
  for (std::size_t jj = len; jj-- > 0;) {
    const Monomial& bj = a.basis_[jj];
    if (bj.is_one()) {
      for (std::size_t k = 0; k < len; ++k) {
        a.table_[jj * len + k] = {{static_cast<std::uint32_t>(k), ring->unit()}};
      }
      continue;
    }
    std::size_t v = 0;
    while (bj[v] == 0) ++v;
    std::size_t p = a.index_.at(Monomial::variable(n, v).quotient_of(bj));
    for (std::size_t k = 0; k < len; ++k) {
      Vec acc = a.zero();
      for (const auto& [idx, c] : a.table_[p * len + k]) add_scaled(acc, c, a.actions_[v][idx]);
      a.table_[jj * len + k] = to_sparse(acc);
    }
  }

  // m-adic filtration by repeated multiplication with the variables.
  a.filtration_.push_back(Subspace::whole(a.field(), len));
  while (true) {
    const Subspace& last = a.filtration_.back();
    Subspace next(a.field(), len);
    for (const auto& row : last.basis()) {
      for (std::size_t v = 0; v < n; ++v) next.insert(a.times_variable(v, row));
    }
    if (next.dim() == last.dim() && next.dim() > 0) {
      throw NotLocalError("the quotient is not local at the origin");
    }
    a.filtration_.push_back(std::move(next));
    if (a.filtration_.back().empty()) break;
  }
  return a;
}

std::size_t ArtinAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw PreconditionError("not a standard monomial");
  return it->second;
}

Vec ArtinAlgebra::variable(std::size_t i) const { return times_variable(i, one()); }

Vec ArtinAlgebra::times_variable(std::size_t i, const Vec& v) const {
  if (i >= nvars()) throw MismatchError("variable index out of range");
  if (v.size() != length()) throw MismatchError("vector not in the algebra");
  Vec out = zero();
  for (std::size_t j = 0; j < v.size(); ++j) add_scaled(out, v[j], actions_[i][j]);
  return out;
}

Vec ArtinAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != length() || b.size() != length()) throw MismatchError("vector not in the algebra");
  Vec out = zero();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k].is_zero()) continue;
      add_scaled(out, a[j] * b[k], table(j, k));
    }
  }
  return out;
}

Vec ArtinAlgebra::image(const Polynomial& f) const {
  Polynomial g = f;
  if (!same_ring(f.ring(), ring())) {
    if (!same_ring(f.ring(), source_.ring())) throw MismatchError("polynomial from another ring");
    g = f.substitute(source_images_, ring());
  }
  Polynomial nf = presentation_.normal_form(g);
  Vec v = zero();
  for (const auto& t : nf.terms()) v[index_.at(t.monomial)] = t.coefficient;
  return v;
}

Polynomial ArtinAlgebra::lift(const Vec& v) const {
  if (v.size() != length()) throw MismatchError("vector not in the algebra");
  std::vector<Term> terms;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) terms.push_back({basis_[j], v[j]});
  }
  return Polynomial::from_terms(ring(), std::move(terms));
}

Matrix ArtinAlgebra::action(std::size_t i) const {
  Matrix m(field(), length(), length());
  for (std::size_t j = 0; j < length(); ++j) {
    for (const auto& [r, c] : actions_.at(i)[j]) m.at(r, j) = c;
  }
  return m;
}

const Subspace& ArtinAlgebra::power(std::size_t i) const {
  return i < filtration_.size() ? filtration_[i] : filtration_.back();
}

// ---------------------------------------------------------------- invariants

std::size_t length(const ArtinAlgebra& a) { return a.length(); }

std::size_t loewy_length(const ArtinAlgebra& a) { return a.loewy_length(); }

std::size_t embedding_dimension(const ArtinAlgebra& a) { return a.power(1).dim() - a.power(2).dim(); }

Subspace socle(const ArtinAlgebra& a) {
  std::vector<Vec> stacked;
  for (std::size_t j = 0; j < a.length(); ++j) {
    Vec col;
    Vec b = a.basis_vector(j);
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      Vec img = a.times_variable(v, b);
      col.insert(col.end(), img.begin(), img.end());
    }
    stacked.push_back(std::move(col));
  }
  return kernel(a.field(), stacked, a.nvars() * a.length());
}

std::size_t type(const ArtinAlgebra& a) { return socle(a).dim(); }

bool is_gorenstein(const ArtinAlgebra& a) { return type(a) == 1; }

std::vector<std::size_t> hilbert_function(const ArtinAlgebra& a) {
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i <= a.loewy_length(); ++i) h.push_back(a.power(i).dim() - a.power(i + 1).dim());
  return h;
}

// ---------------------------------------------------------------- ideals

Subspace span(const ArtinAlgebra& a, const std::vector<Vec>& vectors) {
  return Subspace::span(a.field(), a.length(), vectors);
}

bool is_ideal(const ArtinAlgebra& a, const Subspace& w) {
  for (const auto& row : w.basis()) {
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      if (!w.contains(a.times_variable(v, row))) return false;
    }
  }
  return true;
}

Subspace ideal_generated(const ArtinAlgebra& a, const std::vector<Vec>& gens) {
  Subspace w(a.field(), a.length());
  std::vector<Vec> pending = gens;
  while (!pending.empty()) {
    Vec v = std::move(pending.back());
    pending.pop_back();
    if (!w.insert(v)) continue;
    for (std::size_t i = 0; i < a.nvars(); ++i) pending.push_back(a.times_variable(i, v));
  }
  return w;
}

Subspace product(const ArtinAlgebra& a, const Subspace& u, const Subspace& v) {
  Subspace out(a.field(), a.length());
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) out.insert(a.multiply(x, y));
  }
  return out;
}

Annihilator annihilator(const ArtinAlgebra& a, const std::vector<Vec>& gens) {
  std::vector<Vec> stacked;
  for (std::size_t j = 0; j < a.length(); ++j) {
    Vec col;
    Vec b = a.basis_vector(j);
    for (const auto& g : gens) {
      Vec img = a.multiply(b, g);
      col.insert(col.end(), img.begin(), img.end());
    }
    stacked.push_back(std::move(col));
  }
  Annihilator out;
  out.space = kernel(a.field(), stacked, gens.size() * a.length());
  out.is_ideal = is_ideal(a, out.space);
  return out;
}

MinimalGenerators minimal_generators(const ArtinAlgebra& a, const Subspace& w) {
  if (!is_ideal(a, w)) throw PreconditionError("subspace is not an ideal");
  Subspace mw(a.field(), a.length());
  for (const auto& row : w.basis()) {
    for (std::size_t v = 0; v < a.nvars(); ++v) mw.insert(a.times_variable(v, row));
  }
  MinimalGenerators out;
  out.count = w.dim() - mw.dim();
  out.representatives = mw.complement_in(w);
  return out;
}

std::size_t relation_count(const ArtinAlgebra& a) {
  const std::size_t n = a.nvars();
  const unsigned top = static_cast<unsigned>(a.loewy_length() + 1);
  // Monomials of degree <= s+1 with their images in the algebra.
  std::vector<Monomial> monos{Monomial(n)};
  std::vector<Vec> images{a.one()};
  std::map<std::vector<unsigned>, std::size_t> where{{monos[0].exponents(), 0}};
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (monos[k].degree() == top) continue;
    for (std::size_t v = 0; v < n; ++v) {
      Monomial m = monos[k] * Monomial::variable(n, v);
      if (where.count(m.exponents())) continue;
      where[m.exponents()] = monos.size();
      monos.push_back(m);
      images.push_back(a.times_variable(v, images[k]));
    }
  }
  Subspace relations = kernel(a.field(), images, a.length());
  Subspace shifted(a.field(), monos.size());
  for (const auto& r : relations.basis()) {
    for (std::size_t v = 0; v < n; ++v) {
      Vec s = zero_vector(a.field(), monos.size());
      for (std::size_t k = 0; k < monos.size(); ++k) {
        if (r[k].is_zero() || monos[k].degree() == top) continue;
        s[where.at((monos[k] * Monomial::variable(n, v)).exponents())] = r[k];
      }
      shifted.insert(std::move(s));
    }
  }
  return relations.dim() - shifted.dim();
}

std::string format_algebra(const ArtinAlgebra& a) { return a.presentation().to_string(); }

}  // namespace artinsum
