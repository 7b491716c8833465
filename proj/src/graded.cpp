#include "artinsum/graded.hpp"

#include <algorithm>

#include "artinsum/error.hpp"
#include "artinsum/parser.hpp"
#include "artinsum/sums.hpp"

namespace artinsum {

namespace {

Matrix multiplication_matrix(const ArtinAlgebra& a, const Vec& v) {
  Matrix m(a.field(), a.length(), a.length());
  for (std::size_t j = 0; j < a.length(); ++j) m.set_column(j, a.multiply(v, a.basis_vector(j)));
  return m;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- GradedAlgebra

GradedAlgebra GradedAlgebra::from_presentation(const IdealPresentation& presentation) {
  for (const auto& g : presentation.generators()) {
    if (!g.is_homogeneous()) throw PreconditionError("generator " + g.to_string() + " is not homogeneous");
  }
  GradedAlgebra g;
  g.algebra_ = ArtinAlgebra::build(presentation);
  for (const auto& b : g.presentation().groebner_basis()) {
    if (!b.is_homogeneous()) throw Error("reduced basis of a homogeneous ideal is not homogeneous");
  }
  return g;
}

GradedAlgebra GradedAlgebra::parse(std::string_view text) {
  Presentation p = parse_presentation(text);
  return from_presentation(IdealPresentation(p.ring, p.generators));
}

Subspace GradedAlgebra::piece(std::size_t i) const {
  Subspace s(field(), algebra_.length());
  for (std::size_t j = 0; j < algebra_.length(); ++j) {
    if (degree_of(j) == i) s.insert(algebra_.basis_vector(j));
  }
  return s;
}

std::vector<std::size_t> GradedAlgebra::hilbert_function() const {
  std::vector<std::size_t> h(top_degree() + 1, 0);
  for (std::size_t j = 0; j < algebra_.length(); ++j) ++h[degree_of(j)];
  return h;
}

bool GradedAlgebra::is_homogeneous(const Vec& v) const {
  int deg = -1;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    int d = static_cast<int>(degree_of(j));
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

const ArtinAlgebra& GradedAlgebra::source() const {
  if (!source_) throw PreconditionError("graded algebra has no source");
  return *source_;
}

Vec GradedAlgebra::graded_class(const Vec& v, std::size_t i) const {
  const ArtinAlgebra& a = source();
  if (!a.power(i).contains(v)) throw PreconditionError("element does not lie in m^" + std::to_string(i));
  Vec c = coordinates_.apply(v);
  Vec out = algebra_.zero();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (rep_degree_[j] == i && !c[j].is_zero()) axpy(out, c[j], rep_images_[j]);
  }
  return out;
}

Vec GradedAlgebra::initial_form(const Vec& v) const {
  const ArtinAlgebra& a = source();
  if (is_zero(v)) return algebra_.zero();
  std::size_t i = 0;
  while (a.power(i + 1).contains(v)) ++i;
  return graded_class(v, i);
}

GradedAlgebra associated_graded(const ArtinAlgebra& a) {
  const Field field = a.field();
  const std::size_t len = a.length();
  const std::size_t s = a.loewy_length();

  // A basis of A adapted to the filtration: representatives of m^i / m^{i+1}.
  std::vector<Vec> reps;
  std::vector<std::size_t> degree;
  for (std::size_t i = 0; i <= s; ++i) {
    for (auto& r : a.power(i + 1).complement_in(a.power(i))) {
      reps.push_back(std::move(r));
      degree.push_back(i);
    }
  }
  if (reps.size() != len) throw Error("filtration pieces do not add up to the length");
  Matrix coords(field, len, len);
  for (std::size_t k = 0; k < len; ++k) {
    auto c = solve(field, reps, a.basis_vector(k));
    if (!c) throw Error("adapted basis does not span");
    for (std::size_t j = 0; j < len; ++j) coords.at(j, k) = (*c)[j];
  }

  // x_v maps m^i/m^{i+1} to m^{i+1}/m^{i+2}: keep the next-degree coordinates.
  std::vector<Matrix> actions;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    Matrix m(field, len, len);
    for (std::size_t j = 0; j < len; ++j) {
      Vec c = coords.apply(a.times_variable(v, reps[j]));
      for (std::size_t k = 0; k < len; ++k) {
        if (degree[k] == degree[j] + 1) m.at(k, j) = c[k];
      }
    }
    actions.push_back(std::move(m));
  }
  Vec start = unit_vector(field, len, 0);
  IdealPresentation star = kernel_presentation(a.ring(), actions, start);

  GradedAlgebra g;
  g.algebra_ = ArtinAlgebra::build(star);
  if (g.algebra_.length() != len || g.algebra_.nvars() != a.nvars()) {
    throw Error("associated graded ring has the wrong size");
  }
  // Standard monomials of G in adapted coordinates, then invert.
  std::vector<Vec> monomial_coords;
  for (const auto& b : g.algebra_.basis()) {
    Vec w = start;
    for (std::size_t v = 0; v < b.nvars(); ++v) {
      for (unsigned e = 0; e < b[v]; ++e) w = actions[v].apply(w);
    }
    monomial_coords.push_back(std::move(w));
  }
  for (std::size_t j = 0; j < len; ++j) {
    auto c = solve(field, monomial_coords, unit_vector(field, len, j));
    if (!c) throw Error("standard monomials of the graded ring do not span");
    g.rep_images_.push_back(std::move(*c));
  }
  g.source_ = std::make_shared<const ArtinAlgebra>(a);
  g.coordinates_ = std::move(coords);
  g.rep_degree_ = std::move(degree);
  return g;
}

// ---------------------------------------------------------------- ideals

std::size_t GradedIdeal::dim() const {
  std::size_t d = 0;
  for (const auto& c : components) d += c.dim();
  return d;
}

std::vector<std::size_t> GradedIdeal::dims() const {
  std::vector<std::size_t> out;
  for (const auto& c : components) out.push_back(c.dim());
  return out;
}

std::vector<Vec> GradedIdeal::generators() const {
  std::vector<Vec> out;
  for (const auto& c : components) out.insert(out.end(), c.basis().begin(), c.basis().end());
  return out;
}

GradedIdeal graded_ideal_generated(const GradedAlgebra& g, const std::vector<Vec>& homogeneous) {
  for (const auto& v : homogeneous) {
    if (!g.is_homogeneous(v)) throw PreconditionError("element is not homogeneous");
  }
  Subspace whole = ideal_generated(g.algebra(), homogeneous);
  GradedIdeal out;
  for (std::size_t i = 0; i <= g.top_degree(); ++i) out.components.push_back(whole.intersect(g.piece(i)));
  if (out.dim() != whole.dim()) throw Error("ideal generated by homogeneous elements is not graded");
  return out;
}

bool is_graded_ideal(const GradedAlgebra& g, const GradedIdeal& ideal) {
  const ArtinAlgebra& a = g.algebra();
  for (std::size_t i = 0; i < ideal.components.size(); ++i) {
    if (!g.piece(i).contains(ideal.components[i])) return false;
    for (const auto& row : ideal.components[i].basis()) {
      for (std::size_t v = 0; v < a.nvars(); ++v) {
        Vec x = a.times_variable(v, row);
        if (is_zero(x)) continue;
        if (i + 1 >= ideal.components.size() || !ideal.components[i + 1].contains(x)) return false;
      }
    }
  }
  return true;
}

GradedAlgebra graded_quotient(const GradedAlgebra& g, const std::vector<Vec>& homogeneous) {
  std::vector<Polynomial> gens = g.presentation().groebner_basis();
  for (const auto& v : homogeneous) {
    if (!g.is_homogeneous(v)) throw PreconditionError("element is not homogeneous");
    if (!is_zero(v)) gens.push_back(g.algebra().lift(v));
  }
  return GradedAlgebra::from_presentation(IdealPresentation(g.ring(), std::move(gens)));
}

// ---------------------------------------------------------------- socle

std::size_t GradedSocle::higher_dim() const {
  std::size_t d = 0;
  for (std::size_t i = 2; i < by_degree.size(); ++i) d += by_degree[i].dim();
  return d;
}

GradedSocle graded_socle(const GradedAlgebra& g) {
  Subspace soc = socle(g.algebra());
  GradedSocle out;
  for (std::size_t i = 0; i <= g.top_degree(); ++i) out.by_degree.push_back(soc.intersect(g.piece(i)));
  return out;
}

GlsResult is_gls(const GradedAlgebra& g) {
  if (g.top_degree() < 2) throw PreconditionError("Loewy length below 2");
  GradedSocle soc = graded_socle(g);
  GlsResult out;
  out.holds = soc.higher_dim() == 1;
  out.witness = soc.by_degree[1].basis();
  return out;
}

GlsSplit gls_split(const GradedAlgebra& g) {
  GlsResult gls = is_gls(g);
  if (!gls.holds) throw PreconditionError("not Gorenstein up to linear socle");
  GlsSplit out;
  for (const auto& w : gls.witness) out.witness_forms.push_back(g.algebra().lift(w));
  out.gorenstein_part = graded_quotient(g, gls.witness);
  const auto& kept = out.gorenstein_part.ring()->names;
  std::vector<std::string> rest;
  for (const auto& name : g.ring()->names) {
    if (std::find(kept.begin(), kept.end(), name) == kept.end()) rest.push_back(name);
  }
  RingPtr ring = make_ring(g.field(), rest);
  std::vector<Polynomial> squares;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i; j < rest.size(); ++j) {
      squares.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, j));
    }
  }
  out.square_zero_part = GradedAlgebra::from_presentation(IdealPresentation(ring, std::move(squares)));
  return out;
}

GlsEquivalences check_gls_equivalences(const GradedAlgebra& g) {
  GlsResult gls = is_gls(g);
  GlsEquivalences out;
  out.socle_condition = gls.holds;
  const ArtinAlgebra& ga = g.algebra();
  GradedAlgebra a = graded_quotient(g, gls.witness);
  const bool a_gorenstein = is_gorenstein(a.algebra());

  // Projection G -> A: its kernel is the ideal generated by the linear socle.
  Subspace ker = ideal_generated(ga, gls.witness);
  bool trivial_meet = true;
  for (std::size_t i = 2; i <= g.top_degree(); ++i) {
    if (!ker.intersect(g.piece(i)).empty()) trivial_meet = false;
  }
  out.projection = a_gorenstein && trivial_meet && length(a.algebra()) + ker.dim() == length(ga);

  // Fibre product: rewrite G in the variables of A followed by the linear
  // socle elements and compare with A x_k B.
  if (!a_gorenstein) return out;
  if (gls.witness.empty()) {
    out.fibre_product = a.presentation() == g.presentation();
    return out;
  }
  const auto& kept = a.ring()->names;
  std::vector<std::string> names = kept;
  std::vector<Matrix> actions;
  for (const auto& name : kept) actions.push_back(ga.action(static_cast<std::size_t>(g.ring()->index_of(name))));
  for (std::size_t j = 0; j < gls.witness.size(); ++j) {
    names.push_back("W" + std::to_string(j + 1));
    actions.push_back(multiplication_matrix(ga, gls.witness[j]));
  }
  RingPtr ring;
  try {
    ring = make_ring(g.field(), names);
  } catch (const PreconditionError&) {
    return out;
  }
  IdealPresentation rewritten = kernel_presentation(ring, actions, ga.one());
  if (standard_monomials(rewritten).size() != ga.length()) return out;
  RingPtr b_ring = make_ring(g.field(), std::vector<std::string>(names.begin() + kept.size(), names.end()));
  std::vector<Polynomial> squares;
  for (std::size_t i = 0; i < b_ring->nvars(); ++i) {
    for (std::size_t j = i; j < b_ring->nvars(); ++j) {
      squares.push_back(Polynomial::variable(b_ring, i) * Polynomial::variable(b_ring, j));
    }
  }
  ArtinAlgebra b = ArtinAlgebra::build(IdealPresentation(b_ring, std::move(squares)));
  SumResult p = fibre_product(a.algebra(), b);
  out.fibre_product = p.algebra.presentation() == rewritten;
  return out;
}

// ---------------------------------------------------------------- Iarrobino

IarrobinoResult iarrobino(const ArtinAlgebra& a) {
  if (!is_gorenstein(a)) throw NotGorensteinError("Iarrobino's construction needs a Gorenstein algebra");
  IarrobinoResult out;
  out.graded = associated_graded(a);
  const std::size_t s = a.loewy_length();
  const GradedAlgebra& g = out.graded;
  for (std::size_t i = 0; i <= s; ++i) {
    Subspace ann = annihilator(a, a.power(s - i).basis()).space;
    Subspace w = ann.intersect(a.power(i));
    Subspace c(g.field(), g.algebra().length());
    for (const auto& v : w.basis()) c.insert(g.graded_class(v, i));
    out.c.components.push_back(std::move(c));
  }
  out.q0 = graded_quotient(g, out.c.generators());
  return out;
}

// ---------------------------------------------------------------- classification

Classification classify(const std::vector<std::size_t>& h) {
  Classification out;
  if (h.empty() || h[0] != 1) return out;
  const std::size_t s = h.size() - 1;
  out.is_short = h.size() == 4 && h[3] == 1;
  out.stretched = s >= 3 && std::all_of(h.begin() + 2, h.end(), [](std::size_t x) { return x == 1; });
  const std::uint64_t d = s >= 1 ? h[1] : 0;
  // Number of monomials of degree i in d variables.
  auto forms = [d](std::uint64_t i) { return i == 0 ? 1 : binomial(d + i - 1, i); };
  out.compressed = true;
  for (std::size_t i = 0; i <= s; ++i) {
    if (h[i] != std::min(forms(i), forms(s - i))) out.compressed = false;
  }
  return out;
}

Classification classify(const ArtinAlgebra& a) { return classify(hilbert_function(a)); }

}  // namespace artinsum
