#include "artinsum/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <unordered_map>

#include "artinsum/error.hpp"
#include "artinsum/parser.hpp"

namespace artinsum {

namespace {

std::atomic<unsigned> g_max_degree{64};

// Working polynomial: terms in increasing order, leading term at the back.
using Terms = std::vector<Term>;

struct Cmp {
  const TermOrder* order;
  bool grevlex;
  explicit Cmp(const TermOrder& o) : order(&o), grevlex(o.kind() == TermOrder::Kind::GREVLEX) {}
  int operator()(const Monomial& a, const Monomial& b) const {
    return grevlex ? compare_grevlex(a, b) : order->compare(a, b);
  }
};

Terms to_terms(const Polynomial& p, const Cmp& cmp) {
  Terms t = p.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return cmp(a.monomial, b.monomial) < 0; });
  return t;
}

void check_degree(const Monomial& m, unsigned max_degree) {
  if (m.degree() > max_degree) {
    throw ResourceError("intermediate degree " + std::to_string(m.degree()) +
                        " exceeds the limit " + std::to_string(max_degree));
  }
}

// h - c * q * g, where the leading terms have already been cancelled: h and g
// are passed without their leading terms.
Terms subtract_multiple(const Terms& h, std::size_t h_len, const Terms& g, std::size_t g_len,
                        const Monomial& q, const Scalar& c, const Cmp& cmp, unsigned max_degree) {
  Terms out;
  out.reserve(h_len + g_len);
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar minus = -c;
  while (i < h_len || j < g_len) {
    if (j == g_len) {
      out.push_back(h[i++]);
      continue;
    }
    Monomial m = q * g[j].monomial;
    int r = i == h_len ? 1 : cmp(h[i].monomial, m);
    if (r < 0) {
      out.push_back(h[i++]);
    } else if (r > 0) {
      check_degree(m, max_degree);
      out.push_back({m, minus * g[j].coefficient});
      ++j;
    } else {
      Scalar s = h[i].coefficient;
      s.subtract_product(c, g[j].coefficient);
      if (!s.is_zero()) out.push_back({m, s});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Basis {
  std::vector<Terms> polys;  // monic, increasing
  std::vector<bool> active;

  const Monomial& lead(std::size_t k) const { return polys[k].back().monomial; }
};

// Full reduction by the active elements (or every element listed in `use`).
Terms reduce(Terms h, const Basis& basis, const std::vector<std::size_t>& use, const Cmp& cmp,
             unsigned max_degree) {
  Terms rem;
  while (!h.empty()) {
    const Monomial& lt = h.back().monomial;
    std::size_t found = use.size();
    for (std::size_t u = 0; u < use.size(); ++u) {
      const Monomial& l = basis.lead(use[u]);
      if (l.degree() <= lt.degree() && l.divides(lt)) {
        found = u;
        break;
      }
    }
    if (found == use.size()) {
      rem.push_back(std::move(h.back()));
      h.pop_back();
      continue;
    }
    const Terms& g = basis.polys[use[found]];
    Monomial q = basis.lead(use[found]).quotient_of(lt);
    Scalar c = h.back().coefficient;
    h = subtract_multiple(h, h.size() - 1, g, g.size() - 1, q, c, cmp, max_degree);
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

void make_monic(Terms& t) {
  if (t.empty() || t.back().coefficient.is_one()) return;
  Scalar inv = t.back().coefficient.inverse();
  for (auto& term : t) term.coefficient *= inv;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Gebauer-Möller installation of a new element h (index k): keeps the
// coprime and chain criteria.
void update(Basis& basis, std::vector<Pair>& pairs, std::size_t k) {
  const Monomial& lh = basis.lead(k);
  std::vector<Pair> candidates;
  for (std::size_t g = 0; g < k; ++g) {
    if (basis.active[g]) candidates.push_back({g, k, lh.lcm(basis.lead(g))});
  }
  std::vector<bool> keep(candidates.size(), true);
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool coprime = lh.coprime(basis.lead(candidates[a].i));
    if (coprime) continue;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (b == a || !keep[b]) continue;
      const Monomial& lb = candidates[b].lcm;
      const Monomial& la = candidates[a].lcm;
      // Drop a when another pair's lcm properly divides it, or equals it and comes first.
      if (lb.divides(la) && (!(lb == la) || b < a)) {
        keep[a] = false;
        break;
      }
    }
  }
  std::vector<Pair> fresh;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (!keep[a]) continue;
    if (lh.coprime(basis.lead(candidates[a].i))) continue;
    fresh.push_back(candidates[a]);
  }
  std::vector<Pair> kept;
  for (auto& p : pairs) {
    bool drop = lh.divides(p.lcm) && !(basis.lead(p.i).lcm(lh) == p.lcm) &&
                !(basis.lead(p.j).lcm(lh) == p.lcm);
    if (!drop) kept.push_back(std::move(p));
  }
  kept.insert(kept.end(), fresh.begin(), fresh.end());
  pairs = std::move(kept);
  for (std::size_t g = 0; g < k; ++g) {
    if (basis.active[g] && lh.divides(basis.lead(g))) basis.active[g] = false;
  }
}

std::vector<std::size_t> active_indices(const Basis& basis) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < basis.polys.size(); ++k) {
    if (basis.active[k]) out.push_back(k);
  }
  return out;
}

}  // namespace

unsigned default_max_degree() { return g_max_degree.load(); }
void set_default_max_degree(unsigned degree) { g_max_degree.store(degree); }

std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& generators,
                                       const TermOrder& order, unsigned max_degree) {
  if (max_degree == 0) max_degree = default_max_degree();
  if (order.kind() == TermOrder::Kind::BLOCK &&
      order.front().size() + order.back().size() != ring->nvars()) {
    throw MismatchError("block order does not match the ring");
  }
  Cmp cmp(order);
  Basis basis;
  std::vector<Pair> pairs;
  for (const auto& f : generators) {
    if (!same_ring(f.ring(), ring)) throw MismatchError("generator from another ring");
    if (f.is_zero()) continue;
    if (f.is_constant()) return {Polynomial::constant(ring, 1)};
    for (const auto& t : f.terms()) check_degree(t.monomial, max_degree);
    Terms h = reduce(to_terms(f, cmp), basis, active_indices(basis), cmp, max_degree);
    if (h.empty()) continue;
    make_monic(h);
    if (h.back().monomial.is_one()) return {Polynomial::constant(ring, 1)};
    basis.polys.push_back(std::move(h));
    basis.active.push_back(true);
    update(basis, pairs, basis.polys.size() - 1);
  }
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; ties broken deterministically.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      int c = cmp(a.lcm, b.lcm);
      if (a.lcm.degree() != b.lcm.degree()) c = a.lcm.degree() < b.lcm.degree() ? -1 : 1;
      if (c < 0 || (c == 0 && std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i))) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    check_degree(p.lcm, max_degree);
    const Terms& f = basis.polys[p.i];
    const Terms& g = basis.polys[p.j];
    // S-polynomial of monic f and g: (l/lt f) f - (l/lt g) g.
    Terms s;
    {
      Monomial qf = basis.lead(p.i).quotient_of(p.lcm);
      Terms fs;
      fs.reserve(f.size() - 1);
      for (std::size_t k = 0; k + 1 < f.size(); ++k) fs.push_back({qf * f[k].monomial, f[k].coefficient});
      Monomial qg = basis.lead(p.j).quotient_of(p.lcm);
      s = subtract_multiple(fs, fs.size(), g, g.size() - 1, qg, ring->unit(), cmp, max_degree);
    }
    Terms h = reduce(std::move(s), basis, active_indices(basis), cmp, max_degree);
    if (h.empty()) continue;
    make_monic(h);
    if (h.back().monomial.is_one()) return {Polynomial::constant(ring, 1)};
    basis.polys.push_back(std::move(h));
    basis.active.push_back(true);
    update(basis, pairs, basis.polys.size() - 1);
  }
  // Inter-reduce the minimal basis.
  std::vector<std::size_t> minimal = active_indices(basis);
  std::vector<Terms> reduced;
  for (std::size_t k : minimal) {
    std::vector<std::size_t> others;
    for (std::size_t o : minimal) {
      if (o != k) others.push_back(o);
    }
    Terms lead{basis.polys[k].back()};
    Terms tail(basis.polys[k].begin(), basis.polys[k].end() - 1);
    Terms r = reduce(std::move(tail), basis, others, cmp, max_degree);
    r.push_back(lead[0]);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
    return cmp(a.back().monomial, b.back().monomial) < 0;
  });
  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (auto& t : reduced) out.push_back(Polynomial::from_terms(ring, std::move(t)));
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order) {
  Cmp cmp(order);
  Basis b;
  std::vector<std::size_t> use;
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), f.ring())) throw MismatchError("basis element from another ring");
    if (g.is_zero()) continue;
    Terms t = to_terms(g, cmp);
    make_monic(t);
    use.push_back(b.polys.size());
    b.polys.push_back(std::move(t));
    b.active.push_back(true);
  }
  Terms r = reduce(to_terms(f, cmp), b, use, cmp, std::numeric_limits<unsigned>::max());
  return Polynomial::from_terms(f.ring(), std::move(r));
}

// ---------------------------------------------------------------- IdealPresentation

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw MismatchError("generator from another ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

IdealPresentation IdealPresentation::from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis,
                                                        const TermOrder& order) {
  IdealPresentation ideal(std::move(ring), basis);
  ideal.cache_->bases.emplace_back(order,
                                   std::make_shared<const std::vector<Polynomial>>(std::move(basis)));
  return ideal;
}

const std::vector<Polynomial>& IdealPresentation::groebner_basis(const TermOrder& order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [o, b] : cache_->bases) {
      if (o == order) return *b;
    }
  }
  auto computed = std::make_shared<const std::vector<Polynomial>>(
      artinsum::groebner_basis(ring_, generators_, order));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& [o, b] : cache_->bases) {
    if (o == order) return *b;
  }
  cache_->bases.emplace_back(order, computed);
  return *computed;
}

Polynomial IdealPresentation::normal_form(const Polynomial& f) const {
  return artinsum::normal_form(f, groebner_basis(), TermOrder::grevlex());
}

bool IdealPresentation::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool IdealPresentation::contains(const IdealPresentation& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& g) { return contains(g); });
}

bool IdealPresentation::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

std::string IdealPresentation::to_string() const {
  return format_presentation(ring_, groebner_basis());
}

bool operator==(const IdealPresentation& a, const IdealPresentation& b) {
  return same_ring(a.ring_, b.ring_) && a.groebner_basis() == b.groebner_basis();
}

// ---------------------------------------------------------------- derived operations

IdealPresentation contract(const IdealPresentation& ideal, const std::vector<std::string>& keep) {
  const RingPtr& ring = ideal.ring();
  std::vector<bool> kept(ring->nvars(), false);
  for (const auto& name : keep) {
    int i = ring->index_of(name);
    if (i < 0) throw PreconditionError("variable '" + name + "' is not in the ring");
    kept[static_cast<std::size_t>(i)] = true;
  }
  std::vector<std::size_t> front;
  std::vector<std::size_t> back;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (kept[i]) {
      back.push_back(i);
      names.push_back(ring->names[i]);
    } else {
      front.push_back(i);
    }
  }
  RingPtr sub = make_ring(ring->field, names);
  const auto& gb = front.empty() ? ideal.groebner_basis()
                                 : ideal.groebner_basis(TermOrder::block(front, back));
  std::vector<Polynomial> basis;
  for (const auto& g : gb) {
    bool inside = true;
    for (std::size_t v : g.support()) inside = inside && kept[v];
    if (!inside) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m(sub->nvars());
      for (std::size_t k = 0; k < back.size(); ++k) m.set(k, t.monomial[back[k]]);
      terms.push_back({m, t.coefficient});
    }
    basis.push_back(Polynomial::from_terms(sub, std::move(terms)));
  }
  // The block order restricted to the kept variables is grevlex, so this is
  // already the reduced grevlex basis of the contraction.
  std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare_grevlex(a.leading().monomial, b.leading().monomial) < 0;
  });
  return IdealPresentation::from_reduced_basis(sub, std::move(basis));
}

bool is_zero_dimensional(const IdealPresentation& ideal) {
  const auto& gb = ideal.groebner_basis();
  if (ideal.is_unit()) return true;
  std::vector<bool> seen(ideal.ring()->nvars(), false);
  for (const auto& g : gb) {
    int v = g.leading().monomial.pure_power_variable();
    if (v >= 0) seen[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const IdealPresentation& ideal) {
  if (!is_zero_dimensional(ideal)) throw NotZeroDimensionalError("ideal is not zero-dimensional");
  if (ideal.is_unit()) return {};
  const auto& gb = ideal.groebner_basis();
  const std::size_t n = ideal.ring()->nvars();
  std::set<Monomial, GrevlexLess> seen;
  std::vector<Monomial> frontier{Monomial(n)};
  seen.insert(Monomial(n));
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        Monomial c = m * Monomial::variable(n, i);
        if (seen.count(c)) continue;
        bool standard = std::none_of(gb.begin(), gb.end(), [&](const Polynomial& g) {
          return g.leading().monomial.divides(c);
        });
        if (!standard) continue;
        seen.insert(c);
        next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Monomial>(seen.begin(), seen.end());
}

IdealPresentation kernel_presentation(const RingPtr& ring, const std::vector<Matrix>& actions,
                                      const Vec& start) {
  const std::size_t n = ring->nvars();
  const std::size_t dim = start.size();
  const Field field = ring->field;
  if (actions.size() != n) throw MismatchError("one action matrix per variable is required");
  for (const auto& a : actions) {
    if (a.rows() != dim || a.cols() != dim) throw MismatchError("action matrix has wrong size");
  }
  struct Row {
    Vec vec;
    Vec comb;  // over standard monomial indices
    std::size_t pivot;
  };
  std::vector<Row> rows;
  std::vector<Monomial> standard;
  std::vector<Vec> images;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  std::vector<Monomial> leads;
  std::vector<Polynomial> basis;
  std::set<Monomial, GrevlexLess> queue{Monomial(n)};
  while (!queue.empty()) {
    Monomial m = *queue.begin();
    queue.erase(queue.begin());
    if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) {
      continue;
    }
    Vec v;
    if (m.is_one()) {
      v = start;
    } else {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      Monomial parent = Monomial::variable(n, i).quotient_of(m);
      v = actions[i].apply(images.at(index.at(parent)));
    }
    Vec r = v;
    Vec comb = zero_vector(field, dim + 1);
    for (const auto& row : rows) {
      const Scalar c = r[row.pivot];
      if (c.is_zero()) continue;
      axpy(r, -c, row.vec);
      axpy(comb, c, row.comb);
    }
    std::size_t p = pivot_of(r);
    if (p == dim) {
      std::vector<Term> terms{{m, ring->unit()}};
      for (std::size_t j = 0; j < standard.size(); ++j) {
        if (!comb[j].is_zero()) terms.push_back({standard[j], -comb[j]});
      }
      basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
      leads.push_back(m);
      continue;
    }
    std::size_t k = standard.size();
    if (k >= dim) throw Error("action matrices do not commute");
    Vec row_comb = scaled(-ring->unit(), comb);
    row_comb[k] = ring->unit();
    Scalar inv = r[p].inverse();
    rows.push_back({scaled(inv, r), scaled(inv, row_comb), p});
    standard.push_back(m);
    images.push_back(std::move(v));
    index.emplace(m, k);
    for (std::size_t i = 0; i < n; ++i) queue.insert(m * Monomial::variable(n, i));
  }
  return IdealPresentation::from_reduced_basis(ring, std::move(basis));
}

}  // namespace artinsum
