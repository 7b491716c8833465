#include "artinsum/resolution.hpp"

#include <cstdint>

#include "artinsum/error.hpp"
#include "artinsum/sums.hpp"

namespace artinsum {

namespace {

// Coefficient arithmetic for the dense eliminations below: machine words
// over GF(p), Scalar over QQ.
struct ModOps {
  using E = std::uint64_t;
  std::uint64_t p;

  E zero() const { return 0; }
  E one() const { return 1; }
  E from(const Scalar& s) const { return s.residue(); }
  bool is_zero(E a) const { return a == 0; }
  E neg(E a) const { return a == 0 ? 0 : p - a; }
  E mul(E a, E b) const { return a * b % p; }
  E inv(E a) const {
    E result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  /// a += c * b
  void add_product(E& a, E c, E b) const { a = (a + c * b) % p; }
};

struct RatOps {
  using E = Scalar;
  Field f;

  E zero() const { return Scalar::zero(f); }
  E one() const { return Scalar::one(f); }
  E from(const Scalar& s) const { return s; }
  bool is_zero(const E& a) const { return a.is_zero(); }
  E neg(const E& a) const { return -a; }
  E mul(const E& a, const E& b) const { return a * b; }
  E inv(const E& a) const { return a.inverse(); }
  void add_product(E& a, const E& c, const E& b) const { a.subtract_product(-c, b); }
};

template <class Ops>
class Resolver {
 public:
  using E = typename Ops::E;
  using Row = std::vector<E>;

  Resolver(const ArtinAlgebra& a, Ops ops, const ResolutionLimits& limits)
      : a_(a), ops_(std::move(ops)), limits_(limits), len_(a.length()) {
    // Multiplication table and variable actions, with coefficients in E.
    table_.resize(len_ * len_);
    for (std::size_t i = 0; i < len_; ++i) {
      for (std::size_t j = 0; j < len_; ++j) {
        for (const auto& [idx, c] : a.table(i, j)) table_[i * len_ + j].push_back({idx, ops_.from(c)});
      }
    }
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      Matrix m = a.action(v);
      std::vector<std::vector<std::pair<std::uint32_t, E>>> cols(len_);
      for (std::size_t c = 0; c < len_; ++c) {
        for (std::size_t r = 0; r < len_; ++r) {
          if (!m.at(r, c).is_zero()) cols[c].push_back({static_cast<std::uint32_t>(r), ops_.from(m.at(r, c))});
        }
      }
      actions_.push_back(std::move(cols));
    }
  }

  BettiData run(std::size_t n) {
    BettiData out;
    out.truncation = n;
    out.minimal = true;
    out.betti.push_back(1);
    // Generators of K_0 = m inside F_0 = A: the variables.
    std::vector<Row> gens;
    for (std::size_t v = 0; v < a_.nvars(); ++v) {
      Row g(len_, ops_.zero());
      Vec x = a_.variable(v);
      for (std::size_t k = 0; k < len_; ++k) g[k] = ops_.from(x[k]);
      gens.push_back(std::move(g));
    }
    std::size_t previous_kernel = len_ - 1;  // dim K_0 = dim m
    std::size_t rank_source = 1;             // β_{i-1}
    bool exact = true;
    for (std::size_t i = 1; i <= n; ++i) {
      const std::size_t beta = gens.size();
      out.betti.push_back(beta);
      for (const auto& g : gens) {
        for (std::size_t u = 0; u < rank_source; ++u) {
          if (!ops_.is_zero(g[u * len_ + len_ - 1])) out.minimal = false;
        }
      }
      if (i == n) break;
      if (beta * len_ > limits_.max_columns) {
        throw ResourceError("free module of rank " + std::to_string(beta) + " exceeds the resolution limit");
      }
      // d_i : F_i -> F_{i-1}, column (t, b) = b * g_t.
      const std::size_t rows = rank_source * len_;
      const std::size_t cols = beta * len_;
      std::vector<Row> m(rows, Row(cols, ops_.zero()));
      for (std::size_t t = 0; t < beta; ++t) {
        for (std::size_t b = 0; b < len_; ++b) {
          Row col = times_basis(b, gens[t], rank_source);
          for (std::size_t r = 0; r < rows; ++r) m[r][t * len_ + b] = col[r];
        }
      }
      std::size_t rank = 0;
      std::vector<Row> kernel = nullspace(m, cols, rank);
      exact = exact && rank == previous_kernel;
      if (exact) out.exact_through = i - 1;
      previous_kernel = kernel.size();
      gens = minimal_generators(kernel, beta);
      rank_source = beta;
    }
    out.epsilon1 = static_cast<long>(out.betti[1]);
    long b1 = out.epsilon1;
    out.epsilon2 = static_cast<long>(out.betti[2]) - b1 * (b1 - 1) / 2;
    return out;
  }

 private:
  Row times_basis(std::size_t b, const Row& v, std::size_t rank) const {
    Row out(rank * len_, ops_.zero());
    for (std::size_t u = 0; u < rank; ++u) {
      for (std::size_t c = 0; c < len_; ++c) {
        const E& coeff = v[u * len_ + c];
        if (ops_.is_zero(coeff)) continue;
        for (const auto& [idx, t] : table_[b * len_ + c]) ops_.add_product(out[u * len_ + idx], coeff, t);
      }
    }
    return out;
  }

  Row times_variable(std::size_t x, const Row& v, std::size_t rank) const {
    Row out(rank * len_, ops_.zero());
    for (std::size_t u = 0; u < rank; ++u) {
      for (std::size_t c = 0; c < len_; ++c) {
        const E& coeff = v[u * len_ + c];
        if (ops_.is_zero(coeff)) continue;
        for (const auto& [idx, t] : actions_[x][c]) ops_.add_product(out[u * len_ + idx], coeff, t);
      }
    }
    return out;
  }

  /// Gauss-Jordan on m; the kernel basis is indexed by free columns in increasing order.
  std::vector<Row> nullspace(std::vector<Row>& m, std::size_t cols, std::size_t& rank) const {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t p = r;
      while (p < m.size() && ops_.is_zero(m[p][c])) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[r]);
      E inv = ops_.inv(m[r][c]);
      std::vector<std::size_t> support;
      for (std::size_t k = c; k < cols; ++k) {
        if (!ops_.is_zero(m[r][k])) {
          m[r][k] = ops_.mul(m[r][k], inv);
          support.push_back(k);
        }
      }
      for (std::size_t q = 0; q < m.size(); ++q) {
        if (q == r || ops_.is_zero(m[q][c])) continue;
        E f = ops_.neg(m[q][c]);
        for (std::size_t k : support) ops_.add_product(m[q][k], f, m[r][k]);
      }
      pivots.push_back(c);
      ++r;
    }
    rank = r;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      Row v(cols, ops_.zero());
      v[f] = ops_.one();
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = ops_.neg(m[k][f]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Row echelon form that records the rows it accepts.
  struct Echelon {
    const Ops* ops;
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<std::size_t>> supports;

    bool insert(Row v) {
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const E& lead = v[pivots[k]];
        if (ops->is_zero(lead)) continue;
        E f = ops->neg(lead);
        for (std::size_t idx : supports[k]) ops->add_product(v[idx], f, rows[k][idx]);
      }
      std::size_t p = 0;
      while (p < v.size() && ops->is_zero(v[p])) ++p;
      if (p == v.size()) return false;
      E inv = ops->inv(v[p]);
      std::vector<std::size_t> support;
      for (std::size_t idx = p; idx < v.size(); ++idx) {
        if (!ops->is_zero(v[idx])) {
          v[idx] = ops->mul(v[idx], inv);
          support.push_back(idx);
        }
      }
      rows.push_back(std::move(v));
      pivots.push_back(p);
      supports.push_back(std::move(support));
      return true;
    }
  };

  /// Kernel vectors that span K modulo m K, first come first served.
  std::vector<Row> minimal_generators(const std::vector<Row>& kernel, std::size_t rank) const {
    Echelon e{&ops_, {}, {}, {}};
    for (const auto& v : kernel) {
      for (std::size_t x = 0; x < actions_.size(); ++x) e.insert(times_variable(x, v, rank));
    }
    std::vector<Row> gens;
    for (const auto& v : kernel) {
      if (e.insert(v)) gens.push_back(v);
    }
    return gens;
  }

  const ArtinAlgebra& a_;
  Ops ops_;
  ResolutionLimits limits_;
  std::size_t len_;
  std::vector<std::vector<std::pair<std::uint32_t, E>>> table_;
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, E>>>> actions_;  // [variable][column]
};

SeriesTrunc inverse_poincare(const ArtinAlgebra& a, std::size_t n) { return betti_numbers(a, n).poincare().reciprocal(); }

ArtinAlgebra socle_quotient(const ArtinAlgebra& a) {
  std::vector<Polynomial> gens = a.presentation().groebner_basis();
  Subspace soc = socle(a);
  for (const auto& v : soc.basis()) gens.push_back(a.lift(v));
  return ArtinAlgebra::build(IdealPresentation(a.ring(), gens));
}

}  // namespace

SeriesTrunc BettiData::poincare() const {
  std::vector<mpz_class> c;
  for (std::size_t b : betti) c.emplace_back(static_cast<unsigned long>(b));
  return SeriesTrunc(truncation, c);
}

BettiData betti_numbers(const ArtinAlgebra& a, std::size_t n, const ResolutionLimits& limits) {
  if (n < 2) throw PreconditionError("resolution truncation must be at least 2");
  if (a.field().is_rational()) return Resolver<RatOps>(a, RatOps{a.field()}, limits).run(n);
  return Resolver<ModOps>(a, ModOps{a.field().characteristic()}, limits).run(n);
}

std::size_t mu_from_betti(const ArtinAlgebra& a) {
  BettiData b = betti_numbers(a, 2);
  return static_cast<std::size_t>(b.epsilon2);
}

SeriesCheck verify_fp_series(const ArtinAlgebra& r, const ArtinAlgebra& s, const ArtinAlgebra& p, std::size_t n) {
  SeriesCheck out;
  out.phi = SeriesTrunc(n);
  out.lhs = inverse_poincare(p, n);
  out.rhs = inverse_poincare(r, n) + inverse_poincare(s, n) - SeriesTrunc::monomial(n, 0);
  out.holds = out.lhs == out.rhs;
  return out;
}

SeriesCheck verify_cs_series(const ArtinAlgebra& r, const ArtinAlgebra& s, const ArtinAlgebra& q, std::size_t n) {
  if (r.loewy_length() < 2 || s.loewy_length() < 2) throw PreconditionError("both factors need Loewy length >= 2");
  const std::size_t m = embedding_dimension(r);
  const std::size_t k = embedding_dimension(s);
  SeriesCheck out;
  out.phi = SeriesTrunc(n);
  if (m >= 2 && k >= 2) out.phi = SeriesTrunc::monomial(n, 2, -1);
  if (m == 1 && k == 1) out.phi = SeriesTrunc::monomial(n, 2, 1);
  out.lhs = inverse_poincare(q, n);
  out.rhs = inverse_poincare(r, n) + inverse_poincare(s, n) - SeriesTrunc::monomial(n, 0) + out.phi;
  out.holds = out.lhs == out.rhs;
  return out;
}

SeriesCheck verify_socle_quotient(const ArtinAlgebra& t, std::size_t n) {
  if (!is_gorenstein(t)) throw NotGorensteinError("socle quotient identity needs a Gorenstein ring");
  if (embedding_dimension(t) < 2) throw PreconditionError("socle quotient identity needs edim >= 2");
  SeriesCheck out;
  out.phi = SeriesTrunc::monomial(n, 2, 1);
  out.lhs = inverse_poincare(t, n);
  out.rhs = inverse_poincare(socle_quotient(t), n) + out.phi;
  out.holds = out.lhs == out.rhs;
  return out;
}

int expected_psi(std::size_t m, std::size_t n) {
  if (m >= 2 && n >= 2) return 1;
  if (m == 1 && n == 1) return -1;
  return 0;
}

MuReport verify_mu_formulas(const ArtinAlgebra& r, const ArtinAlgebra& s) {
  if (!is_gorenstein(r) || !is_gorenstein(s)) throw NotGorensteinError("μ formulas need Gorenstein factors");
  if (length(r) <= 2 || length(s) <= 2) throw PreconditionError("μ formulas need factors of length > 2");
  ArtinAlgebra p = fibre_product(r, s).algebra;
  ArtinAlgebra q = connected_sum({r, s, {}, {}, {}}).algebra;
  MuReport out;
  out.m = embedding_dimension(r);
  out.n = embedding_dimension(s);
  out.mu_r = mu_from_betti(r);
  out.mu_s = mu_from_betti(s);
  out.mu_p = mu_from_betti(p);
  out.mu_q = mu_from_betti(q);
  out.psi = static_cast<int>(out.mu_q) - static_cast<int>(out.mu_p);
  out.expected_psi = expected_psi(out.m, out.n);
  out.fibre_holds = out.mu_p == out.mu_r + out.mu_s + out.m * out.n;
  out.connected_holds = out.psi == out.expected_psi;
  out.direct_agrees = out.mu_r == relation_count(r) && out.mu_s == relation_count(s) &&
                      out.mu_p == relation_count(p) && out.mu_q == relation_count(q);
  return out;
}

}  // namespace artinsum
