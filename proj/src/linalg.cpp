#include "artinsum/linalg.hpp"

#include <algorithm>

#include "artinsum/error.hpp"

namespace artinsum {

Vec zero_vector(Field field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

Vec unit_vector(Field field, std::size_t n, std::size_t i) {
  Vec v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t pivot_of(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.size();
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (y.size() != x.size()) throw MismatchError("vector sizes differ");
  if (c.is_zero()) return;
  Scalar minus = -c;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i].subtract_product(minus, x[i]);
  }
}

Vec scaled(const Scalar& c, const Vec& x) {
  Vec out = x;
  for (auto& s : out) s *= c;
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw MismatchError("column has wrong length");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw MismatchError("vector has wrong length");
  Vec out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    Scalar minus = -v[c];
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = at(r, c);
      if (!a.is_zero()) out[r].subtract_product(minus, a);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(field, ambient_dim);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::whole(Field field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(unit_vector(field, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != n_) throw MismatchError("vector not in ambient space");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (!c.is_zero()) axpy(v, -c, rows_[k]);
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = pivot_of(v);
  if (p == n_) return false;
  Scalar inv = v[p].inverse();
  for (auto& s : v) s *= inv;
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (!c.is_zero()) axpy(row, -c, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (n_ != other.n_) throw MismatchError("subspaces in different spaces");
  // Zassenhaus: rows (a | a) for a in this and (b | 0) for b in other; rows
  // with zero left half carry the intersection on the right.
  Subspace big(field_, 2 * n_);
  for (const auto& a : rows_) {
    Vec w = a;
    w.insert(w.end(), a.begin(), a.end());
    big.insert(std::move(w));
  }
  for (const auto& b : other.rows_) {
    Vec w = b;
    w.resize(2 * n_, Scalar::zero(field_));
    big.insert(std::move(w));
  }
  Subspace out(field_, n_);
  for (std::size_t k = 0; k < big.rows_.size(); ++k) {
    if (big.pivots_[k] < n_) continue;
    out.insert(Vec(big.rows_[k].begin() + static_cast<std::ptrdiff_t>(n_), big.rows_[k].end()));
  }
  return out;
}

std::vector<Vec> Subspace::complement_in(const Subspace& other) const {
  Subspace reduced(field_, n_);
  for (const auto& v : other.rows_) {
    Vec r = reduce(v);
    if (!is_zero(r)) reduced.insert(std::move(r));
  }
  // Rows of `reduced` vanish on our pivot columns, so they stay reduced modulo us.
  return reduced.rows_;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

// ---------------------------------------------------------------- solving

namespace {

struct TrackedRow {
  Vec img;
  Vec comb;
  std::size_t pivot;
};

// Semi-echelon form of the given vectors, each row remembering which
// combination of inputs produced it. Dependent inputs go to `relations`.
std::vector<TrackedRow> tracked_echelon(Field field, const std::vector<Vec>& vectors,
                                        std::size_t target_dim, Subspace* relations) {
  const std::size_t m = vectors.size();
  std::vector<TrackedRow> echelon;
  for (std::size_t i = 0; i < m; ++i) {
    if (vectors[i].size() != target_dim) throw MismatchError("vector has wrong length");
    TrackedRow r{vectors[i], unit_vector(field, m, i), 0};
    for (const auto& e : echelon) {
      const Scalar c = r.img[e.pivot];
      if (c.is_zero()) continue;
      axpy(r.img, -c, e.img);
      axpy(r.comb, -c, e.comb);
    }
    r.pivot = pivot_of(r.img);
    if (r.pivot == target_dim) {
      if (relations != nullptr) relations->insert(std::move(r.comb));
      continue;
    }
    Scalar inv = r.img[r.pivot].inverse();
    for (auto& s : r.img) s *= inv;
    for (auto& s : r.comb) s *= inv;
    echelon.push_back(std::move(r));
  }
  return echelon;
}

}  // namespace

Subspace kernel(Field field, const std::vector<Vec>& vectors, std::size_t target_dim) {
  Subspace out(field, vectors.size());
  tracked_echelon(field, vectors, target_dim, &out);
  return out;
}

std::optional<Vec> solve(Field field, const std::vector<Vec>& vectors, const Vec& target) {
  auto echelon = tracked_echelon(field, vectors, target.size(), nullptr);
  Vec rest = target;
  Vec comb = zero_vector(field, vectors.size());
  for (const auto& e : echelon) {
    const Scalar c = rest[e.pivot];
    if (c.is_zero()) continue;
    axpy(rest, -c, e.img);
    axpy(comb, c, e.comb);
  }
  if (!is_zero(rest)) return std::nullopt;
  return comb;
}

}  // namespace artinsum
