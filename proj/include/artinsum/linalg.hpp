#pragma once

#include <optional>
#include <vector>

#include "artinsum/scalar.hpp"

namespace artinsum {

using Vec = std::vector<Scalar>;

Vec zero_vector(Field field, std::size_t n);
Vec unit_vector(Field field, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
/// Index of the first nonzero entry, or v.size().
std::size_t pivot_of(const Vec& v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);
Vec scaled(const Scalar& c, const Vec& x);

/// Dense row-major matrix acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  Vec apply(const Vec& v) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Subspace of k^n held as a reduced row echelon basis: pivots are the leftmost
/// nonzero entries, normalized to 1, and every pivot column is otherwise zero.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient_dim) : field_(field), n_(ambient_dim) {}

  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace whole(Field field, std::size_t ambient_dim);

  Field field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Returns true when the dimension grew.
  bool insert(Vec v);
  /// Remainder of v after clearing the pivot columns.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Echelon representatives of other / (other ∩ this), reduced modulo this,
  /// in increasing pivot order.
  std::vector<Vec> complement_in(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coefficient vectors c with sum_i c_i * vectors[i] = 0, as an echelon basis
/// of the kernel in k^{vectors.size()}.
Subspace kernel(Field field, const std::vector<Vec>& vectors, std::size_t target_dim);

/// Some c with sum_i c_i * vectors[i] = target, if one exists.
std::optional<Vec> solve(Field field, const std::vector<Vec>& vectors, const Vec& target);

}  // namespace artinsum
