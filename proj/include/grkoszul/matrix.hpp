#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "grkoszul/field.hpp"

namespace grk {

// Dense row-major matrix. Arithmetic takes the field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;
  std::vector<Vec> col_list() const;
  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix scaled(const Field& f, const Matrix& a, const Scalar& s);
Vec apply(const Field& f, const Matrix& a, const Vec& v);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; pivots are taken in the leftmost nonzero column,
// using the first row with a nonzero entry there. Only the first
// `pivot_limit` columns are eligible as pivots.
Echelon rref(const Field& f, Matrix m, std::size_t pivot_limit = static_cast<std::size_t>(-1));

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel;  // one vector per free column, in column order
};

RankKernel rank_kernel(const Field& f, const Matrix& m);
std::size_t rank(const Field& f, const Matrix& m);
// Solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve(const Field& f, const Matrix& m, const Vec& b);

// Preprocessed solver for many right hand sides against one matrix.
class LinearSolver {
 public:
  LinearSolver(const Field& f, const Matrix& m);
  std::optional<Vec> solve(const Vec& b) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  Field f_;
  std::size_t cols_;
  Matrix transform_;  // E with E m = rref(m)
  std::vector<std::size_t> pivots_;
};

// A subspace of K^n kept as the rows of its reduced echelon basis.
class Subspace {
 public:
  Subspace(const Field& f, std::size_t ambient) : f_(f), n_(ambient) {}
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vs);
  static Subspace whole(const Field& f, std::size_t ambient);

  const Field& field() const { return f_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> free_columns() const;

  // Adds v; returns false when v was already in the span.
  bool add(Vec v);
  void add_all(const std::vector<Vec>& vs) {
    for (const auto& v : vs) add(v);
  }
  // Remainder of v after clearing every pivot column.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  // Coordinates of v (assumed in the span) against basis().
  Vec coords(const Vec& v) const;
  bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool contains(const Subspace& o) const;

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// Kernel of the linear map whose rows span `rows`.
std::vector<Vec> kernel_of_rows(const Subspace& rows);
// Vectors from `candidates` (in order) that extend `base` to a basis of
// base + span(candidates).
std::vector<Vec> greedy_complement(const Subspace& base, const std::vector<Vec>& candidates);

}  // namespace grk
