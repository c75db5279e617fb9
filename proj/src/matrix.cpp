#include "grkoszul/matrix.hpp"

#include <algorithm>

#include "grkoszul/errors.hpp"

namespace grk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vec> Matrix::col_list() const {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& y = b(k, j);
        if (y == 0) continue;
        c(i, j) = f.add(c(i, j), f.mul(x, y));
      }
    }
  return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix scaled(const Field& f, const Matrix& a, const Scalar& s) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) c(i, j) = f.mul(a(i, j), s);
  return c;
}

Vec apply(const Field& f, const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector dimension mismatch");
  Vec out(a.rows(), Scalar(0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  }
  return out;
}

Echelon rref(const Field& f, Matrix m, std::size_t pivot_limit) {
  Echelon e;
  const std::size_t R = m.rows(), C = std::min(m.cols(), pivot_limit);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(r, j) != 0) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

RankKernel rank_kernel(const Field& f, const Matrix& m) {
  Echelon e = rref(f, m);
  RankKernel rk;
  rk.rank = e.pivots.size();
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : e.pivots) is_piv[p] = true;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_piv[fc]) continue;
    Vec v(m.cols(), Scalar(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, fc));
    rk.kernel.push_back(std::move(v));
  }
  return rk;
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).pivots.size(); }

std::optional<Vec> solve(const Field& f, const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw InputError("solve: right hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = f.reduce(b[i]);
  }
  Echelon e = rref(f, aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

LinearSolver::LinearSolver(const Field& f, const Matrix& m) : f_(f), cols_(m.cols()) {
  const std::size_t R = m.rows();
  Matrix aug(R, m.cols() + R);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = 1;
  }
  Echelon e = rref(f, aug, m.cols());
  pivots_ = e.pivots;
  transform_ = Matrix(R, R);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < R; ++j) transform_(i, j) = e.reduced(i, m.cols() + j);
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  Vec y = apply(f_, transform_, b);
  for (std::size_t i = pivots_.size(); i < y.size(); ++i)
    if (y[i] != 0) return std::nullopt;
  Vec x(cols_, Scalar(0));
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
  return x;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vs) {
  Subspace s(f, ambient);
  for (const auto& v : vs) s.add(v);
  return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vec(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != n_) throw InputError("subspace: vector has wrong length");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c != 0) f_.axpy(v, f_.neg(c), rows_[i]);
  }
  return v;
}

bool Subspace::add(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < n_ && v[p] == 0) ++p;
  if (p == n_) return false;
  f_.scale(v, f_.inv(v[p]));
  for (auto& r : rows_)
    if (r[p] != 0) f_.axpy(r, f_.neg(r[p]), v);
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto pos = it - pivots_.begin();
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  s.add_all(b.basis());
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Zassenhaus: rows (u|u) and (v|0); rows with vanishing left half carry the
  // intersection on the right.
  const std::size_t n = a.ambient();
  const Field& f = a.field();
  Subspace z(f, 2 * n);
  for (const auto& u : a.basis()) {
    Vec w(2 * n);
    for (std::size_t i = 0; i < n; ++i) w[i] = w[n + i] = u[i];
    z.add(std::move(w));
  }
  for (const auto& v : b.basis()) {
    Vec w(2 * n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) w[i] = v[i];
    z.add(std::move(w));
  }
  Subspace out(f, n);
  for (std::size_t i = 0; i < z.dim(); ++i)
    if (z.pivots()[i] >= n) out.add(Vec(z.basis()[i].begin() + n, z.basis()[i].end()));
  return out;
}

std::vector<Vec> kernel_of_rows(const Subspace& rows) {
  const Field& f = rows.field();
  std::vector<Vec> out;
  const auto& piv = rows.pivots();
  for (std::size_t fc : rows.free_columns()) {
    Vec v(rows.ambient(), Scalar(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(rows.basis()[i][fc]);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> greedy_complement(const Subspace& base, const std::vector<Vec>& candidates) {
  Subspace s = base;
  std::vector<Vec> out;
  for (const auto& c : candidates)
    if (s.add(c)) out.push_back(c);
  return out;
}

}  // namespace grk
