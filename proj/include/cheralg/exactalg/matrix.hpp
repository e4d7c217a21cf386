#pragma once
/// Dense exact matrices over a field F with echelon forms, kernels and
/// solving, plus a column-compressed sparse matrix used for module actions.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheralg/exactalg/rational.hpp"

namespace cheralg {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0L)) {}
  Matrix(int rows, int cols, std::vector<F> data) : r_(rows), c_(cols), a_(std::move(data)) {
    if (a_.size() != static_cast<std::size_t>(rows) * cols) throw std::invalid_argument("matrix data size");
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1L);
    return m;
  }
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(int rows, const std::vector<Vec<F>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const std::vector<F>& data() const { return a_; }

  Vec<F> column(int j) const {
    Vec<F> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<F> row(int i) const { return Vec<F>(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_); }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const F& x = a(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < b.c_; ++j)
          if (!is_zero(b(k, j))) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    Vec<F> out(a.r_, F(0L));
    for (int j = 0; j < a.c_; ++j) {
      if (is_zero(v[j])) continue;
      for (int i = 0; i < a.r_; ++i)
        if (!is_zero(a(i, j))) out[i] += a(i, j) * v[j];
    }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
  }
  Matrix scaled(const F& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return std::make_pair(a.r_, a.c_) < std::make_pair(b.r_, b.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (a.a_[i] != b.a_[i]) return a.a_[i] < b.a_[i];
    return false;
  }

  bool is_zero_matrix() const {
    return std::all_of(a_.begin(), a_.end(), [](const F& x) { return is_zero(x); });
  }

  F trace() const {
    F t(0L);
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref_inplace() {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = -1;
      for (int i = row; i < r_; ++i)
        if (!is_zero((*this)(i, col))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < c_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      F inv = inverse((*this)(row, col));
      for (int j = col; j < c_; ++j)
        if (!is_zero((*this)(row, j))) (*this)(row, j) *= inv;
      for (int i = 0; i < r_; ++i) {
        if (i == row || is_zero((*this)(i, col))) continue;
        F f = (*this)(i, col);
        for (int j = col; j < c_; ++j)
          if (!is_zero((*this)(row, j))) (*this)(i, j) -= f * (*this)(row, j);
      }
      piv.push_back(col);
      ++row;
    }
    return piv;
  }

  Matrix rref() const {
    Matrix m = *this;
    m.rref_inplace();
    return m;
  }
  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref_inplace().size());
  }

  /// Reduced column echelon form: the leading entry of each column is a 1
  /// at its first nonzero row, that row is zero in every other column, and
  /// pivot rows increase with the column index. Zero columns are dropped.
  Matrix rcef() const {
    Matrix t = transpose();
    auto piv = t.rref_inplace();
    Matrix out(r_, static_cast<int>(piv.size()));
    for (int j = 0; j < out.c_; ++j)
      for (int i = 0; i < r_; ++i) out(i, j) = t(j, i);
    return out;
  }

  /// Basis of the right kernel {v : A v = 0}.
  std::vector<Vec<F>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref_inplace();
    std::vector<char> is_piv(c_, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<Vec<F>> basis;
    for (int f = 0; f < c_; ++f) {
      if (is_piv[f]) continue;
      Vec<F> v(c_, F(0L));
      v[f] = F(1L);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(static_cast<int>(i), f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of A x = b, or nullopt when inconsistent.
  std::optional<Vec<F>> solve(const Vec<F>& b) const {
    Matrix aug(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_) = b[i];
    }
    auto piv = aug.rref_inplace();
    if (!piv.empty() && piv.back() == c_) return std::nullopt;
    Vec<F> x(c_, F(0L));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(static_cast<int>(i), c_);
    return x;
  }

  std::optional<Matrix> inverse_matrix() const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = F(1L);
    }
    auto piv = aug.rref_inplace();
    if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] != r_ - 1) return std::nullopt;
    Matrix inv(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

  F determinant() const {
    if (r_ != c_) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = *this;
    F det(1L);
    for (int col = 0; col < c_; ++col) {
      int p = -1;
      for (int i = col; i < r_; ++i)
        if (!is_zero(m(i, col))) {
          p = i;
          break;
        }
      if (p < 0) return F(0L);
      if (p != col) {
        for (int j = 0; j < c_; ++j) std::swap(m(p, j), m(col, j));
        det = -det;
      }
      det *= m(col, col);
      F inv = inverse(m(col, col));
      for (int i = col + 1; i < r_; ++i) {
        if (is_zero(m(i, col))) continue;
        F f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return det;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < c_; ++j) s += (j ? ", " : "") + to_string((*this)(i, j));
    }
    return s + "]";
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  int r_ = 0, c_ = 0;
  std::vector<F> a_;
};

/// Column-compressed sparse matrix; column j holds (row, value) pairs sorted
/// by row with no stored zeros.
template <class F>
class SparseMatrix {
 public:
  using Entry = std::pair<int, F>;
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : r_(rows), cols_(cols) {}
  static SparseMatrix from_dense(const Matrix<F>& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i)
        if (!is_zero(m(i, j))) s.cols_[j].emplace_back(i, m(i, j));
    return s;
  }
  Matrix<F> to_dense() const {
    Matrix<F> m(r_, cols());
    for (int j = 0; j < cols(); ++j)
      for (auto& [i, x] : cols_[j]) m(i, j) = x;
    return m;
  }
  int rows() const { return r_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  const std::vector<Entry>& column(int j) const { return cols_[j]; }
  std::size_t nnz() const {
    std::size_t n = 0;
    for (auto& c : cols_) n += c.size();
    return n;
  }
  /// Adds x at (i, j).
  void add(int i, int j, const F& x) {
    if (is_zero(x)) return;
    auto& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == i) {
      it->second += x;
      if (is_zero(it->second)) c.erase(it);
    } else {
      c.insert(it, Entry(i, x));
    }
  }
  F at(int i, int j) const {
    auto& c = cols_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, int r) { return e.first < r; });
    return it != c.end() && it->first == i ? it->second : F(0L);
  }
  Vec<F> apply(const Vec<F>& v) const {
    Vec<F> out(r_, F(0L));
    for (int j = 0; j < cols(); ++j) {
      if (is_zero(v[j])) continue;
      for (auto& [i, x] : cols_[j]) out[i] += x * v[j];
    }
    return out;
  }
  template <class G, class Fn>
  SparseMatrix<G> map(Fn f) const {
    SparseMatrix<G> s(r_, cols());
    for (int j = 0; j < cols(); ++j)
      for (auto& [i, x] : cols_[j]) s.add(i, j, f(x));
    return s;
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.r_ == b.r_ && a.cols_ == b.cols_;
  }

 private:
  int r_ = 0;
  std::vector<std::vector<Entry>> cols_;
  template <class G>
  friend class SparseMatrix;
};

/// Incrementally maintained reduced row-echelon basis of a subspace.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(int n = 0) : n_(n) {}
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<F>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  /// Reduce v against the basis (in place).
  void reduce(Vec<F>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F& c = v[piv_[k]];
      if (is_zero(c)) continue;
      F f = c;
      for (int j = 0; j < n_; ++j)
        if (!is_zero(rows_[k][j])) v[j] -= f * rows_[k][j];
    }
  }
  bool contains(Vec<F> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const F& x) { return is_zero(x); });
  }
  /// Insert v; returns false when v already lies in the span.
  bool insert(Vec<F> v) {
    reduce(v);
    int p = -1;
    for (int j = 0; j < n_; ++j)
      if (!is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    F inv = inverse(v[p]);
    for (auto& x : v)
      if (!is_zero(x)) x *= inv;
    for (auto& r : rows_) {
      if (is_zero(r[p])) continue;
      F f = r[p];
      for (int j = 0; j < n_; ++j)
        if (!is_zero(v[j])) r[j] -= f * v[j];
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

 private:
  int n_;
  std::vector<Vec<F>> rows_;
  std::vector<int> piv_;
};

}  // namespace cheralg
