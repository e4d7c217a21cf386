#pragma once
/// Abstract structures of subspaces: the pivot skeleton (coarse part) of a
/// reduced column echelon matrix and the pattern of equal non-pivot
/// entries (fine part), independent of the base field.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cheralg/exactalg.hpp"

namespace cheralg {

struct AbstractStructure {
  int rows = 0, cols = 0;
  std::vector<int> pivots;                             // pivot row of each column
  std::vector<std::vector<std::pair<int, int>>> fine;  // per column: (row, label), labels 1..s
  int complexity = 0;

  /// Coarse matrix (one leading 1 per column).
  std::vector<std::vector<int>> coarse_matrix() const {
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (int j = 0; j < cols; ++j) m[pivots[j]][j] = 1;
    return m;
  }
  std::vector<std::vector<int>> fine_matrix() const {
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (int j = 0; j < cols; ++j)
      for (auto& [i, l] : fine[j]) m[i][j] = l;
    return m;
  }
  /// Support rows of column j (pivot first).
  std::vector<int> support(int j) const {
    std::vector<int> s{pivots[j]};
    for (auto& [i, l] : fine[j]) s.push_back(i);
    return s;
  }
  friend bool operator==(const AbstractStructure& a, const AbstractStructure& b) {
    return a.rows == b.rows && a.cols == b.cols && a.pivots == b.pivots && a.fine == b.fine &&
           a.complexity == b.complexity;
  }

  std::string str() const {
    auto c = coarse_matrix(), f = fine_matrix();
    std::string s;
    for (int i = 0; i < rows; ++i) {
      s += "(";
      for (int j = 0; j < cols; ++j) s += (j ? " " : "") + std::to_string(c[i][j] + f[i][j]);
      s += ")\n";
    }
    return s;
  }
};

/// Checks the reduced column echelon shape: the first nonzero entry of
/// each column is 1, pivot rows increase and are zero in other columns.
template <class F>
bool is_rcef(const Matrix<F>& R) {
  int last = -1;
  for (int j = 0; j < R.cols(); ++j) {
    int p = -1;
    for (int i = 0; i < R.rows() && p < 0; ++i)
      if (!is_zero(R(i, j))) p = i;
    if (p <= last || !(R(p, j) == F(1L))) return false;
    for (int k = 0; k < R.cols(); ++k)
      if (k != j && !is_zero(R(p, k))) return false;
    last = p;
  }
  return true;
}

/// Labels are assigned to the distinct non-pivot values in the order of
/// their first occurrence, scanning positions (i, j) row by row.
template <class F>
AbstractStructure abstract_structure(const Matrix<F>& R) {
  if (!is_rcef(R)) throw std::invalid_argument("abstract_structure: matrix is not in reduced column echelon form");
  AbstractStructure A;
  A.rows = R.rows();
  A.cols = R.cols();
  A.fine.resize(A.cols);
  for (int j = 0; j < A.cols; ++j) {
    int p = 0;
    while (is_zero(R(p, j))) ++p;
    A.pivots.push_back(p);
  }
  std::vector<F> values;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      if (i == A.pivots[j] || is_zero(R(i, j))) continue;
      int label = 0;
      for (std::size_t v = 0; v < values.size() && !label; ++v)
        if (values[v] == R(i, j)) label = static_cast<int>(v) + 1;
      if (!label) {
        values.push_back(R(i, j));
        label = static_cast<int>(values.size());
      }
      A.fine[j].emplace_back(i, label);
    }
  A.complexity = static_cast<int>(values.size());
  return A;
}

/// cM + theta^*(fM); theta[q-1] is the value of label q. Values must be
/// nonzero and pairwise distinct.
template <class F>
Matrix<F> concretize(const AbstractStructure& A, const std::vector<F>& theta) {
  if (static_cast<int>(theta.size()) != A.complexity) throw std::invalid_argument("concretize: wrong number of values");
  for (std::size_t a = 0; a < theta.size(); ++a) {
    if (is_zero(theta[a])) throw std::invalid_argument("concretize: zero value");
    for (std::size_t b = a + 1; b < theta.size(); ++b)
      if (theta[a] == theta[b]) throw std::invalid_argument("concretize: values are not distinct");
  }
  Matrix<F> M(A.rows, A.cols);
  for (int j = 0; j < A.cols; ++j) {
    M(A.pivots[j], j) = F(1L);
    for (auto& [i, l] : A.fine[j]) M(i, j) = theta[l - 1];
  }
  return M;
}

}  // namespace cheralg
