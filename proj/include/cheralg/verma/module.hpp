#pragma once
/// Graded modules over an algebra given by generators: one sparse action
/// matrix per generator (column i is the image of basis vector i), a degree
/// per basis vector and a degree per generator. Submodules are stored as
/// column-echelon basis matrices.

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheralg/exactalg.hpp"

namespace cheralg {

struct ModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generator layout of modules over a restricted rational Cherednik
/// algebra: y_1..y_n (degree -1), g_1..g_r (degree 0), x_1..x_n (degree 1).
struct RRCALayout {
  int rank = 0;
  int num_group_gens = 0;
  int y(int i) const { return i; }
  int g(int j) const { return rank + j; }
  int x(int i) const { return rank + num_group_gens + i; }
  int size() const { return 2 * rank + num_group_gens; }
  std::vector<int> degrees() const {
    std::vector<int> d(size(), 0);
    for (int i = 0; i < rank; ++i) d[y(i)] = -1, d[x(i)] = 1;
    return d;
  }
  std::vector<std::string> names() const {
    std::vector<std::string> s;
    for (int i = 1; i <= rank; ++i) s.push_back("y" + std::to_string(i));
    for (int j = 1; j <= num_group_gens; ++j) s.push_back("g" + std::to_string(j));
    for (int i = 1; i <= rank; ++i) s.push_back("x" + std::to_string(i));
    return s;
  }
};

template <class F>
struct GradedModule {
  int dim = 0;
  std::vector<int> degrees;
  std::vector<int> gen_degrees;
  std::vector<std::string> gen_names;
  std::vector<SparseMatrix<F>> actions;
  RRCALayout layout;

  int num_gens() const { return static_cast<int>(actions.size()); }
  const SparseMatrix<F>& act(int k) const { return actions[k]; }

  /// Basis indices of degree d, ascending.
  std::vector<int> block(int d) const {
    std::vector<int> r;
    for (int i = 0; i < dim; ++i)
      if (degrees[i] == d) r.push_back(i);
    return r;
  }
  std::vector<int> degree_list() const {
    std::vector<int> d = degrees;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  }

  /// Checks that every action entry respects the grading.
  bool grading_compatible() const {
    for (int k = 0; k < num_gens(); ++k)
      for (int j = 0; j < dim; ++j)
        for (auto& [i, x] : actions[k].column(j))
          if (degrees[i] != degrees[j] + gen_degrees[k]) return false;
    return true;
  }

  template <class G, class Fn>
  GradedModule<G> map(Fn f) const {
    GradedModule<G> r;
    r.dim = dim;
    r.degrees = degrees;
    r.gen_degrees = gen_degrees;
    r.gen_names = gen_names;
    r.layout = layout;
    for (auto& a : actions) r.actions.push_back(a.template map<G>(f));
    return r;
  }

  /// Shape of the object, matching "Graded module of dimension d over an
  /// algebra with generator degrees [..]".
  std::string summary() const {
    std::string s = "Graded module of dimension " + std::to_string(dim) + " with generator degrees [";
    for (int k = 0; k < num_gens(); ++k) s += (k ? "," : "") + std::to_string(gen_degrees[k]);
    return s + "]";
  }
};

/// Degree of a homogeneous vector (nullopt for zero); throws otherwise.
template <class F>
std::optional<int> homogeneous_degree(const GradedModule<F>& M, const Vec<F>& v) {
  std::optional<int> d;
  for (int i = 0; i < M.dim; ++i) {
    if (is_zero(v[i])) continue;
    if (d && *d != M.degrees[i]) throw ModuleError("seed vector is not homogeneous");
    d = M.degrees[i];
  }
  return d;
}

/// Smallest graded submodule containing the homogeneous seeds, as a
/// column-echelon matrix (pivot = first nonzero entry, pivot rows zero in
/// other columns, columns sorted by pivot). Generators may be restricted
/// to `gens` (all when empty).
template <class F>
Matrix<F> graded_spin(const GradedModule<F>& M, const std::vector<Vec<F>>& seeds, const std::vector<int>& gens = {}) {
  std::vector<int> gset = gens;
  if (gset.empty())
    for (int k = 0; k < M.num_gens(); ++k) gset.push_back(k);
  // Per degree: basis indices and an echelon basis in block coordinates.
  std::map<int, std::vector<int>> idx;
  std::vector<int> pos(M.dim);
  for (int i = 0; i < M.dim; ++i) {
    auto& b = idx[M.degrees[i]];
    pos[i] = static_cast<int>(b.size());
    b.push_back(i);
  }
  std::map<int, EchelonBasis<F>> ech;
  std::vector<std::pair<int, Vec<F>>> queue;  // (degree, full vector)
  auto push = [&](int d, const Vec<F>& v) {
    auto& b = idx.at(d);
    Vec<F> local(b.size(), F(0L));
    for (std::size_t a = 0; a < b.size(); ++a) local[a] = v[b[a]];
    auto it = ech.find(d);
    if (it == ech.end()) it = ech.emplace(d, EchelonBasis<F>(static_cast<int>(b.size()))).first;
    if (it->second.insert(local)) queue.emplace_back(d, v);
  };
  for (auto& s : seeds) {
    auto d = homogeneous_degree(M, s);
    if (d) push(*d, s);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [d, v] = queue[q];
    for (int k : gset) {
      Vec<F> w = M.actions[k].apply(v);
      int e = d + M.gen_degrees[k];
      if (!idx.count(e)) continue;
      bool nz = false;
      for (int i : idx.at(e))
        if (!is_zero(w[i])) nz = true;
      if (nz) push(e, w);
    }
  }
  std::vector<std::pair<int, Vec<F>>> cols;
  for (auto& [d, eb] : ech) {
    auto& b = idx.at(d);
    for (std::size_t r = 0; r < eb.rows().size(); ++r) {
      Vec<F> full(M.dim, F(0L));
      for (std::size_t a = 0; a < b.size(); ++a) full[b[a]] = eb.rows()[r][a];
      cols.emplace_back(b[eb.pivots()[r]], std::move(full));
    }
  }
  std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec<F>> c;
  for (auto& [p, v] : cols) c.push_back(std::move(v));
  return Matrix<F>::from_columns(M.dim, c);
}

/// Pivot row of each column of a column-echelon matrix.
template <class F>
std::vector<int> column_pivots(const Matrix<F>& U) {
  std::vector<int> p;
  for (int j = 0; j < U.cols(); ++j) {
    int r = -1;
    for (int i = 0; i < U.rows(); ++i)
      if (!is_zero(U(i, j))) {
        r = i;
        break;
      }
    if (r < 0) throw ModuleError("zero column in submodule basis");
    p.push_back(r);
  }
  return p;
}

/// Reduce v modulo the column span of a column-echelon U (in place).
template <class F>
void reduce_mod_columns(Vec<F>& v, const Matrix<F>& U, const std::vector<int>& piv) {
  for (int j = 0; j < U.cols(); ++j) {
    F c = v[piv[j]];
    if (is_zero(c)) continue;
    for (int i = 0; i < U.rows(); ++i)
      if (!is_zero(U(i, j))) v[i] -= c * U(i, j);
  }
}

/// True when the column span of U is stable under all generators.
template <class F>
bool is_submodule(const GradedModule<F>& M, const Matrix<F>& U) {
  auto piv = column_pivots(U);
  for (int j = 0; j < U.cols(); ++j) {
    Vec<F> u = U.column(j);
    for (int k = 0; k < M.num_gens(); ++k) {
      Vec<F> w = M.actions[k].apply(u);
      reduce_mod_columns(w, U, piv);
      for (auto& x : w)
        if (!is_zero(x)) return false;
    }
  }
  return true;
}

/// M / U on the complement spanned by the non-pivot basis vectors.
template <class F>
GradedModule<F> quotient(const GradedModule<F>& M, const Matrix<F>& U) {
  if (U.cols() > 0 && !is_submodule(M, U)) throw ModuleError("quotient by a non-invariant subspace");
  auto piv = column_pivots(U);
  std::vector<char> is_piv(M.dim, 0);
  for (int p : piv) is_piv[p] = 1;
  std::vector<int> keep, where(M.dim, -1);
  for (int i = 0; i < M.dim; ++i)
    if (!is_piv[i]) where[i] = static_cast<int>(keep.size()), keep.push_back(i);
  GradedModule<F> Q;
  Q.dim = static_cast<int>(keep.size());
  for (int i : keep) Q.degrees.push_back(M.degrees[i]);
  Q.gen_degrees = M.gen_degrees;
  Q.gen_names = M.gen_names;
  Q.layout = M.layout;
  for (int k = 0; k < M.num_gens(); ++k) {
    SparseMatrix<F> A(Q.dim, Q.dim);
    for (int a = 0; a < Q.dim; ++a) {
      Vec<F> w(M.dim, F(0L));
      for (auto& [i, x] : M.actions[k].column(keep[a])) w[i] = x;
      reduce_mod_columns(w, U, piv);
      for (int i = 0; i < M.dim; ++i)
        if (!is_zero(w[i])) A.add(where[i], a, w[i]);
    }
    Q.actions.push_back(std::move(A));
  }
  return Q;
}

/// The action on the column span of U (basis = columns of U).
template <class F>
GradedModule<F> submodule(const GradedModule<F>& M, const Matrix<F>& U) {
  auto piv = column_pivots(U);
  GradedModule<F> S;
  S.dim = U.cols();
  for (int p : piv) S.degrees.push_back(M.degrees[p]);
  S.gen_degrees = M.gen_degrees;
  S.gen_names = M.gen_names;
  S.layout = M.layout;
  for (int k = 0; k < M.num_gens(); ++k) {
    SparseMatrix<F> A(S.dim, S.dim);
    for (int j = 0; j < S.dim; ++j) {
      Vec<F> w = M.actions[k].apply(U.column(j));
      Vec<F> r = w;
      for (int c = 0; c < S.dim; ++c)
        if (!is_zero(w[piv[c]])) A.add(c, j, w[piv[c]]);
      reduce_mod_columns(r, U, piv);
      for (auto& x : r)
        if (!is_zero(x)) throw ModuleError("subspace is not invariant");
    }
    S.actions.push_back(std::move(A));
  }
  return S;
}

/// Text serialization: header lines then one "a k row col scalar" line per
/// nonzero action entry.
template <class F>
void write_module(std::ostream& os, const GradedModule<F>& M, const std::string& field) {
  os << "gradedmodule\nfield " << field << "\ndimension " << M.dim << "\ndegrees";
  for (int d : M.degrees) os << ' ' << d;
  os << "\ngenerators";
  for (int k = 0; k < M.num_gens(); ++k) os << ' ' << M.gen_names[k] << ':' << M.gen_degrees[k];
  os << "\nlayout " << M.layout.rank << ' ' << M.layout.num_group_gens << '\n';
  for (int k = 0; k < M.num_gens(); ++k)
    for (int j = 0; j < M.dim; ++j)
      for (auto& [i, x] : M.actions[k].column(j)) os << "a " << k << ' ' << i << ' ' << j << ' ' << to_string(x) << '\n';
  os << "end\n";
}

/// Inverse of write_module; `parse` turns a scalar token into F. Returns
/// the field line through `field` when non-null.
template <class F>
GradedModule<F> read_module(std::istream& is, const std::function<F(const std::string&)>& parse,
                            std::string* field = nullptr) {
  GradedModule<F> M;
  std::string line, key;
  auto need = [&](const char* what) {
    if (!std::getline(is, line)) throw ModuleError(std::string("module text ends before ") + what);
    std::istringstream ls(line);
    ls >> key;
    if (key != what) throw ModuleError("expected '" + std::string(what) + "', got '" + key + "'");
    std::string rest;
    std::getline(ls, rest);
    return rest;
  };
  need("gradedmodule");
  std::string f = need("field");
  if (field) *field = f.empty() ? f : f.substr(1);
  M.dim = std::stoi(need("dimension"));
  {
    std::istringstream ls(need("degrees"));
    int d;
    while (ls >> d) M.degrees.push_back(d);
    if (static_cast<int>(M.degrees.size()) != M.dim) throw ModuleError("degree count does not match dimension");
  }
  {
    std::istringstream ls(need("generators"));
    std::string g;
    while (ls >> g) {
      auto c = g.rfind(':');
      if (c == std::string::npos) throw ModuleError("generator without degree: " + g);
      M.gen_names.push_back(g.substr(0, c));
      M.gen_degrees.push_back(std::stoi(g.substr(c + 1)));
    }
  }
  {
    std::istringstream ls(need("layout"));
    ls >> M.layout.rank >> M.layout.num_group_gens;
  }
  for (int k = 0; k < static_cast<int>(M.gen_names.size()); ++k) M.actions.emplace_back(M.dim, M.dim);
  while (std::getline(is, line)) {
    if (line == "end") return M;
    std::istringstream ls(line);
    std::string a, val;
    int k, i, j;
    if (!(ls >> a >> k >> i >> j) || a != "a") throw ModuleError("bad action line: " + line);
    std::getline(ls >> std::ws, val);
    if (k < 0 || k >= M.num_gens() || i < 0 || i >= M.dim || j < 0 || j >= M.dim) throw ModuleError("entry out of range: " + line);
    M.actions[k].add(i, j, parse(val));
  }
  throw ModuleError("module text without 'end'");
}

}  // namespace cheralg
