#pragma once
/// Finding a graded submodule with a prescribed abstract structure. The
/// condition a_k u_j in <u_l : l in D_kj> is matched coefficient by
/// coefficient against the basis, giving equations that are bilinear in
/// the theta-values and the auxiliary coefficients Y. They are solved by a
/// cascade of linear subsystems; any complete solution is verified by
/// graded spinning before it is returned.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cheralg/lift/abstract.hpp"
#include "cheralg/verma/module.hpp"

namespace cheralg {

/// Incrementally maintained reduced row echelon form of sparse affine
/// equations sum a_v x_v = b.
template <class F>
class SparseLinearSystem {
 public:
  using Row = std::vector<std::pair<int, F>>;  // sorted by variable

  /// Adds an equation; returns false if the system became inconsistent.
  bool add(Row a, F b) {
    Row acc = std::move(a);
    std::vector<std::pair<int, F>> hits;
    for (auto& [v, c] : acc)
      if (pivot_.count(v)) hits.emplace_back(v, c);
    for (auto& [v, c] : hits) {
      const auto& r = rows_[pivot_.at(v)];
      axpy(acc, r.a, -c);
      b -= c * r.b;
    }
    if (acc.empty()) {
      if (!is_zero(b)) inconsistent_ = true;
      return !inconsistent_;
    }
    int pv = acc.front().first;
    F inv = inverse(acc.front().second);
    for (auto& [v, c] : acc) c *= inv;
    b *= inv;
    for (auto& r : rows_) {
      auto it = std::lower_bound(r.a.begin(), r.a.end(), pv, [](const auto& e, int x) { return e.first < x; });
      if (it == r.a.end() || it->first != pv) continue;
      F f = it->second;
      axpy(r.a, acc, -f);
      r.b -= f * b;
    }
    pivot_[pv] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(acc), std::move(b)});
    return true;
  }
  bool inconsistent() const { return inconsistent_; }

  /// Variables whose value is forced, with their values.
  std::vector<std::pair<int, F>> determined() const {
    std::vector<std::pair<int, F>> out;
    for (auto& r : rows_)
      if (r.a.size() == 1) out.emplace_back(r.a[0].first, r.b);
    return out;
  }

  /// dst += f * src on sorted sparse rows.
  static void axpy(Row& dst, const Row& src, const F& f) {
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
      if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
        out.push_back(std::move(dst[a++]));
      } else if (a == dst.size() || src[b].first < dst[a].first) {
        out.emplace_back(src[b].first, f * src[b].second);
        ++b;
      } else {
        F c = dst[a].second + f * src[b].second;
        if (!is_zero(c)) out.emplace_back(dst[a].first, std::move(c));
        ++a, ++b;
      }
    }
    dst = std::move(out);
  }

 private:
  struct Eq {
    Row a;
    F b;
  };
  std::vector<Eq> rows_;
  std::map<int, int> pivot_;
  bool inconsistent_ = false;
};

/// The coefficient equations for a structure A in a module M. Equation
/// (k, j, i) reads c0 + sum theta-terms + sum Y-terms + sum Y*theta-terms
/// = 0 and comes from row i of a_k u_j - sum_{l in D_kj} Y_l^{(k,j)} u_l.
template <class F>
struct ESystem {
  struct Equation {
    int k = 0, j = 0, i = 0;
    F c0{0L};
    std::vector<std::pair<int, F>> theta;         // (theta index, coefficient)
    std::vector<std::pair<int, F>> y;             // (Y index, coefficient)
    std::vector<std::tuple<int, int, F>> ytheta;  // (Y index, theta index, coefficient)
    /// Rows outside every target column's support: homogeneous in theta.
    bool linear_stratum() const { return y.empty() && ytheta.empty(); }
  };
  int num_theta = 0;
  std::vector<int> col_degree;                 // d_M^c(j)
  std::vector<std::tuple<int, int, int>> yvar;  // Y index -> (k, j, l)
  std::vector<Equation> eqs;

  /// D^c_kj for an equation's (k, j).
  std::vector<int> target_columns(const GradedModule<F>& M, int k, int j) const {
    std::vector<int> D;
    for (int l = 0; l < static_cast<int>(col_degree.size()); ++l)
      if (col_degree[l] == col_degree[j] + M.gen_degrees[k]) D.push_back(l);
    return D;
  }
};

/// Builds the equations for the generators in `gens` (all when empty).
/// Throws ModuleError when a column of A has support in several degrees.
template <class F>
ESystem<F> build_esystem(const GradedModule<F>& M, const AbstractStructure& A, const std::vector<int>& gens = {}) {
  if (A.rows != M.dim) throw ModuleError("abstract structure does not match the module dimension");
  std::vector<int> gset = gens;
  if (gset.empty()) {
    gset.resize(M.num_gens());
    std::iota(gset.begin(), gset.end(), 0);
  }
  ESystem<F> E;
  E.num_theta = A.complexity;
  int m = A.cols;
  std::map<int, std::vector<int>> cols_of_degree;
  for (int j = 0; j < m; ++j) {
    int d = M.degrees[A.pivots[j]];
    for (int i : A.support(j))
      if (M.degrees[i] != d) throw ModuleError("column " + std::to_string(j + 1) + " of the structure is not homogeneous");
    E.col_degree.push_back(d);
    cols_of_degree[d].push_back(j);
  }
  // Per row: (column, label) with label 0 for a pivot entry.
  std::vector<std::vector<std::pair<int, int>>> by_row(M.dim);
  for (int j = 0; j < m; ++j) {
    by_row[A.pivots[j]].emplace_back(j, 0);
    for (auto& [i, l] : A.fine[j]) by_row[i].emplace_back(j, l);
  }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < M.dim; ++i) blocks[M.degrees[i]].push_back(i);

  struct Lin {
    F c{0L};
    std::map<int, F> th;
  };
  std::vector<int> yid(m, -1);
  for (int j = 0; j < m; ++j)
    for (int k : gset) {
      int e = E.col_degree[j] + M.gen_degrees[k];
      auto bit = blocks.find(e);
      if (bit == blocks.end()) continue;
      std::map<int, Lin> w;
      auto add_col = [&](int l, int label) {
        for (auto& [i, x] : M.actions[k].column(l)) {
          if (label == 0) w[i].c += x;
          else w[i].th[label - 1] += x;
        }
      };
      add_col(A.pivots[j], 0);
      for (auto& [i, l] : A.fine[j]) add_col(i, l);
      std::vector<int> D;
      if (auto it = cols_of_degree.find(e); it != cols_of_degree.end()) D = it->second;
      for (int l : D) {
        yid[l] = static_cast<int>(E.yvar.size());
        E.yvar.emplace_back(k, j, l);
      }
      for (int i : bit->second) {
        typename ESystem<F>::Equation eq;
        eq.k = k, eq.j = j, eq.i = i;
        if (auto it = w.find(i); it != w.end()) {
          eq.c0 = it->second.c;
          for (auto& [q, c] : it->second.th)
            if (!is_zero(c)) eq.theta.emplace_back(q, c);
        }
        for (auto& [l, label] : by_row[i]) {
          if (yid[l] < 0) continue;
          if (label == 0) eq.y.emplace_back(yid[l], F(-1L));
          else eq.ytheta.emplace_back(yid[l], label - 1, F(-1L));
        }
        if (is_zero(eq.c0) && eq.theta.empty() && eq.y.empty() && eq.ytheta.empty()) continue;
        E.eqs.push_back(std::move(eq));
      }
      for (int l : D) yid[l] = -1;
    }
  return E;
}

enum class ModFinderStatus { Found, NoSubmodule, NotLinearlySolvable };

inline std::string to_string(ModFinderStatus s) {
  switch (s) {
    case ModFinderStatus::Found: return "found";
    case ModFinderStatus::NoSubmodule: return "no graded submodule with this structure";
    case ModFinderStatus::NotLinearlySolvable: return "not uniquely linearly solvable";
  }
  return "";
}

template <class F>
struct ModFinderResult {
  ModFinderStatus status = ModFinderStatus::NotLinearlySolvable;
  Matrix<F> submodule;  // column echelon basis when found
  std::vector<F> theta;
  int passes = 0;
  bool escalated = false;
  int equations = 0;
};

struct ModFinderOptions {
  /// Dependent subsystems with more equations are deferred while smaller
  /// ones still make progress.
  std::size_t subsystem_cap = 4000;
};

/// Solves the equation system by linear cascades, starting with the
/// generators in `gens` and escalating to all generators when stuck.
template <class F>
ModFinderResult<F> modfinder(const GradedModule<F>& M, const AbstractStructure& A, std::vector<int> gens = {},
                             const ModFinderOptions& opt = {}) {
  ModFinderResult<F> res;
  ESystem<F> E = build_esystem(M, A);
  res.equations = static_cast<int>(E.eqs.size());
  const int s = E.num_theta;
  std::vector<char> in_gset(M.num_gens(), gens.empty());
  for (int k : gens) in_gset.at(k) = 1;
  std::vector<std::optional<F>> th(s), Y(E.yvar.size());
  using Row = typename SparseLinearSystem<F>::Row;
  std::set<int> deferred;

  auto known_theta = [&] { return std::count_if(th.begin(), th.end(), [](auto& o) { return o.has_value(); }); };
  auto assign = [&](int v, const F& x) {
    if (v < s) {
      if (th[v]) return false;
      th[v] = x;
    } else {
      if (Y[v - s]) return false;
      Y[v - s] = x;
    }
    return true;
  };

  while (known_theta() < s) {
    ++res.passes;
    // Linear part of the system under the current partial solution.
    std::vector<std::pair<Row, F>> lin;
    bool bad = false;
    for (auto& eq : E.eqs) {
      if (!in_gset[eq.k]) continue;
      std::map<int, F> a;
      F b = -eq.c0;
      bool nonlinear = false;
      for (auto& [q, c] : eq.theta) {
        if (th[q]) b -= c * *th[q];
        else a[q] += c;
      }
      for (auto& [v, c] : eq.y) {
        if (Y[v]) b -= c * *Y[v];
        else a[s + v] += c;
      }
      for (auto& [v, q, c] : eq.ytheta) {
        if (Y[v] && th[q]) b -= c * *Y[v] * *th[q];
        else if (Y[v]) a[q] += c * *Y[v];
        else if (th[q]) a[s + v] += c * *th[q];
        else nonlinear = true;
      }
      if (nonlinear) continue;
      Row r;
      for (auto& [v, c] : a)
        if (!is_zero(c)) r.emplace_back(v, c);
      if (r.empty()) {
        if (!is_zero(b)) bad = true;
        continue;
      }
      lin.emplace_back(std::move(r), std::move(b));
    }
    if (bad) {
      res.status = ModFinderStatus::NoSubmodule;
      return res;
    }
    // Dependent subsystems: closure over shared undetermined thetas.
    std::vector<int> parent(s + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<int> owner(lin.size());
    for (std::size_t e = 0; e < lin.size(); ++e) {
      int first = -1;
      for (auto& [v, c] : lin[e].first) {
        if (v >= s) break;
        if (first < 0) first = v;
        else parent[find(v)] = find(first);
      }
      owner[e] = first;
    }
    std::map<int, std::vector<std::size_t>> comps;  // keyed by smallest theta; s = Y-only
    for (std::size_t e = 0; e < lin.size(); ++e) comps[owner[e] < 0 ? s : find(owner[e])].push_back(e);
    std::map<int, int> key_of;  // root -> smallest member theta
    for (int q = s - 1; q >= 0; --q) key_of[find(q)] = q;
    std::vector<std::pair<int, std::vector<std::size_t>>> order;
    for (auto& [root, list] : comps) order.emplace_back(root == s ? s : key_of[root], std::move(list));
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first < b.first; });

    bool progress = false;
    std::set<int> next_deferred;
    auto solve = [&](const std::vector<std::size_t>& list) {
      SparseLinearSystem<F> L;
      for (auto e : list)
        if (!L.add(lin[e].first, lin[e].second)) return false;
      for (auto& [v, x] : L.determined())
        if (assign(v, x)) progress = true;
      return true;
    };
    for (auto& [key, list] : order) {
      if (list.size() > opt.subsystem_cap) {
        next_deferred.insert(key);
        if (deferred.count(key)) continue;
      }
      if (!solve(list)) {
        res.status = ModFinderStatus::NoSubmodule;
        return res;
      }
    }
    deferred = std::move(next_deferred);
    if (!progress) {
      // Everything linear at once before giving up on this generator set.
      std::vector<std::size_t> all(lin.size());
      std::iota(all.begin(), all.end(), 0);
      if (!solve(all)) {
        res.status = ModFinderStatus::NoSubmodule;
        return res;
      }
    }
    if (!progress) {
      if (std::all_of(in_gset.begin(), in_gset.end(), [](char c) { return c; })) {
        res.status = ModFinderStatus::NotLinearlySolvable;
        return res;
      }
      std::fill(in_gset.begin(), in_gset.end(), 1);
      res.escalated = true;
    }
  }
  for (auto& t : th) res.theta.push_back(*t);
  Matrix<F> U;
  try {
    U = concretize(A, res.theta);
  } catch (const std::invalid_argument&) {
    res.status = ModFinderStatus::NotLinearlySolvable;
    return res;
  }
  std::vector<Vec<F>> cols;
  for (int j = 0; j < U.cols(); ++j) cols.push_back(U.column(j));
  Matrix<F> S = graded_spin(M, cols);
  if (S.cols() != U.cols()) {
    res.status = ModFinderStatus::NotLinearlySolvable;
    return res;
  }
  res.status = ModFinderStatus::Found;
  res.submodule = std::move(U);
  return res;
}

}  // namespace cheralg
