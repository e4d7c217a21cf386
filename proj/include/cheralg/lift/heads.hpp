#pragma once
/// Heads and decomposition matrices of constituent-closed families of
/// modules with simple heads: the radical of a finite field specialization
/// is lifted through its abstract structure, and the quotient is accepted
/// only when its specialization is irreducible.

#include <random>
#include <string>
#include <vector>

#include "cheralg/lift/modfinder.hpp"
#include "cheralg/lift/specialize.hpp"
#include "cheralg/meataxe/meataxe.hpp"

namespace cheralg {

struct HeadOptions {
  std::vector<int> gset;  // initial generator set; empty = y-generators
  int retry_budget = 3;   // random-vector descents after a failed lift
  ModFinderOptions modfinder;
};

template <class F>
struct HeadResult {
  bool ok = false;
  std::string failure;
  GradedModule<F> head;
  FpAction head_fp;           // specialization of the head
  Matrix<F> radical;          // radical in V when lifted directly
  int radical_dim = 0;
  bool simple_by_specialization = false;
  int descents = 0;           // random-vector quotients taken
  int complexity = 0;         // of the lifted structure
};

/// Default initial generator set: the y-generators (all generators when
/// the module has no layout).
template <class F>
std::vector<int> default_gset(const GradedModule<F>& M) {
  std::vector<int> g;
  for (int i = 0; i < M.layout.rank; ++i) g.push_back(M.layout.y(i));
  return g;
}

namespace detail {

/// A random homogeneous vector with small integer coefficients in a
/// degree above the lowest one.
template <class F>
Vec<F> random_homogeneous(const GradedModule<F>& M, std::mt19937_64& rng) {
  auto degs = M.degree_list();
  std::vector<int> up(degs.begin() + (degs.size() > 1 ? 1 : 0), degs.end());
  int d = up[std::uniform_int_distribution<std::size_t>(0, up.size() - 1)(rng)];
  Vec<F> v(M.dim, F(0L));
  std::uniform_int_distribution<long> c(-3, 3);
  bool nz = false;
  for (int i : M.block(d)) {
    long x = c(rng);
    if (x) v[i] = F(x), nz = true;
  }
  if (!nz) v[M.block(d).front()] = F(1L);
  return v;
}

template <class F>
HeadResult<F> lift_head(const GradedModule<F>& V, const Specialization& spec, std::mt19937_64& rng,
                        const HeadOptions& opt) {
  HeadResult<F> r;
  FpAction Vb;
  try {
    Vb = to_fp_action(specialize_module(V, spec), spec.p);
  } catch (const DivisionError& e) {
    r.failure = std::string("specialization: ") + e.what();
    return r;
  }
  try {
    auto irr = is_irreducible(Vb, rng);
    if (irr.irreducible) {
      r.ok = true;
      r.simple_by_specialization = true;
      r.head = V;
      r.head_fp = std::move(Vb);
      r.radical = Matrix<F>(V.dim, 0);
      return r;
    }
    fp::Echelon Jb = radical(Vb, rng);
    if (Jb.dim() == 0) {
      r.failure = "specialization is semisimple but not simple";
      return r;
    }
    AbstractStructure A = abstract_structure(to_column_echelon(Jb, V.dim, spec.p));
    r.complexity = A.complexity;
    auto gset = opt.gset.empty() ? default_gset(V) : opt.gset;
    ModFinderResult<F> mf;
    try {
      mf = modfinder(V, A, gset, opt.modfinder);
    } catch (const ModuleError& e) {
      r.failure = std::string("modfinder: ") + e.what();
      return r;
    }
    if (mf.status != ModFinderStatus::Found) {
      r.failure = "modfinder: " + to_string(mf.status);
      return r;
    }
    GradedModule<F> Q = quotient(V, mf.submodule);
    FpAction Qb = to_fp_action(specialize_module(Q, spec), spec.p);
    if (!is_irreducible(Qb, rng).irreducible) {
      r.failure = "specialized quotient is reducible";
      return r;
    }
    r.ok = true;
    r.head = std::move(Q);
    r.head_fp = std::move(Qb);
    r.radical = std::move(mf.submodule);
    r.radical_dim = r.radical.cols();
    return r;
  } catch (const DivisionError& e) {
    r.failure = std::string("specialization: ") + e.what();
  } catch (const MeatAxeError& e) {
    r.failure = std::string("meataxe: ") + e.what();
  }
  return r;
}

}  // namespace detail

/// Head of V (assumed to have a simple head). On failure of the direct
/// lift, up to opt.retry_budget times a random homogeneous vector is spun
/// and, when it generates a proper submodule U, the lift is retried on
/// V/U (which has the same head).
template <class F>
HeadResult<F> head_and_radical(const GradedModule<F>& V, const Specialization& spec, std::mt19937_64& rng,
                               const HeadOptions& opt = {}) {
  HeadResult<F> r = detail::lift_head(V, spec, rng, opt);
  if (r.ok) return r;
  std::string first = r.failure;
  GradedModule<F> cur = V;
  for (int t = 0; t < opt.retry_budget && cur.degree_list().size() > 1; ++t) {
    Vec<F> v = detail::random_homogeneous(cur, rng);
    Matrix<F> U = graded_spin(cur, {v});
    if (U.cols() == 0 || U.cols() == cur.dim) continue;
    cur = quotient(cur, U);
    r = detail::lift_head(cur, spec, rng, opt);
    r.descents = t + 1;
    if (r.ok) {
      r.radical = Matrix<F>(V.dim, 0);  // only known inside the quotient
      r.radical_dim = V.dim - r.head.dim;
      return r;
    }
  }
  r.ok = false;
  r.failure = first + (r.failure != first ? "; after descents: " + r.failure : "");
  return r;
}

template <class F>
struct FamilyDecomposition {
  bool ok = false;
  std::string failure;
  std::vector<HeadResult<F>> heads;
  std::vector<std::vector<int>> matrix;  // matrix[a][b] = [V_a : head_b]
};

/// Heads of all members and the decomposition matrix of the family. Each
/// composition factor of a specialized member must be isomorphic to
/// exactly one specialized head.
template <class F>
FamilyDecomposition<F> decompose_family(const std::vector<GradedModule<F>>& Vs, const Specialization& spec,
                                        std::mt19937_64& rng, const HeadOptions& opt = {}) {
  FamilyDecomposition<F> out;
  int n = static_cast<int>(Vs.size());
  for (int a = 0; a < n; ++a) {
    auto h = head_and_radical(Vs[a], spec, rng, opt);
    if (!h.ok) {
      out.failure = "member " + std::to_string(a + 1) + ": " + h.failure;
      return out;
    }
    out.heads.push_back(std::move(h));
  }
  out.matrix.assign(n, std::vector<int>(n, 0));
  try {
    for (int a = 0; a < n; ++a) {
      FpAction Vb = to_fp_action(specialize_module(Vs[a], spec), spec.p);
      int audit = 0;
      for (auto& f : chop(Vb, rng)) {
        int match = -1, count = 0;
        for (int b = 0; b < n; ++b)
          if (is_isomorphic(f.module, out.heads[b].head_fp)) match = b, ++count;
        if (count != 1) {
          out.failure = "member " + std::to_string(a + 1) + ": a composition factor of dimension " +
                        std::to_string(f.module.dim) + " matches " + std::to_string(count) + " heads";
          return out;
        }
        out.matrix[a][match] = f.multiplicity;
        audit += f.multiplicity * out.heads[match].head.dim;
      }
      if (audit != Vs[a].dim) {
        out.failure = "member " + std::to_string(a + 1) + ": dimension audit failed";
        return out;
      }
    }
  } catch (const MeatAxeError& e) {
    out.failure = std::string("meataxe: ") + e.what();
    return out;
  } catch (const DivisionError& e) {
    out.failure = std::string("specialization: ") + e.what();
    return out;
  }
  out.ok = true;
  return out;
}

/// Blocks of the equivalence relation generated by "is a constituent of"
/// (D[a][b] != 0). Blocks are sorted by their smallest member.
inline std::vector<std::vector<int>> verma_families(const std::vector<std::vector<int>>& D) {
  int n = static_cast<int>(D.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (D[a][b]) parent[find(a)] = find(b);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) slot[r] = static_cast<int>(out.size()), out.emplace_back();
    out[slot[r]].push_back(i);
  }
  return out;
}

}  // namespace cheralg
