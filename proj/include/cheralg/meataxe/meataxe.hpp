#pragma once
/// MeatAxe over prime fields: irreducibility testing (Holt-Rees variant of
/// Norton's criterion), composition factors, homomorphism spaces,
/// isomorphism testing and radicals. Randomness comes from an explicitly
/// seeded generator passed by the caller.

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheralg/meataxe/fpmat.hpp"
#include "cheralg/verma/module.hpp"

namespace cheralg {

struct MeatAxeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A module over F_p given by dense generator matrices (column j is the
/// image of basis vector j).
struct FpAction {
  int dim = 0;
  fp::u32 p = 0;
  std::vector<fp::Mat> gens;

  FpAction transpose() const {
    FpAction t{dim, p, {}};
    for (auto& g : gens) t.gens.push_back(g.transpose());
    return t;
  }
};

inline FpAction to_fp_action(const GradedModule<Fp>& M, fp::u32 p) {
  FpAction A{M.dim, p, {}};
  for (auto& s : M.actions) {
    fp::Mat m(M.dim, M.dim, p);
    for (int j = 0; j < M.dim; ++j)
      for (auto& [i, x] : s.column(j)) m(i, j) = static_cast<fp::u32>(x.bound_to(p).value());
    A.gens.push_back(std::move(m));
  }
  return A;
}

/// Smallest invariant subspace containing the seeds.
inline fp::Echelon spin(const FpAction& M, const std::vector<fp::Vec>& seeds) {
  fp::Echelon E(M.dim, M.p);
  std::vector<fp::Vec> queue;
  for (auto& s : seeds)
    if (E.insert(s)) queue.push_back(s);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto& g : M.gens) {
      fp::Vec w = g.apply(queue[q]);
      if (E.insert(w)) queue.push_back(std::move(w));
      if (E.dim() == M.dim) return E;
    }
  return E;
}

/// Action on an invariant subspace with echelon basis U (coordinates read
/// off at the pivots).
inline FpAction sub_action(const FpAction& M, const fp::Echelon& U) {
  int d = U.dim();
  FpAction S{d, M.p, {}};
  for (auto& g : M.gens) {
    fp::Mat m(d, d, M.p);
    for (int j = 0; j < d; ++j) {
      fp::Vec w = g.apply(U.rows()[j]);
      for (int i = 0; i < d; ++i) m(i, j) = w[U.pivots()[i]];
    }
    S.gens.push_back(std::move(m));
  }
  return S;
}

/// Action on M/U with basis the non-pivot standard vectors.
inline FpAction quotient_action(const FpAction& M, const fp::Echelon& U) {
  std::vector<char> piv(M.dim, 0);
  for (int p : U.pivots()) piv[p] = 1;
  std::vector<int> keep, where(M.dim, -1);
  for (int i = 0; i < M.dim; ++i)
    if (!piv[i]) where[i] = static_cast<int>(keep.size()), keep.push_back(i);
  int d = static_cast<int>(keep.size());
  FpAction Q{d, M.p, {}};
  for (auto& g : M.gens) {
    fp::Mat m(d, d, M.p);
    for (int a = 0; a < d; ++a) {
      fp::Vec w = g.column(keep[a]);
      U.reduce(w);
      for (int i = 0; i < M.dim; ++i)
        if (w[i]) m(where[i], a) = w[i];
    }
    Q.gens.push_back(std::move(m));
  }
  return Q;
}

/// Annihilator in F_p^n of the span of the rows of W.
inline fp::Echelon annihilator(const fp::Echelon& W, int n, fp::u32 p) {
  fp::Mat m(W.dim(), n, p);
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = W.rows()[i][j];
  fp::Echelon E(n, p);
  for (auto& v : fp::nullspace(m)) E.insert(v);
  return E;
}

/// Outcome of the irreducibility test: either a proper nonzero
/// submodule or a certificate (an algebra element A and an irreducible
/// factor f of its characteristic polynomial with nullity of f(A) equal
/// to deg f).
struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<fp::Echelon> submodule;
  fp::Mat element;
  fp::Poly factor;
};

/// Random algebra elements as linear combinations of products of
/// generators, in the Holt-Rees style.
class RandomElements {
 public:
  RandomElements(const FpAction& M, std::mt19937_64& rng) : M_(M), rng_(rng), pool_(M.gens) {
    if (pool_.empty()) pool_.push_back(fp::Mat::identity(M.dim, M.p));
  }
  fp::Mat next() {
    std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
    fp::Mat w = pool_[pick(rng_)] * pool_[pick(rng_)];
    if (pool_.size() < 24) pool_.push_back(w);
    else pool_[pick(rng_)] = w;
    std::uniform_int_distribution<fp::u32> coef(1, M_.p - 1);
    fp::Mat a = w.scaled(coef(rng_));
    for (int k = 0; k < 2; ++k) a = a + pool_[pick(rng_)].scaled(coef(rng_));
    return a;
  }

 private:
  const FpAction& M_;
  std::mt19937_64& rng_;
  std::vector<fp::Mat> pool_;
};

inline IrreducibilityResult is_irreducible(const FpAction& M, std::mt19937_64& rng, int attempts = 300) {
  IrreducibilityResult res;
  if (M.dim == 0) throw MeatAxeError("irreducibility test on the zero module");
  if (M.dim == 1) {
    res.irreducible = true;
    res.element = fp::Mat::identity(1, M.p);
    res.factor = {fp::subm(0, 1, M.p), 1};
    return res;
  }
  FpAction Mt = M.transpose();
  RandomElements R(M, rng);
  for (int att = 0; att < attempts; ++att) {
    fp::Mat A = R.next();
    auto chi = fp::charpoly(A);
    for (auto& f : fp::irreducible_factors(chi, M.p, rng)) {
      if (fp::deg(f) > 8 && fp::deg(f) > M.dim / 4) continue;
      fp::Mat B = fp::eval_at(f, A);
      auto N = fp::nullspace(B);
      if (N.empty()) continue;
      auto U = spin(M, {N[0]});
      if (U.dim() < M.dim) {
        res.submodule = std::move(U);
        return res;
      }
      auto Nt = fp::nullspace(B.transpose());
      auto W = spin(Mt, {Nt[0]});
      if (W.dim() < M.dim) {
        res.submodule = annihilator(W, M.dim, M.p);
        return res;
      }
      if (static_cast<int>(N.size()) == fp::deg(f)) {
        res.irreducible = true;
        res.element = A;
        res.factor = f;
        return res;
      }
    }
  }
  throw MeatAxeError("irreducibility test exhausted its random elements; retry with a new seed");
}

/// Basis of Hom(M, N) as N.dim x M.dim matrices.
inline std::vector<fp::Mat> hom_space(const FpAction& M, const FpAction& N) {
  if (M.p != N.p || M.gens.size() != N.gens.size()) throw std::invalid_argument("hom_space: incompatible modules");
  const fp::u32 p = M.p;
  const int m = M.dim, n = N.dim;
  if (m == 0 || n == 0) return {};
  // Spin M from standard vectors; every spun vector b has a known image
  // L_b u, linear in the unknown images u of the seeds.
  std::vector<fp::Vec> basis;
  std::vector<fp::Mat> images;  // n x (r n) with r seeds
  fp::Echelon E(m, p);
  int r = 0;
  // Collect the spinning tree first, then build images once r is known.
  struct Node {
    int parent = -1, gen = -1, seed = -1;
  };
  std::vector<Node> nodes;
  std::vector<std::tuple<int, int>> deps;  // (node, gen) with dependent image
  for (int s = 0; s < m && E.dim() < m; ++s) {
    fp::Vec e(m, 0);
    e[s] = 1;
    if (!E.insert(e)) continue;
    nodes.push_back({-1, -1, r++});
    basis.push_back(e);
    for (std::size_t q = basis.size() - 1; q < basis.size(); ++q)
      for (int k = 0; k < static_cast<int>(M.gens.size()); ++k) {
        fp::Vec w = M.gens[k].apply(basis[q]);
        if (E.insert(w)) {
          nodes.push_back({static_cast<int>(q), k, -1});
          basis.push_back(std::move(w));
        } else {
          deps.emplace_back(static_cast<int>(q), k);
        }
      }
  }
  int U = r * n;
  images.resize(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (nodes[i].seed >= 0) {
      fp::Mat L(n, U, p);
      for (int a = 0; a < n; ++a) L(a, nodes[i].seed * n + a) = 1;
      images[i] = std::move(L);
    } else {
      images[i] = N.gens[nodes[i].gen] * images[nodes[i].parent];
    }
  }
  fp::Mat Bm = fp::Mat::from_columns(m, basis, p);
  fp::Mat Binv = fp::inverse(Bm);
  fp::Echelon C(U, p);
  for (auto [q, k] : deps) {
    if (C.dim() == U) break;
    fp::Vec w = M.gens[k].apply(basis[q]);
    fp::Vec alpha = Binv.apply(w);
    fp::Mat lhs = N.gens[k] * images[q];
    for (int j = 0; j < m; ++j)
      if (alpha[j]) lhs = lhs - images[j].scaled(alpha[j]);
    for (int a = 0; a < n && C.dim() < U; ++a) {
      fp::Vec row(lhs.a.begin() + std::size_t(a) * U, lhs.a.begin() + std::size_t(a + 1) * U);
      if (!fp::is_zero_vec(row)) C.insert(std::move(row));
    }
  }
  fp::Mat cons(C.dim(), U, p);
  for (int i = 0; i < C.dim(); ++i)
    for (int j = 0; j < U; ++j) cons(i, j) = C.rows()[i][j];
  std::vector<fp::Mat> out;
  for (auto& u : fp::nullspace(cons)) {
    // Phi B = [L_b u]; Phi = [L_b u] B^-1.
    std::vector<fp::Vec> cols;
    for (std::size_t i = 0; i < basis.size(); ++i) cols.push_back(images[i].apply(u));
    out.push_back(fp::Mat::from_columns(n, cols, p) * Binv);
  }
  return out;
}

/// For simple modules S and T: true iff S and T are isomorphic.
inline bool is_isomorphic(const FpAction& S, const FpAction& T) {
  if (S.dim != T.dim || S.p != T.p || S.gens.size() != T.gens.size()) return false;
  for (auto& h : hom_space(S, T))
    if (fp::rank(h) == S.dim) return true;
  return false;
}

struct CompositionFactor {
  FpAction module;
  int multiplicity = 0;
};

/// Composition factors with multiplicities; factors are pairwise
/// non-isomorphic and listed in order of discovery.
inline std::vector<CompositionFactor> chop(const FpAction& M, std::mt19937_64& rng) {
  std::vector<CompositionFactor> out;
  std::vector<FpAction> stack{M};
  while (!stack.empty()) {
    FpAction X = std::move(stack.back());
    stack.pop_back();
    if (X.dim == 0) continue;
    auto r = is_irreducible(X, rng);
    if (!r.irreducible) {
      // Push the quotient first so the submodule is handled first.
      stack.push_back(quotient_action(X, *r.submodule));
      stack.push_back(sub_action(X, *r.submodule));
      continue;
    }
    bool found = false;
    for (auto& f : out)
      if (is_isomorphic(f.module, X)) {
        ++f.multiplicity;
        found = true;
        break;
      }
    if (!found) out.push_back({std::move(X), 1});
  }
  return out;
}

/// Radical of M: the intersection of kernels of all homomorphisms to its
/// composition factors.
inline fp::Echelon radical(const FpAction& M, std::mt19937_64& rng) {
  auto factors = chop(M, rng);
  fp::Echelon rows(M.dim, M.p);
  for (auto& f : factors)
    for (auto& h : hom_space(M, f.module))
      for (int i = 0; i < h.r; ++i) {
        fp::Vec row(h.a.begin() + std::size_t(i) * h.c, h.a.begin() + std::size_t(i + 1) * h.c);
        rows.insert(std::move(row));
      }
  return annihilator(rows, M.dim, M.p);
}

/// Column-echelon Matrix<Fp> from an echelon basis (same convention as the
/// exact modules: pivot = first nonzero entry of a column).
inline Matrix<Fp> to_column_echelon(const fp::Echelon& E, int n, fp::u32 p) {
  Matrix<Fp> m(n, E.dim());
  for (int j = 0; j < E.dim(); ++j)
    for (int i = 0; i < n; ++i) m(i, j) = Fp(static_cast<long>(E.rows()[j][i]), p);
  return m;
}

inline Matrix<Fp> radical(const GradedModule<Fp>& M, fp::u32 p, std::mt19937_64& rng) {
  return to_column_echelon(radical(to_fp_action(M, p), rng), M.dim, p);
}

}  // namespace cheralg
