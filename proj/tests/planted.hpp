#pragma once
// Planted modules over F_p: block upper-triangular extensions of random
// simple modules, conjugated by a random invertible matrix.

#include <random>

#include "cheralg/meataxe/meataxe.hpp"

namespace testsupport {

using cheralg::FpAction;
namespace fp = cheralg::fp;

inline fp::Mat random_mat(int r, int c, fp::u32 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<fp::u32> d(0, p - 1);
  fp::Mat m(r, c, p);
  for (auto& x : m.a) x = d(rng);
  return m;
}

inline fp::Mat random_invertible(int n, fp::u32 p, std::mt19937_64& rng) {
  for (;;) {
    fp::Mat m = random_mat(n, n, p, rng);
    if (fp::rank(m) == n) return m;
  }
}

/// Random module with `gens` generators that passes the irreducibility test.
inline FpAction random_simple(int dim, int gens, fp::u32 p, std::mt19937_64& rng) {
  for (;;) {
    FpAction S{dim, p, {}};
    for (int k = 0; k < gens; ++k) S.gens.push_back(random_mat(dim, dim, p, rng));
    if (cheralg::is_irreducible(S, rng).irreducible) return S;
  }
}

inline FpAction conjugate(const FpAction& M, const fp::Mat& P) {
  fp::Mat Pi = fp::inverse(P);
  FpAction R{M.dim, M.p, {}};
  for (auto& g : M.gens) R.gens.push_back(P * g * Pi);
  return R;
}

struct PlantedExtension {
  FpAction module;        // conjugated
  FpAction top, bottom;   // bottom is the planted submodule
  fp::Mat P;              // conjugating matrix
  bool split = false;     // extension class is zero
};

/// [[S1, X], [0, S2]] with S1 = bottom (a submodule) and S2 = top.
inline PlantedExtension planted_extension(int a, int b, int gens, fp::u32 p, std::mt19937_64& rng, bool force_split = false) {
  PlantedExtension e;
  e.bottom = random_simple(a, gens, p, rng);
  e.top = random_simple(b, gens, p, rng);
  std::vector<fp::Mat> X;
  for (int k = 0; k < gens; ++k) X.push_back(force_split ? fp::Mat(a, b, p) : random_mat(a, b, p, rng));
  FpAction M{a + b, p, {}};
  for (int k = 0; k < gens; ++k) {
    fp::Mat g(a + b, a + b, p);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j) g(i, j) = e.bottom.gens[k](i, j);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) g(a + i, a + j) = e.top.gens[k](i, j);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) g(i, a + j) = X[k](i, j);
    M.gens.push_back(std::move(g));
  }
  // Split iff X_k = S1_k Y - Y S2_k for one a x b matrix Y and all k.
  int U = a * b;
  fp::Mat sys(gens * U, U + 1, p);
  for (int k = 0; k < gens; ++k)
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        int row = k * U + i * b + j;
        for (int l = 0; l < a; ++l) sys(row, l * b + j) = fp::addm(sys(row, l * b + j), e.bottom.gens[k](i, l), p);
        for (int l = 0; l < b; ++l) sys(row, i * b + l) = fp::subm(sys(row, i * b + l), e.top.gens[k](l, j), p);
        sys(row, U) = fp::subm(0, X[k](i, j), p);
      }
  // Solvable iff some kernel vector has last coordinate nonzero.
  e.split = false;
  for (auto& v : fp::nullspace(sys))
    if (v[U]) e.split = true;
  e.P = random_invertible(a + b, p, rng);
  e.module = conjugate(M, e.P);
  return e;
}

/// Span of P e_0, ..., P e_{a-1} as an echelon basis.
inline fp::Echelon planted_bottom(const PlantedExtension& e) {
  fp::Echelon E(e.module.dim, e.module.p);
  for (int j = 0; j < e.bottom.dim; ++j) E.insert(e.P.column(j));
  return E;
}

inline bool same_space(const fp::Echelon& A, const fp::Echelon& B) {
  return A.dim() == B.dim() && A.rows() == B.rows();
}

}  // namespace testsupport
