#include <gtest/gtest.h>

#include <algorithm>

#include "cheralg/meataxe/meataxe.hpp"
#include "planted.hpp"

using namespace cheralg;
using namespace testsupport;

namespace {

FpAction s3_permutation(fp::u32 p) {
  FpAction M{3, p, {}};
  fp::Mat a(3, 3, p), b(3, 3, p);
  a(1, 0) = a(0, 1) = a(2, 2) = 1;  // (1 2)
  b(0, 0) = b(2, 1) = b(1, 2) = 1;  // (2 3)
  M.gens = {a, b};
  return M;
}

FpAction s3_one_dim(fp::u32 p, fp::u32 v) {
  FpAction M{1, p, {}};
  fp::Mat a(1, 1, p);
  a(0, 0) = v;
  M.gens = {a, a};
  return M;
}

}  // namespace

TEST(MeatAxe, CharpolyAndFactoring) {
  const fp::u32 p = 7;
  std::mt19937_64 rng(1);
  // Companion matrix of (x-1)(x-2)(x^2+1) = x^4 - 3x^3 + 3x^2 - 3x + 2.
  fp::Poly f{2, 7 - 3, 3, 7 - 3, 1};
  fp::Mat C(4, 4, p);
  for (int i = 1; i < 4; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < 4; ++i) C(i, 3) = fp::subm(0, f[i], p);
  EXPECT_EQ(fp::charpoly(C), f);
  auto fac = fp::irreducible_factors(f, p, rng);
  ASSERT_EQ(fac.size(), 3u);
  EXPECT_EQ(fac[0], (fp::Poly{5, 1}));
  EXPECT_EQ(fac[1], (fp::Poly{6, 1}));
  EXPECT_EQ(fac[2], (fp::Poly{1, 0, 1}));
  // Repeated factors are reported once.
  auto sq = fp::pmul(f, f, p);
  EXPECT_EQ(fp::irreducible_factors(sq, p, rng).size(), 3u);
  // A p-th power.
  fp::Poly xp(p + 1, 0);
  xp[0] = 1;
  xp[p] = 1;  // x^7 + 1 = (x + 1)^7
  auto pf = fp::irreducible_factors(xp, p, rng);
  ASSERT_EQ(pf.size(), 1u);
  EXPECT_EQ(pf[0], (fp::Poly{1, 1}));
}

TEST(MeatAxe, OneDimensionalIsIrreducible) {
  std::mt19937_64 rng(2);
  EXPECT_TRUE(is_irreducible(s3_one_dim(7, 6), rng).irreducible);
}

TEST(MeatAxe, S3PermutationModule) {
  std::mt19937_64 rng(3);
  auto M = s3_permutation(7);
  auto r = is_irreducible(M, rng);
  EXPECT_FALSE(r.irreducible);
  auto f = chop(M, rng);
  std::vector<int> dims;
  for (auto& c : f) {
    dims.push_back(c.module.dim);
    EXPECT_EQ(c.multiplicity, 1);
  }
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{1, 2}));
  // Semisimple since 7 does not divide 6.
  EXPECT_EQ(radical(M, rng).dim(), 0);
  // The trivial factor is the trivial module, not the sign.
  for (auto& c : f)
    if (c.module.dim == 1) {
      EXPECT_TRUE(is_isomorphic(c.module, s3_one_dim(7, 1)));
      EXPECT_FALSE(is_isomorphic(c.module, s3_one_dim(7, 6)));
    }
}

TEST(MeatAxe, HomSpaces) {
  std::mt19937_64 rng(4);
  auto M = s3_permutation(7);
  auto f = chop(M, rng);
  for (auto& c : f) {
    auto E = hom_space(c.module, c.module);
    EXPECT_EQ(E.size(), 1u);  // absolutely simple
    EXPECT_EQ(fp::rank(E[0]), c.module.dim);
  }
  EXPECT_TRUE(hom_space(s3_one_dim(7, 1), s3_one_dim(7, 6)).empty());
  EXPECT_EQ(hom_space(M, M).size(), 2u);  // End(triv + std)
  // Every returned map intertwines.
  for (auto& h : hom_space(M, M))
    for (std::size_t k = 0; k < M.gens.size(); ++k) EXPECT_EQ(h * M.gens[k], M.gens[k] * h);
}

TEST(MeatAxe, ConjugatesAreIsomorphic) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    auto S = random_simple(4, 2, 11, rng);
    auto T = conjugate(S, random_invertible(4, 11, rng));
    EXPECT_TRUE(is_isomorphic(S, T));
    auto U = random_simple(4, 2, 11, rng);
    if (!is_isomorphic(S, U)) EXPECT_TRUE(hom_space(S, U).empty());
  }
  EXPECT_FALSE(is_isomorphic(s3_one_dim(7, 1), random_simple(2, 2, 7, rng)));
}

TEST(MeatAxe, DirectSumOfTwoCopies) {
  std::mt19937_64 rng(6);
  auto S = random_simple(3, 2, 13, rng);
  FpAction D{6, 13, {}};
  for (auto& g : S.gens) {
    fp::Mat m(6, 6, 13);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = m(3 + i, 3 + j) = g(i, j);
    D.gens.push_back(m);
  }
  auto r = is_irreducible(D, rng);
  EXPECT_FALSE(r.irreducible);
  auto f = chop(D, rng);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].multiplicity, 2);
  EXPECT_EQ(radical(D, rng).dim(), 0);
}

TEST(MeatAxe, PlantedExtensionsRecovered) {
  std::mt19937_64 rng(20240607);
  const fp::u32 primes[] = {7, 11, 13, 101};
  std::uniform_int_distribution<int> dd(1, 6), pp(0, 3), gg(2, 3);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    int a = dd(rng), b = dd(rng), gens = gg(rng);
    fp::u32 p = primes[pp(rng)];
    auto e = planted_extension(a, b, gens, p, rng, t % 10 == 9);
    auto rad = radical(e.module, rng);
    if (e.split) {
      EXPECT_EQ(rad.dim(), 0) << "instance " << t;
    } else {
      EXPECT_TRUE(same_space(rad, planted_bottom(e))) << "instance " << t;
    }
    auto f = chop(e.module, rng);
    int total = 0;
    for (auto& c : f) total += c.multiplicity * c.module.dim;
    EXPECT_EQ(total, a + b);
    bool iso = a == b && is_isomorphic(e.top, e.bottom);
    EXPECT_EQ(f.size(), iso ? 1u : 2u);
    for (auto& c : f) EXPECT_TRUE(is_isomorphic(c.module, e.bottom) || is_isomorphic(c.module, e.top));
    // radical(M / rad) = 0.
    auto Q = quotient_action(e.module, rad);
    EXPECT_EQ(radical(Q, rng).dim(), 0);
    ++checked;
  }
  EXPECT_EQ(checked, 50);
}

TEST(MeatAxe, ChopInvariantUnderConjugation) {
  std::mt19937_64 rng(8);
  auto e = planted_extension(2, 3, 2, 11, rng);
  auto M2 = conjugate(e.module, random_invertible(5, 11, rng));
  auto f1 = chop(e.module, rng), f2 = chop(M2, rng);
  ASSERT_EQ(f1.size(), f2.size());
  for (auto& c : f1) {
    bool matched = false;
    for (auto& d : f2)
      if (is_isomorphic(c.module, d.module) && c.multiplicity == d.multiplicity) matched = true;
    EXPECT_TRUE(matched);
  }
}

TEST(MeatAxe, SeededRunsAreReproducible) {
  std::mt19937_64 r1(99), r2(99);
  auto M = s3_permutation(101);
  auto a = is_irreducible(M, r1), b = is_irreducible(M, r2);
  ASSERT_TRUE(a.submodule && b.submodule);
  EXPECT_EQ(a.submodule->rows(), b.submodule->rows());
}
