#include <gtest/gtest.h>

#include <random>

#include "cheralg/restricted/restricted.hpp"
#include "test_support.hpp"

using namespace cheralg;
using testsupport::group;

namespace {

std::vector<NF> sample_c(const GroupData& d) {
  std::vector<NF> c;
  for (int i = 0; i < d.G->num_reflection_classes(); ++i) c.push_back(NF(Rational(2 * i + 3, 5)));
  return c;
}

PBWElement<NF> random_element(const RestrictedAlgebra<NF>& A, std::mt19937_64& rng) {
  int n = A.data().G->rank();
  std::uniform_int_distribution<int> coef(-3, 3), elt(0, A.data().G->order() - 1), deg(0, 2), var(0, n - 1);
  PBWElement<NF> e;
  for (int k = 0; k < 3; ++k) {
    Monomial m = 0;
    for (int i = deg(rng); i > 0; --i) m += mono_var(var(rng));
    for (int i = deg(rng); i > 0; --i) m += mono_var(n + var(rng));
    int c = coef(rng);
    e.add(elt(rng), MultiPoly<NF>(m, NF(static_cast<long>(c ? c : 1)), A.algebra().names()));
  }
  return e;
}

}  // namespace

TEST(Restricted, DimensionIsOrderCubed) {
  for (std::string id : {"C2", "S3", "B2", "G4"}) {
    const auto& d = group(id);
    RestrictedAlgebra<NF> A(d, sample_c(d));
    long N = d.G->order();
    EXPECT_EQ(d.coinv_x().dim(), N) << id;
    EXPECT_EQ(d.coinv_y().dim(), N) << id;
    EXPECT_EQ(A.dimension(), N * N * N) << id;
  }
}

TEST(Restricted, HilbertIdealActsAsZero) {
  const auto& d = group("B2");
  RestrictedAlgebra<NF> A(d, sample_c(d));
  auto sq = [&](const PBWElement<NF>& a) { return A.algebra().product(a, a); };
  auto Sigma = sq(A.x(0)) + sq(A.x(1));
  auto sigma = sq(A.y(0)) + sq(A.y(1));
  EXPECT_TRUE(A.reduce(Sigma).zero());
  EXPECT_TRUE(A.product(A.g(3), sigma).zero());
  EXPECT_TRUE(A.product(A.y(1), A.product(Sigma, A.x(0))).zero());
}

TEST(Restricted, RelationSurvivesQuotient) {
  for (std::string id : {"S3", "B2", "G4"}) {
    const auto& d = group(id);
    auto c = sample_c(d);
    RestrictedAlgebra<NF> A(d, c);
    int n = d.G->rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto lhs = A.product(A.y(i), A.x(j)) - A.product(A.x(j), A.y(i));
        PBWElement<NF> rhs;
        for (auto& s : d.G->reflections())
          rhs.add(s.element, MultiPoly<NF>(0, c[s.cls] * s.pairing(i, j), A.algebra().names()));
        EXPECT_EQ(lhs, rhs) << id;
      }
  }
}

TEST(Restricted, ProductMatchesReducedUnrestrictedProduct) {
  const auto& d = group("B2");
  RestrictedAlgebra<NF> A(d, sample_c(d));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    auto a = A.reduce(random_element(A, rng)), b = A.reduce(random_element(A, rng));
    auto p = A.product(a, b);
    EXPECT_TRUE(A.is_reduced(p));
    EXPECT_EQ(p, A.reduce(A.algebra().product(a, b)));
  }
}

TEST(Restricted, Associativity) {
  const auto& d = group("S3");
  RestrictedAlgebra<NF> A(d, sample_c(d));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    auto a = random_element(A, rng), b = random_element(A, rng), c = random_element(A, rng);
    EXPECT_EQ(A.product(A.product(a, b), c), A.product(a, A.product(b, c)));
  }
}

TEST(Restricted, BadPrimes) {
  auto g4 = bad_primes(group("G4"));
  EXPECT_TRUE(g4.count(3));
  for (long p : g4) EXPECT_LT(p, 100);
  EXPECT_FALSE(g4.count(1873));
  auto c2 = bad_primes(group("C2"));
  for (long p : c2) EXPECT_EQ(p, 2);
  // Outside the set every cached structure constant reduces.
  const auto& d = group("G4");
  Specialization s{1873, 1758, 0};
  for (auto& p : d.coinv_x().groebner().polys)
    for (auto& [m, c] : p.terms()) EXPECT_NO_THROW(specialize(c, s));
}

TEST(Restricted, PotentialIntegrality) {
  const auto& d = group("C2");
  EXPECT_TRUE(is_potentially_integral(d, {NF(0L)}, 2));
  EXPECT_TRUE(is_potentially_integral(d, {NF(1L)}, 2));
  EXPECT_FALSE(is_potentially_integral(d, {NF(Rational(1, 2))}, 2));
  EXPECT_TRUE(is_potentially_integral(d, {NF(Rational(1, 2))}, 3));
  const auto& g4 = group("G4");
  // Pairings on G4 carry a 3 in the denominator.
  EXPECT_FALSE(is_potentially_integral(g4, {NF(1L), NF(1L)}, 3));
  EXPECT_TRUE(is_potentially_integral(g4, {NF(3L), NF(3L)}, 3));
}
