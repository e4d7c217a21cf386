#include <gtest/gtest.h>

#include <random>

#include "cheralg/cherednik/poisson.hpp"
#include "cheralg/cherednik/rewrite.hpp"
#include "b2_identity.hpp"
#include "test_support.hpp"

using namespace cheralg;
using testsupport::group;

namespace {

using H = CherednikAlgebra<PolyNF>;

/// Generic parameters: t = T, c(class i) = C_i as polynomial variables.
H generic_algebra(const GroupData& d, bool with_t = true) {
  int r = d.G->num_reflection_classes();
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("C" + std::to_string(i));
  names.push_back("T");
  auto nm = intern_names(names);
  CherednikParameter<PolyNF> p;
  for (int i = 0; i < r; ++i) p.c.push_back(PolyNF::variable(i, nm));
  p.t = with_t ? PolyNF::variable(r, nm) : PolyNF(0L);
  return H(d, p);
}

PBWElement<PolyNF> random_element(const H& h, std::mt19937_64& rng, int terms, int maxdeg) {
  const auto& G = h.group();
  int n = h.rank();
  std::uniform_int_distribution<int> coef(-3, 3), elt(0, G.order() - 1), deg(0, maxdeg), var(0, n - 1);
  PBWElement<PolyNF> e;
  for (int k = 0; k < terms; ++k) {
    Monomial m = 0;
    int dx = deg(rng), dy = deg(rng);
    for (int i = 0; i < dx; ++i) m += mono_var(var(rng));
    for (int i = 0; i < dy; ++i) m += mono_var(n + var(rng));
    int c = coef(rng);
    if (c == 0) c = 1;
    e.add(elt(rng), PolyNF(m, NF(static_cast<long>(c)), h.names()));
  }
  return e;
}

}  // namespace

TEST(Cherednik, ProductMatchesRewritingOnRandomPairs) {
  std::mt19937_64 rng(20240601);
  int checked = 0;
  for (std::string id : {"C2", "S3", "B2"}) {
    H h = generic_algebra(group(id));
    RewriteOracle<PolyNF> oracle(h);
    for (int k = 0; k < 40; ++k) {
      auto a = random_element(h, rng, 2, 2);
      auto b = random_element(h, rng, 2, 2);
      EXPECT_EQ(h.product(a, b), oracle.product(a, b)) << id << " pair " << k;
      ++checked;
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(Cherednik, ProductIsAssociative) {
  std::mt19937_64 rng(7);
  for (std::string id : {"S3", "B2", "G4"}) {
    H h = generic_algebra(group(id));
    for (int k = 0; k < 5; ++k) {
      auto a = random_element(h, rng, 2, 2), b = random_element(h, rng, 2, 1), c = random_element(h, rng, 2, 2);
      EXPECT_EQ(h.product(h.product(a, b), c), h.product(a, h.product(b, c))) << id;
    }
  }
}

TEST(Cherednik, DefiningRelationsC2) {
  H h = generic_algebra(group("C2"));
  auto names = h.parameter().c[0].names();
  // [y, x] = T + C1 s
  auto com = h.commutator(h.y(0), h.x(0));
  PBWElement<PolyNF> expect = h.scalar(PolyNF::variable(1, names)) + h.g(1).scaled(PolyNF::variable(0, names));
  EXPECT_EQ(com, expect);
}

TEST(Cherednik, YTimesXInG4) {
  // y1 x1 = x1 y1 + t + sum_s (y1,x1)_s c(s) s with (y1,x1)_s = 2/3 on six reflections.
  const auto& d = group("G4");
  auto k = generic_ggor(*d.G);
  CherednikParameter<PolyNF> p;
  p.t = PolyNF(1L);
  p.c = ggor_to_c(*d.G, k);
  H h(d, p);
  auto prod = h.product(h.y(0), h.x(0));
  EXPECT_EQ(prod.coeff(0).str(), "x1*y1+1");
  int refl_terms = 0;
  for (auto& [g, poly] : prod.terms) {
    if (g == 0) continue;
    int s = d.G->reflection_of(g);
    ASSERT_GE(s, 0);
    EXPECT_EQ(poly, p.c[d.G->reflections()[s].cls].scaled(NF(Rational(2, 3))));
    ++refl_terms;
  }
  EXPECT_EQ(refl_terms, 6);
}

TEST(Cherednik, EulerElementGradesAndIsCentralAtTZero) {
  for (std::string id : {"S3", "B2", "G4"}) {
    const auto& d = group(id);
    H h1 = generic_algebra(d);
    auto eu = h1.euler_element();
    auto T = h1.parameter().t;
    for (int i = 0; i < d.G->rank(); ++i) {
      EXPECT_EQ(h1.commutator(eu, h1.x(i)), h1.x(i).scaled(T)) << id;
      EXPECT_EQ(h1.commutator(eu, h1.y(i)), h1.y(i).scaled(-T)) << id;
    }
    for (int g = 0; g < d.G->order(); ++g) EXPECT_TRUE(h1.commutator(eu, h1.g(g)).zero());
  }
}

TEST(Cherednik, PoissonBracketAtCZero) {
  // With c = 0 the bracket is the symplectic one: {sigma, Sigma} = 4(x1 y1 + x2 y2).
  const auto& d = group("B2");
  CherednikParameter<PolyNF> p;
  p.c = {PolyNF(0L), PolyNF(0L)};
  H h(d, p);
  auto sq = [&](const PBWElement<PolyNF>& a) { return h.product(a, a); };
  auto sigma = sq(h.y(0)) + sq(h.y(1));
  auto Sigma = sq(h.x(0)) + sq(h.x(1));
  auto br = poisson_bracket(h, sigma, Sigma);
  EXPECT_EQ(h.str(br), "(4*x1*y1+4*x2*y2)");
  EXPECT_THROW(poisson_bracket(h, h.x(0), Sigma), std::invalid_argument);
}

TEST(Cherednik, PoissonBracketLeibnizGenericC) {
  // {sigma, x1^2 + x2^2} = sum_i ({sigma, x_i} x_i + x_i {sigma, x_i}).
  const auto& d = group("B2");
  H h = generic_algebra(d, false);
  auto sq = [&](const PBWElement<PolyNF>& a) { return h.product(a, a); };
  auto sigma = sq(h.y(0)) + sq(h.y(1));
  auto Sigma = sq(h.x(0)) + sq(h.x(1));
  ASSERT_TRUE(h.is_central(sigma));
  ASSERT_TRUE(h.is_central(Sigma));
  auto direct = poisson_bracket(h, sigma, Sigma);
  PBWElement<PolyNF> leibniz;
  for (int i = 0; i < 2; ++i) {
    auto b = eps_commutator(h, sigma, h.x(i));
    leibniz = leibniz + h.product(b, h.x(i)) + h.product(h.x(i), b);
  }
  EXPECT_EQ(direct, leibniz);
  EXPECT_FALSE(direct.zero());
  // Antisymmetry through the swapped evaluation.
  EXPECT_EQ(poisson_bracket(h, Sigma, sigma), -direct);
}

TEST(Cherednik, B2EulerPolynomialVanishes) {
  auto r = testsupport::b2_euler_polynomial(group("B2"));
  EXPECT_TRUE(r.zero()) << r.num_terms() << " nonzero terms";
}
