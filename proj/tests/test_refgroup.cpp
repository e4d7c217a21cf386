#include <gtest/gtest.h>

#include <sstream>

#include "cheralg/refgroup/params.hpp"

using namespace cheralg;

namespace {

const GroupData& group(const std::string& id) {
  static std::map<std::string, GroupData> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, load_group(id)).first;
  return it->second;
}

std::vector<long> poincare(const Coinvariants& c) {
  std::vector<long> p(c.top_degree() + 1, 0);
  for (int i = 0; i < c.dim(); ++i) ++p[c.degree_of(i)];
  return p;
}

NF z3() { return NF::generator(group("G4").field()); }

}  // namespace

TEST(RefGroup, B2Structure) {
  const auto& d = group("B2");
  EXPECT_EQ(d.G->order(), 8);
  EXPECT_EQ(d.G->reflections().size(), 4u);
  ASSERT_EQ(d.G->orbits().size(), 2u);
  EXPECT_EQ(d.G->orbits()[0].hyperplanes.size(), 2u);
  EXPECT_EQ(d.G->orbits()[1].hyperplanes.size(), 2u);
  EXPECT_EQ(d.G->num_reflection_classes(), 2);
  EXPECT_EQ(d.coinv_x().dim(), 8);
  EXPECT_EQ(poincare(d.coinv_x()), (std::vector<long>{1, 2, 2, 2, 1}));
  std::vector<std::string> basis;
  for (auto m : d.coinv_x().basis()) basis.push_back(MultiPoly<NF>(m, NF(1), d.coinv_x().names()).str());
  EXPECT_EQ(basis, (std::vector<std::string>{"1", "x1", "x2", "x1*x2", "x2^2", "x1*x2^2", "x2^3", "x1*x2^3"}));
}

TEST(RefGroup, G4Structure) {
  const auto& d = group("G4");
  const auto& G = *d.G;
  EXPECT_EQ(G.order(), 24);
  EXPECT_EQ(G.num_classes(), 7);
  EXPECT_EQ(G.reflections().size(), 8u);
  ASSERT_EQ(G.orbits().size(), 1u);
  EXPECT_EQ(G.orbits()[0].hyperplanes.size(), 4u);
  EXPECT_EQ(G.orbits()[0].e, 3);
  EXPECT_EQ(G.num_reflection_classes(), 2);
  EXPECT_EQ(d.coinv_x().degrees(), (std::vector<int>{4, 6}));
  EXPECT_EQ(d.coinv_x().dim(), 24);
  EXPECT_FALSE(d.coinv_x().jacobian().zero());
  std::vector<std::string> labels;
  for (auto& ir : d.irreps) labels.push_back(ir.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"phi_{1,0}", "phi_{1,4}", "phi_{1,8}", "phi_{2,5}", "phi_{2,3}",
                                              "phi_{2,1}", "phi_{3,2}"}));
  EXPECT_EQ(d.irreps[6].fake_degree, (std::vector<long>{0, 0, 1, 0, 1, 0, 1}));
}

TEST(RefGroup, ReflectionIdsAreConsistent) {
  for (std::string id : {"C2", "S3", "B2", "G4"}) {
    const auto& G = *group(id).G;
    for (std::size_t s = 0; s < G.reflections().size(); ++s) {
      const auto& r = G.reflections()[s];
      const auto& h = G.hyperplanes()[r.hyperplane];
      EXPECT_EQ(h.reflections[r.index], static_cast<int>(s));
      EXPECT_EQ(h.orbit, r.orbit);
      EXPECT_EQ(G.reflection_of(r.element), static_cast<int>(s));
    }
  }
}

TEST(RefGroup, CartanPairingC2) {
  const auto& G = *group("C2").G;
  ASSERT_EQ(G.reflections().size(), 1u);
  EXPECT_EQ(G.reflections()[0].pairing(0, 0), NF(1));
}

TEST(RefGroup, CartanPairingG4) {
  // (y1, x1)_s is 2/3 on six reflections and 0 on the two fixing x1's axis.
  const auto& G = *group("G4").G;
  int nonzero = 0;
  NF sum(0L);
  for (auto& r : G.reflections()) {
    const NF& v = r.pairing(0, 0);
    if (!is_zero(v)) {
      ++nonzero;
      EXPECT_EQ(v, NF(Rational(2, 3)));
    }
    sum += v;
  }
  EXPECT_EQ(nonzero, 6);
  EXPECT_EQ(sum, NF(4));
}

TEST(RefGroup, PairingIndependentOfRootScaling) {
  const auto& G = *group("G4").G;
  for (auto& r : G.reflections()) {
    Vec<NF> a = r.root, av = r.coroot;
    for (auto& x : a) x = x * NF(5);
    for (auto& x : av) x = x * z3();
    NF denom(0L);
    for (int k = 0; k < G.rank(); ++k) denom += a[k] * av[k];
    for (int i = 0; i < G.rank(); ++i)
      for (int j = 0; j < G.rank(); ++j) EXPECT_EQ(a[i] * av[j] / denom, r.pairing(i, j));
  }
}

TEST(RefGroup, GgorToCOnG4) {
  const auto& d = group("G4");
  auto k = generic_ggor(*d.G);
  auto c = ggor_to_c(*d.G, k);
  NF z = z3();
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], k[0] * PolyNF(NF(1) - z) + k[1] * PolyNF(z * NF(2) + NF(1)));
  EXPECT_EQ(c[1], k[0] * PolyNF(z + NF(2)) + k[1] * PolyNF(z * NF(-2) - NF(1)));
}

TEST(RefGroup, GgorSharpIsAnInvolution) {
  const auto& G = *group("G4").G;
  auto k = generic_ggor(G);
  EXPECT_EQ(ggor_sharp(G, ggor_sharp(G, k)), k);
  EXPECT_EQ(ggor_sharp(G, k)[0], k[1]);
}

TEST(RefGroup, HyperplaneRestrictionG4) {
  const auto& d = group("G4");
  auto line = restrict_to_hyperplane(d, "k1_1-k1_2");
  EXPECT_EQ(line.free_variable, "k1_2");
  RatNF k = RatNF::variable("k1_2");
  NF z = z3();
  EXPECT_EQ(line.param.c[0], RatNF(z + NF(2)) * k);
  EXPECT_EQ(line.param.c[1], RatNF(NF(1) - z) * k);
  EXPECT_THROW(restrict_to_hyperplane(d, "k1_1*k1_2"), std::invalid_argument);
}

TEST(RefGroup, EulerFamiliesG4OnDiagonal) {
  const auto& d = group("G4");
  auto line = restrict_to_hyperplane(d, "k1_1-k1_2");
  auto fam = euler_families(d, line.param.c);
  RatNF k = RatNF::variable("k1_2");
  ASSERT_EQ(fam.size(), 4u);
  EXPECT_EQ(fam[0].first, (std::vector<int>{0}));
  EXPECT_EQ(fam[0].second, RatNF(8) * k);
  EXPECT_EQ(fam[1].first, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(fam[1].second, RatNF(-4) * k);
  EXPECT_EQ(fam[2].first, (std::vector<int>{4, 5}));
  EXPECT_EQ(fam[2].second, RatNF(2) * k);
  EXPECT_EQ(fam[3].first, (std::vector<int>{6}));
  EXPECT_TRUE(is_zero(fam[3].second));
}

TEST(RefGroup, ExplicitParameters) {
  const auto& d = group("B2");
  auto line = explicit_parameters(d, "c1=3,c2=2*T,t=1");
  EXPECT_EQ(line.free_variable, "T");
  EXPECT_EQ(line.param.c[0], RatNF(3));
  EXPECT_EQ(line.param.c[1], RatNF(2) * RatNF::variable("T"));
  EXPECT_EQ(line.param.t, RatNF(1));
  EXPECT_THROW(explicit_parameters(d, "q=1"), std::invalid_argument);
}

TEST(RefGroup, ParamTypeBR) {
  const auto& d = group("B2");
  auto pt = d.find_param_type("BR");
  ASSERT_NE(pt, nullptr);
  auto c = param_type_c(d, *pt);
  EXPECT_EQ(c[0].str(), "-2*C1");
}

TEST(RefGroup, DiagonalPreconditioning) {
  const auto& d = group("S3");
  for (auto& ir : d.irreps) {
    const auto& m = ir.gens[0];
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (i != j) EXPECT_TRUE(is_zero(m(i, j)));
  }
}

TEST(RefGroup, RejectsInvalidData) {
  std::istringstream bad_rep(R"(group X
field 1
dimension 1
generator s
-1
irrep triv 1
1
irrep wrong 1
2
)");
  EXPECT_THROW(GroupData::parse(bad_rep), GroupError);
  std::istringstream incomplete(R"(group X
field 1
dimension 1
generator s
-1
irrep triv 1
1
)");
  EXPECT_THROW(GroupData::parse(incomplete), GroupError);
  std::istringstream mislabeled(R"(group X
field 1
dimension 1
generator s
-1
irrep phi_{1,0} 1
-1
irrep phi_{1,1} 1
1
)");
  EXPECT_THROW(GroupData::parse(mislabeled), GroupError);
  EXPECT_THROW(load_group("NoSuchGroup"), GroupError);
}
