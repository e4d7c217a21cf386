#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cheralg/lift.hpp"
#include "planted_graded.hpp"
#include "test_support.hpp"

using namespace cheralg;

namespace {

Matrix<Rational> worked_example() {
  Matrix<Rational> M(4, 2);
  M(0, 0) = 1, M(2, 0) = 2, M(3, 0) = 1;
  M(1, 1) = 1, M(2, 1) = 1, M(3, 1) = 4;
  return M;
}

const GroupData& g4() { return testsupport::group("G4"); }

const ParameterLine& g4_line() {
  static ParameterLine L = restrict_to_hyperplane(g4(), "k1_1-k1_2");
  return L;
}

const VermaTables& g4_tables() {
  static VermaTables T(g4());
  return T;
}

GradedModule<RatNF> g4_verma(int lambda) { return verma_module<RatNF>(g4(), g4_tables(), g4_line().param.c, lambda); }

// The recorded specialization of the G4 session: the prime ideal
// (1873, 115 + z) and the parameter point 735.
Specialization session_point() { return Specialization{1873, 1873 - 115, 735}; }

std::vector<int> irrep_dims(const GroupData& d) {
  std::vector<int> v;
  for (auto& ir : d.irreps) v.push_back(ir.dim);
  return v;
}

}  // namespace

TEST(AbstractStructure, WorkedExample) {
  auto A = abstract_structure(worked_example());
  EXPECT_EQ(A.complexity, 3);
  EXPECT_EQ(A.pivots, (std::vector<int>{0, 1}));
  std::vector<std::vector<int>> fine{{0, 0}, {0, 0}, {1, 2}, {2, 3}};
  EXPECT_EQ(A.fine_matrix(), fine);
  std::vector<std::vector<int>> coarse{{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  EXPECT_EQ(A.coarse_matrix(), coarse);
  // e(2) = 1, e(1) = 2, e(4) = 3.
  auto back = concretize(A, std::vector<Rational>{2, 1, 4});
  EXPECT_EQ(back, worked_example());
}

TEST(AbstractStructure, IdentityAndErrors) {
  auto A = abstract_structure(Matrix<Rational>::identity(3));
  EXPECT_EQ(A.complexity, 0);
  EXPECT_EQ(concretize(A, std::vector<Rational>{}), Matrix<Rational>::identity(3));
  Matrix<Rational> notrcef(2, 1);
  notrcef(0, 0) = 2;
  EXPECT_THROW(abstract_structure(notrcef), std::invalid_argument);
  auto W = abstract_structure(worked_example());
  EXPECT_THROW(concretize(W, std::vector<Rational>{2, 2, 4}), std::invalid_argument);
  EXPECT_THROW(concretize(W, std::vector<Rational>{2, 0, 4}), std::invalid_argument);
  EXPECT_THROW(concretize(W, std::vector<Rational>{2, 1}), std::invalid_argument);
}

TEST(AbstractStructure, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto P = testsupport::planted_graded(rng);
    const auto& A = P.structure;
    // Injective value map x -> 5x + 7 composed with the concretization.
    std::vector<Rational> th;
    for (int q = 0; q < A.complexity; ++q) {
      Rational v = 5 * Rational(q + 2, 3) + 7;
      th.push_back(v);
    }
    EXPECT_EQ(abstract_structure(concretize(A, th)), A);
    auto theta = concretize(A, std::vector<Rational>(th));
    EXPECT_EQ(abstract_structure(theta), A);
  }
}

TEST(AbstractStructure, FiniteFieldAndRationalConcretizationsAgree) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    auto P = testsupport::planted_graded(rng);
    const auto& A = P.structure;
    std::vector<Rational> q;
    std::vector<Fp> f;
    for (int i = 0; i < A.complexity; ++i) q.emplace_back(i + 2), f.emplace_back(i + 2, 101);
    Specialization s{101, 0, 0};
    EXPECT_EQ(specialize_matrix(concretize(A, q), s), concretize(A, f));
    EXPECT_EQ(abstract_structure(concretize(A, f)), A);
  }
}

TEST(ModFinder, FullSpaceStructure) {
  std::mt19937_64 rng(3);
  auto P = testsupport::planted_graded(rng);
  auto A = abstract_structure(Matrix<Rational>::identity(P.module.dim));
  auto E = build_esystem(P.module, A);
  EXPECT_EQ(E.num_theta, 0);
  auto r = modfinder(P.module, A);
  ASSERT_EQ(r.status, ModFinderStatus::Found);
  EXPECT_EQ(r.submodule, Matrix<Rational>::identity(P.module.dim));
}

TEST(ModFinder, ToyModuleOneLinearEquation) {
  // Two generators on Q^2 (degrees 0 and 1 in one block): a is diagonal,
  // b maps e1 to 3 e1 + 6 e2 and e2 to 2 e2. The line spanned by
  // e1 + theta e2 is invariant under b iff 6 + 2 theta = 3 theta.
  GradedModule<Rational> M;
  M.dim = 2;
  M.degrees = {0, 0};
  M.gen_degrees = {0, 0};
  M.gen_names = {"a", "b"};
  Matrix<Rational> a(2, 2), b(2, 2);
  a(0, 0) = 1, a(1, 1) = 1;
  b(0, 0) = 3, b(1, 0) = 6, b(1, 1) = 2;
  M.actions = {SparseMatrix<Rational>::from_dense(a), SparseMatrix<Rational>::from_dense(b)};
  Matrix<Rational> U(2, 1);
  U(0, 0) = 1, U(1, 0) = 5;
  auto A = abstract_structure(U);
  ASSERT_EQ(A.complexity, 1);
  auto E = build_esystem(M, A, {1});
  bool linear = false;
  for (auto& eq : E.eqs) linear |= eq.linear_stratum() || !eq.y.empty();
  EXPECT_TRUE(linear);
  auto r = modfinder(M, A);
  ASSERT_EQ(r.status, ModFinderStatus::Found);
  EXPECT_EQ(r.theta, std::vector<Rational>{6});
  EXPECT_EQ(r.submodule(1, 0), Rational(6));
}

TEST(ModFinder, NoSubmoduleWithStructure) {
  // A single Jordan block has only the invariant line spanned by e2; the
  // structure of the line through e1 + theta e2 admits no solution.
  GradedModule<Rational> M;
  M.dim = 2;
  M.degrees = {0, 0};
  M.gen_degrees = {0};
  M.gen_names = {"a"};
  Matrix<Rational> a(2, 2);
  a(0, 0) = 1, a(1, 0) = 1, a(1, 1) = 1;
  M.actions = {SparseMatrix<Rational>::from_dense(a)};
  Matrix<Rational> U(2, 1);
  U(0, 0) = 1, U(1, 0) = 7;
  auto r = modfinder(M, abstract_structure(U));
  EXPECT_EQ(r.status, ModFinderStatus::NoSubmodule);
}

TEST(ModFinder, NonHomogeneousColumnRejected) {
  GradedModule<Rational> M;
  M.dim = 2;
  M.degrees = {0, 1};
  M.gen_degrees = {1};
  M.gen_names = {"a"};
  M.actions = {SparseMatrix<Rational>(2, 2)};
  Matrix<Rational> U(2, 1);
  U(0, 0) = 1, U(1, 0) = 1;
  EXPECT_THROW(build_esystem(M, abstract_structure(U)), ModuleError);
}

TEST(ModFinder, RecoversPlantedSubmodules) {
  std::mt19937_64 rng(2024);
  int found = 0;
  for (int t = 0; t < 50; ++t) {
    auto P = testsupport::planted_graded(rng);
    ASSERT_LE(P.structure.complexity, 5);
    auto r = modfinder(P.module, P.structure, {0});
    ASSERT_EQ(r.status, ModFinderStatus::Found) << "instance " << t << "\n" << P.structure.str();
    EXPECT_EQ(r.submodule, P.U) << "instance " << t;
    found += r.status == ModFinderStatus::Found;
  }
  EXPECT_EQ(found, 50);
}

TEST(Specialize, ParameterFreeModuleKeepsShape) {
  const auto& d = testsupport::group("S3");
  std::vector<NF> c(d.G->num_reflection_classes(), NF(1L));
  auto V = verma_module<NF>(d, c, 1);
  Specialization s{101, 0, 0};
  auto Vb = specialize_module(V, s);
  EXPECT_EQ(Vb.dim, V.dim);
  EXPECT_EQ(Vb.degrees, V.degrees);
  EXPECT_EQ(Vb.gen_degrees, V.gen_degrees);
  EXPECT_TRUE(check_module_relations<Fp>(d, std::vector<Fp>(c.size(), Fp(1, 101)), Vb,
                                         [&](const NF& a) { return specialize(a, s); }));
}

TEST(Specialize, CommutesWithQuotient) {
  std::mt19937_64 rng(8);
  Specialization s{10007, 0, 0};
  for (int t = 0; t < 20; ++t) {
    auto P = testsupport::planted_graded(rng);
    auto a = specialize_module(quotient(P.module, P.U), s);
    auto b = quotient(specialize_module(P.module, s), specialize_matrix(P.U, s));
    ASSERT_EQ(a.dim, b.dim);
    for (int k = 0; k < a.num_gens(); ++k) EXPECT_TRUE(a.actions[k] == b.actions[k]);
  }
}

TEST(Specialize, SessionPointForG4) {
  auto roots = roots_mod_p(g4().field(), 1873);
  EXPECT_NE(std::find(roots.begin(), roots.end(), 1873 - 115), roots.end());
  auto bad = bad_primes(g4());
  EXPECT_EQ(bad.count(1873), 0u);
  auto V = g4_verma(1);
  auto Vb = specialize_module(V, session_point());
  EXPECT_EQ(Vb.dim, 24);
  std::vector<Fp> cb;
  for (auto& x : g4_line().param.c) cb.push_back(specialize(x, session_point()));
  EXPECT_TRUE(check_module_relations<Fp>(g4(), cb, Vb, [](const NF& a) { return specialize(a, session_point()); }));
}

TEST(Specialize, VanishingDenominatorThrows) {
  RatNF T = RatNF::variable("T");
  RatNF f = RatNF(1L) / (T - RatNF(3L));
  EXPECT_THROW(specialize(f, Specialization{7, 0, 3}), DivisionError);
  EXPECT_THROW(specialize(f, Specialization{7, 0, 10}), DivisionError);
  EXPECT_EQ(specialize(f, Specialization{7, 0, 4}), Fp(1, 7));
}

TEST(Heads, SessionPointLiftsFifteenDimensionalRadical) {
  auto V = g4_verma(1);
  std::mt19937_64 rng(1);
  auto h = head_and_radical(V, session_point(), rng);
  ASSERT_TRUE(h.ok) << h.failure;
  EXPECT_EQ(h.radical.cols(), 15);
  EXPECT_EQ(h.head.dim, 9);
  auto gc = graded_character(g4(), h.head);
  EXPECT_EQ(GradedCharacter::compact(gc.poincare(irrep_dims(g4()))), "1+2*t+3*t^2+2*t^3+t^4");
  EXPECT_TRUE(check_module_relations<RatNF>(g4(), g4_line().param.c, h.head));
}

TEST(Heads, SimpleVermaIsItsOwnHead) {
  auto V = g4_verma(0);
  std::mt19937_64 rng(2);
  auto h = head_and_radical(V, session_point(), rng);
  ASSERT_TRUE(h.ok) << h.failure;
  EXPECT_TRUE(h.simple_by_specialization);
  EXPECT_EQ(h.head.dim, 24);
  EXPECT_EQ(h.radical.cols(), 0);
}

TEST(Heads, LargestVermaHeadHasDimension24) {
  auto V = g4_verma(6);
  EXPECT_EQ(V.dim, 72);
  std::mt19937_64 rng(3);
  auto h = head_and_radical(V, session_point(), rng);
  ASSERT_TRUE(h.ok) << h.failure;
  EXPECT_EQ(h.head.dim, 24);
}

TEST(Heads, QuotientByRandomVectorKeepsHead) {
  auto V = g4_verma(1);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    auto v = detail::random_homogeneous(V, rng);
    auto U = graded_spin(V, {v});
    if (U.cols() == 0 || U.cols() == V.dim) continue;
    auto h = head_and_radical(quotient(V, U), session_point(), rng);
    ASSERT_TRUE(h.ok) << h.failure;
    EXPECT_EQ(h.head.dim, 9);
  }
}

TEST(Decompose, G4FamilyOnHyperplane) {
  std::vector<GradedModule<RatNF>> Vs{g4_verma(1), g4_verma(2), g4_verma(3)};
  std::mt19937_64 rng(5);
  HeadOptions opt;
  opt.gset = parse_gset(Vs[0].layout, {"y1", "y2", "g2"});
  auto dec = decompose_family(Vs, session_point(), rng, opt);
  ASSERT_TRUE(dec.ok) << dec.failure;
  std::vector<std::vector<int>> D{{1, 1, 2}, {1, 1, 2}, {2, 2, 4}};
  EXPECT_EQ(dec.matrix, D);
  std::vector<int> dims;
  for (auto& h : dec.heads) dims.push_back(h.head.dim);
  EXPECT_EQ(dims, (std::vector<int>{9, 1, 7}));
  for (int a = 0; a < 3; ++a) {
    int audit = 0;
    for (int b = 0; b < 3; ++b) audit += D[a][b] * dims[b];
    EXPECT_EQ(audit, Vs[a].dim);
  }
}

TEST(Decompose, SingletonSimpleFamily) {
  std::mt19937_64 rng(6);
  auto dec = decompose_family(std::vector<GradedModule<RatNF>>{g4_verma(0)}, session_point(), rng);
  ASSERT_TRUE(dec.ok) << dec.failure;
  EXPECT_EQ(dec.matrix, (std::vector<std::vector<int>>{{1}}));
}

TEST(VermaFamilies, Closure) {
  std::vector<std::vector<int>> diag{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
  EXPECT_EQ(verma_families(diag), (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  std::vector<std::vector<int>> chain{{1, 1, 0}, {0, 1, 0}, {0, 1, 1}};
  EXPECT_EQ(verma_families(chain), (std::vector<std::vector<int>>{{0, 1, 2}}));
}

TEST(Gordon, FullHyperplaneRecord) {
  GordonOptions opt;
  auto res = gordon(g4(), g4_line(), opt);
  ASSERT_TRUE(res.ok());
  const auto& r = res.record;
  std::vector<std::optional<int>> dims{24, 9, 1, 7, 8, 16, 24};
  EXPECT_EQ(r.simple_dims, dims);
  std::vector<std::vector<int>> D{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 2, 0, 0, 0}, {0, 1, 1, 2, 0, 0, 0},
                                  {0, 2, 2, 4, 0, 0, 0}, {0, 0, 0, 0, 2, 2, 0}, {0, 0, 0, 0, 2, 2, 0},
                                  {0, 0, 0, 0, 0, 0, 3}};
  for (int i = 0; i < 7; ++i) EXPECT_EQ(*r.decomposition[i], D[i]);
  std::vector<std::vector<int>> cm{{0}, {1, 2, 3}, {4, 5}, {6}};
  EXPECT_EQ(r.cm_families, cm);
  std::vector<int> vd;
  for (auto& ir : g4().irreps) vd.push_back(24 * ir.dim);
  EXPECT_TRUE(check_record(r, vd, irrep_dims(g4())).empty());
  // Verma families refine Euler families.
  for (auto& f : r.cm_families) {
    bool inside = false;
    for (auto& [e, v] : r.euler_families) inside |= std::includes(e.begin(), e.end(), f.begin(), f.end());
    EXPECT_TRUE(inside);
  }
}

TEST(Gordon, DifferentSeedsAgree) {
  GordonOptions a, b;
  a.seed = 17;
  b.seed = 99;
  a.family = b.family = {4, 5};
  auto ra = gordon(g4(), g4_line(), a), rb = gordon(g4(), g4_line(), b);
  ASSERT_TRUE(ra.ok() && rb.ok());
  EXPECT_TRUE(compare_records(ra.record, rb.record).empty());
}

TEST(Gordon, SameSeedIsByteIdentical) {
  GordonOptions opt;
  opt.seed = 42;
  opt.family = {1, 2, 3};
  auto a = record_string(gordon(g4(), g4_line(), opt).record);
  auto b = record_string(gordon(g4(), g4_line(), opt).record);
  EXPECT_EQ(a, b);
}

TEST(Gordon, HeadsSatisfyRelations) {
  GordonOptions opt;
  opt.family = {4, 5};
  auto res = gordon(g4(), g4_line(), opt);
  ASSERT_TRUE(res.ok());
  for (auto& h : res.families[0].dec.heads) {
    EXPECT_TRUE(check_module_relations<RatNF>(g4(), g4_line().param.c, h.head));
    EXPECT_TRUE(is_irreducible(h.head_fp, *std::make_unique<std::mt19937_64>(1)).irreducible);
  }
}

TEST(Record, RoundTripAndCompare) {
  GordonOptions opt;
  opt.family = {1, 2, 3};
  auto r = gordon(g4(), g4_line(), opt).record;
  std::stringstream ss(record_string(r));
  auto back = read_record(ss);
  EXPECT_EQ(record_string(back), record_string(r));
  EXPECT_TRUE(compare_records(r, r).empty());
  auto perm = r;
  std::reverse(perm.euler_families.begin(), perm.euler_families.end());
  std::reverse(perm.cm_families.begin(), perm.cm_families.end());
  EXPECT_TRUE(compare_records(r, perm).empty());
  auto other = r;
  other.simple_dims[1] = 10;
  EXPECT_EQ(compare_records(r, other).size(), 1u);
}

TEST(Record, ShippedExpectedRecordsAreConsistent) {
  for (auto& name : {"G4_k1_1-k1_2.rec", "G4_k1_1-2k1_2.rec"}) {
    std::ifstream in(std::string(CHERALG_DATA_DIR) + "/expected/" + name);
    ASSERT_TRUE(in) << name;
    auto r = read_record(in);
    std::vector<int> vd;
    for (auto& ir : g4().irreps) vd.push_back(24 * ir.dim);
    EXPECT_TRUE(check_record(r, vd, irrep_dims(g4())).empty()) << name;
  }
}

TEST(Record, FreshRunsMatchShippedRecords) {
  auto load = [](const std::string& name) {
    std::ifstream in(std::string(CHERALG_DATA_DIR) + "/expected/" + name);
    return read_record(in);
  };
  auto full = load("G4_k1_1-k1_2.rec");
  GordonOptions opt;
  auto fresh = gordon(g4(), g4_line(), opt).record;
  EXPECT_TRUE(compare_records(fresh, full).empty());
  opt.family = {1, 2, 3};
  auto part = gordon(g4(), g4_line(), opt).record;
  EXPECT_TRUE(compare_records(part, full).empty());
  auto witness = load("G4_k1_1-2k1_2.rec");
  auto line2 = restrict_to_hyperplane(g4(), "k1_1-2k1_2");
  opt.family = {1, 4, 6};
  auto r2 = gordon(g4(), line2, opt).record;
  EXPECT_TRUE(compare_records(r2, witness).empty());
  EXPECT_FALSE(compare_records(r2, full).empty());
}
