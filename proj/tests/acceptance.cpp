// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "b2_identity.hpp"
#include "cheralg/cherednik/rewrite.hpp"
#include "cheralg/lift.hpp"
#include "cheralg/restricted/restricted.hpp"
#include "planted.hpp"
#include "planted_graded.hpp"
#include "test_support.hpp"

using namespace cheralg;
using testsupport::group;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false, notes.push_back(what);
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(dt <= budget_s, "over budget");
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " (" << dt << " s)";
  for (auto& s : o.notes) line << "\n    " << s;
  std::cout << line.str() << std::endl;
}

const GroupData& g4() { return group("G4"); }

int irrep(const std::string& label) { return g4().find_irrep(label); }

std::vector<int> irrep_dims(const GroupData& d) {
  std::vector<int> v;
  for (auto& ir : d.irreps) v.push_back(ir.dim);
  return v;
}

GordonResult run(const std::string& hyperplane, std::vector<int> family, std::uint64_t seed) {
  GordonOptions opt;
  opt.seed = seed;
  opt.family = std::move(family);
  opt.redraws = 5;
  return gordon(g4(), restrict_to_hyperplane(g4(), hyperplane), opt);
}

GordonResult session_run(std::uint64_t seed) {
  GordonOptions opt;
  opt.seed = seed;
  opt.family = {irrep("phi_{1,4}"), irrep("phi_{1,8}"), irrep("phi_{2,5}")};
  opt.gset = {"y1", "y2", "g2"};
  opt.policy.exclude = {2, 3, 5};
  return gordon(g4(), restrict_to_hyperplane(g4(), "k1_1-k1_2"), opt);
}

std::vector<int> d_row(std::initializer_list<int> r) { return r; }

bool has_1_plus_2t(const GordonRecord& r) {
  for (auto& s : r.pseries)
    if (s && *s == "1+2*t") return true;
  return false;
}

}  // namespace

int main() {
  criterion(1, "B2 Euler polynomial vanishes", 60, [](Outcome& o) {
    auto r = testsupport::b2_euler_polynomial(group("B2"));
    o.require(r.zero(), std::to_string(r.num_terms()) + " nonzero terms");
  });

  criterion(2, "G4 GGOR to c map", 1, [](Outcome& o) {
    const auto& G = *g4().G;
    auto k = generic_ggor(G);
    auto c = ggor_to_c(G, k);
    NF z = NF::generator(g4().field());
    o.require(c.size() == 2, "two reflection classes");
    o.require(c[0] == k[0] * PolyNF(NF(1) - z) + k[1] * PolyNF(z * NF(2) + NF(1)), "c(1) = " + to_string(c[0]));
    o.require(c[1] == k[0] * PolyNF(z + NF(2)) + k[1] * PolyNF(z * NF(-2) - NF(1)), "c(2) = " + to_string(c[1]));
  });

  criterion(3, "G4 Euler families at k1 = k2", 5, [](Outcome& o) {
    auto line = restrict_to_hyperplane(g4(), "k1_1-k1_2");
    auto fam = euler_families(g4(), line.param.c);
    RatNF k = RatNF::variable(line.free_variable);
    std::set<std::pair<std::vector<int>, std::string>> got, want;
    for (auto& [f, v] : fam) got.emplace(f, to_string(v));
    want.emplace(std::vector<int>{irrep("phi_{1,0}")}, to_string(RatNF(8) * k));
    want.emplace(std::vector<int>{irrep("phi_{1,4}"), irrep("phi_{1,8}"), irrep("phi_{2,5}")}, to_string(RatNF(-4) * k));
    want.emplace(std::vector<int>{irrep("phi_{3,2}")}, to_string(RatNF(0L)));
    want.emplace(std::vector<int>{irrep("phi_{2,3}"), irrep("phi_{2,1}")}, to_string(RatNF(2) * k));
    o.require(got == want, "families differ");
  });

  criterion(4, "G4 Verma dimensions and generator degrees", 60, [](Outcome& o) {
    auto line = restrict_to_hyperplane(g4(), "k1_1-k1_2");
    VermaTables T(g4());
    auto a = verma_module<RatNF>(g4(), T, line.param.c, irrep("phi_{1,4}"));
    auto b = verma_module<RatNF>(g4(), T, line.param.c, irrep("phi_{3,2}"));
    o.require(a.dim == 24, "dim Delta(phi_{1,4}) = " + std::to_string(a.dim));
    o.require(a.gen_degrees == std::vector<int>{-1, -1, 0, 0, 1, 1}, "generator degrees");
    o.require(b.dim == 72, "dim Delta(phi_{3,2}) = " + std::to_string(b.dim));
  });

  std::string rec5, rec6, rec7;

  criterion(5, "G4 family {2,3,4} on k1_1-k1_2", 600, [&](Outcome& o) {
    auto res = session_run(1);
    o.require(res.ok(), "family did not complete within 5 draws");
    if (!res.ok()) return;
    const auto& r = res.record;
    rec5 = record_string(r);
    int a = irrep("phi_{1,4}"), b = irrep("phi_{1,8}"), c = irrep("phi_{2,5}");
    o.require(r.simple_dims[a] == 9 && r.simple_dims[b] == 1 && r.simple_dims[c] == 7, "dims");
    o.require(r.pseries[a] == "1+2*t+3*t^2+2*t^3+t^4" && r.pseries[b] == "1" && r.pseries[c] == "2+3*t+2*t^2",
              "Poincare series");
    const auto& D = res.families.at(0).dec.matrix;
    o.require(D == std::vector<std::vector<int>>{{1, 1, 2}, {1, 1, 2}, {2, 2, 4}}, "decomposition matrix");
    using Row = std::vector<std::string>;
    o.require(*r.gmod[a] == Row{"t^4", "1", "0", "0", "0", "t + t^3", "t^2"}, "graded G-structure of phi_{1,4}");
    o.require(*r.gmod[b] == Row{"0", "0", "1", "0", "0", "0", "0"}, "graded G-structure of phi_{1,8}");
    o.require(*r.gmod[c] == Row{"0", "0", "0", "1", "t^2", "0", "t"}, "graded G-structure of phi_{2,5}");
    o.require(res.families.at(0).attempts <= 5, "draws");
  });

  criterion(6, "G4 full record on k1_1-k1_2", 1800, [&](Outcome& o) {
    auto res = run("k1_1-k1_2", {}, 1);
    o.require(res.ok(), "some family failed");
    const auto& r = res.record;
    rec6 = record_string(r);
    std::vector<std::optional<int>> dims{24, 9, 1, 7, 8, 16, 24};
    o.require(r.simple_dims == dims, "SimpleDims");
    std::vector<std::vector<int>> D{d_row({1, 0, 0, 0, 0, 0, 0}), d_row({0, 1, 1, 2, 0, 0, 0}),
                                    d_row({0, 1, 1, 2, 0, 0, 0}), d_row({0, 2, 2, 4, 0, 0, 0}),
                                    d_row({0, 0, 0, 0, 2, 2, 0}), d_row({0, 0, 0, 0, 2, 2, 0}),
                                    d_row({0, 0, 0, 0, 0, 0, 3})};
    for (int i = 0; i < 7; ++i) o.require(r.decomposition[i] == D[i], "VermaDecomposition row " + std::to_string(i + 1));
    std::set<std::vector<int>> cm(r.cm_families.begin(), r.cm_families.end());
    o.require(cm == std::set<std::vector<int>>{{0}, {1, 2, 3}, {6}, {4, 5}}, "CMFamilies");
    std::vector<int> vd;
    for (int d : irrep_dims(g4())) vd.push_back(24 * d);
    o.require(check_record(r, vd, irrep_dims(g4())).empty(), "record consistency");
  });

  criterion(7, "G4 on k1_1-2k1_2 has a head with Poincare series 1+2t", 1800, [&](Outcome& o) {
    auto res = run("k1_1-2k1_2", {}, 1);
    o.require(res.ok(), "some family failed");
    rec7 = record_string(res.record);
    o.require(has_1_plus_2t(res.record), "no head with series 1+2*t");
  });

  criterion(8, "property suite on C2, S3, B2", 600, [](Outcome& o) {
    std::mt19937_64 rng(8);
    // (a) product against naive rewriting.
    int pairs = 0;
    for (std::string id : {"C2", "S3", "B2"}) {
      const auto& d = group(id);
      int r = d.G->num_reflection_classes(), n = d.G->rank();
      std::vector<std::string> names;
      for (int i = 1; i <= r; ++i) names.push_back("C" + std::to_string(i));
      names.push_back("T");
      auto nm = intern_names(names);
      CherednikParameter<PolyNF> p;
      for (int i = 0; i < r; ++i) p.c.push_back(PolyNF::variable(i, nm));
      p.t = PolyNF::variable(r, nm);
      CherednikAlgebra<PolyNF> H(d, p);
      RewriteOracle<PolyNF> oracle(H);
      std::uniform_int_distribution<int> coef(1, 3), elt(0, d.G->order() - 1), deg(0, 2), var(0, n - 1);
      auto random_element = [&] {
        PBWElement<PolyNF> e;
        for (int k = 0; k < 2; ++k) {
          Monomial m = 0;
          for (int i = deg(rng); i > 0; --i) m += mono_var(var(rng));
          for (int i = deg(rng); i > 0; --i) m += mono_var(n + var(rng));
          e.add(elt(rng), PolyNF(m, NF(static_cast<long>(coef(rng))), H.names()));
        }
        return e;
      };
      for (int k = 0; k < 40; ++k, ++pairs) {
        auto a = random_element(), b = random_element();
        o.require(H.product(a, b) == oracle.product(a, b), "(a) product mismatch on " + id);
      }
    }
    o.require(pairs >= 100, "(a) pair count");
    // (b), (c) Verma relations, coinvariant and restricted dimensions.
    for (std::string id : {"C2", "S3", "B2"}) {
      const auto& d = group(id);
      std::vector<NF> c;
      for (int i = 0; i < d.G->num_reflection_classes(); ++i) c.push_back(NF(Rational(2 * i + 3, 5)));
      VermaTables T(d);
      for (int l = 0; l < d.num_irreps(); ++l) {
        auto M = verma_module(d, T, c, l);
        auto chk = check_module_relations(d, c, M);
        o.require(chk.ok, "(b) " + id + " irrep " + std::to_string(l + 1) + ": " + chk.failed);
      }
      long N = d.G->order();
      o.require(d.coinv_x().dim() == N, "(c) dim K[V]_G for " + id);
      o.require(RestrictedAlgebra<NF>(d, c).dimension() == N * N * N, "(c) restricted dimension for " + id);
    }
    // (d) MeatAxe on planted extensions.
    const fp::u32 primes[] = {7, 11, 13, 101};
    std::uniform_int_distribution<int> dd(1, 6), pp(0, 3), gg(2, 3);
    for (int t = 0; t < 50; ++t) {
      int a = dd(rng), b = dd(rng);
      auto e = testsupport::planted_extension(a, b, gg(rng), primes[pp(rng)], rng, t % 10 == 9);
      auto rad = radical(e.module, rng);
      bool ok = e.split ? rad.dim() == 0 : testsupport::same_space(rad, testsupport::planted_bottom(e));
      int total = 0;
      for (auto& f : chop(e.module, rng)) total += f.multiplicity * f.module.dim;
      o.require(ok && total == a + b, "(d) planted extension " + std::to_string(t));
    }
    // (e) ModFinder and (f) abstract_structure after concretize.
    for (int t = 0; t < 50; ++t) {
      auto P = testsupport::planted_graded(rng);
      auto r = modfinder(P.module, P.structure, {0});
      o.require(P.structure.complexity <= 5 && r.status == ModFinderStatus::Found && r.submodule == P.U,
                "(e) planted submodule " + std::to_string(t) + ": " + to_string(r.status));
      std::vector<Rational> theta;
      for (int q = 0; q < P.structure.complexity; ++q) theta.emplace_back(3 * q + 2, 7);
      o.require(abstract_structure(concretize(P.structure, theta)) == P.structure, "(f) instance " + std::to_string(t));
    }
  });

  criterion(9, "same seed gives byte-identical records", 3600, [&](Outcome& o) {
    auto r5 = session_run(1), r6 = run("k1_1-k1_2", {}, 1), r7 = run("k1_1-2k1_2", {}, 1);
    o.require(!rec5.empty() && record_string(r5.record) == rec5, "criterion 5 record");
    o.require(!rec6.empty() && record_string(r6.record) == rec6, "criterion 6 record");
    o.require(!rec7.empty() && record_string(r7.record) == rec7, "criterion 7 record");
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
