#pragma once
/// Irreducible representations: extension from generators to all elements,
/// validation, characters, diagonal preconditioning, fake degrees and
/// phi_{d,b} labels.

#include <map>
#include <string>
#include <vector>

#include "cheralg/refgroup/coinvariants.hpp"

namespace cheralg {

struct Irrep {
  std::string name;                // as given in the data file
  std::string label;               // computed phi_{d,b}
  int dim = 0;
  std::vector<Matrix<NF>> gens;    // generator images
  std::vector<Matrix<NF>> mats;    // one per group element
  std::vector<NF> chi;             // character, one value per element
  std::vector<long> fake_degree;   // coefficient list in t
};

/// Extends generator images to all elements (following BFS words) and
/// checks that the result is a homomorphism.
inline std::vector<Matrix<NF>> extend_representation(const ReflectionGroup& G, const std::vector<Matrix<NF>>& gens) {
  if (static_cast<int>(gens.size()) != G.num_generators()) throw GroupError("wrong number of generator images");
  int d = gens[0].rows();
  std::vector<Matrix<NF>> mats(G.order());
  mats[0] = Matrix<NF>::identity(d);
  for (int g = 1; g < G.order(); ++g) {
    Matrix<NF> m = Matrix<NF>::identity(d);
    for (int k : G.word(g)) m = m * gens[k];
    mats[g] = std::move(m);
  }
  for (int g = 0; g < G.order(); ++g)
    for (int k = 0; k < G.num_generators(); ++k)
      if (gens[k] * mats[g] != mats[G.mul(G.generator_element(k), g)])
        throw GroupError("generator images do not define a representation");
  return mats;
}

/// <chi, psi> = 1/|G| sum_g chi(g) psi(g^-1).
inline NF character_inner(const ReflectionGroup& G, const std::vector<NF>& chi, const std::vector<NF>& psi) {
  NF s(0L);
  for (int g = 0; g < G.order(); ++g) s += chi[g] * psi[G.inv(g)];
  return s / NF(static_cast<long>(G.order()));
}

/// Roots of unity in the field of G, in the order omega^0, omega^1, ...
/// for a generator omega of the root-of-unity group.
inline std::vector<NF> roots_of_unity(const NumberField* K) {
  int m = K->cyclotomic_order();
  if (m <= 2) return {NF(1), NF(-1)};
  NF z = NF::generator(K);
  NF omega = (m % 2 == 1) ? -z : z;
  int M = (m % 2 == 1) ? 2 * m : m;
  std::vector<NF> out;
  NF cur(1);
  for (int k = 0; k < M; ++k) {
    out.push_back(cur);
    cur = cur * omega;
  }
  return out;
}

/// Conjugates a representation so that generator `k` acts diagonally, with
/// eigenvalues grouped in the roots-of-unity order.
inline std::vector<Matrix<NF>> diagonalize_generator(const ReflectionGroup& G, const std::vector<Matrix<NF>>& gens, int k) {
  int d = gens[k].rows();
  std::vector<Vec<NF>> cols;
  for (const NF& ev : roots_of_unity(G.field())) {
    Matrix<NF> shifted = gens[k] - Matrix<NF>::identity(d).scaled(ev);
    for (auto& v : shifted.nullspace()) cols.push_back(v);
  }
  if (static_cast<int>(cols.size()) != d) throw GroupError("generator is not diagonalizable over the field");
  Matrix<NF> P = Matrix<NF>::from_columns(d, cols);
  Matrix<NF> Pi = *P.inverse_matrix();
  std::vector<Matrix<NF>> out;
  for (auto& g : gens) out.push_back(Pi * g * P);
  return out;
}

inline std::string phi_label(int d, int b) { return "phi_{" + std::to_string(d) + "," + std::to_string(b) + "}"; }

/// Fills chi, fake degrees and labels. Fake degrees are graded
/// multiplicities in `coinv`; labels get primes on (d,b) collisions in
/// list order.
inline void label_irreps(const ReflectionGroup& G, const Coinvariants& coinv, std::vector<Irrep>& irreps) {
  std::vector<std::vector<NF>> graded;
  for (int d = 0; d <= coinv.top_degree(); ++d) graded.push_back(coinv.graded_character(d));
  std::map<std::pair<int, int>, int> seen;
  for (auto& ir : irreps) {
    ir.fake_degree.clear();
    int b = -1;
    for (int d = 0; d <= coinv.top_degree(); ++d) {
      NF m = character_inner(G, graded[d], ir.chi);
      if (!m.is_rational() || m.rational_value().get_den() != 1) throw GroupError("non-integral multiplicity");
      long v = m.rational_value().get_num().get_si();
      ir.fake_degree.push_back(v);
      if (v && b < 0) b = d;
    }
    while (!ir.fake_degree.empty() && ir.fake_degree.back() == 0) ir.fake_degree.pop_back();
    int primes = seen[{ir.dim, b}]++;
    ir.label = phi_label(ir.dim, b) + std::string(primes, '\'');
  }
}

/// Builds and validates an irrep from generator images.
inline Irrep make_irrep(const ReflectionGroup& G, std::string name, std::vector<Matrix<NF>> gens) {
  Irrep ir;
  ir.name = std::move(name);
  ir.dim = gens[0].rows();
  ir.gens = std::move(gens);
  ir.mats = extend_representation(G, ir.gens);
  for (auto& m : ir.mats) ir.chi.push_back(m.trace());
  if (character_inner(G, ir.chi, ir.chi) != NF(1)) throw GroupError("representation " + ir.name + " is not irreducible");
  return ir;
}

}  // namespace cheralg
