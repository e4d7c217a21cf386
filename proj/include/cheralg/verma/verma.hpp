#pragma once
/// Verma modules Delta_c(lambda) = K[V]_G (x) lambda of the restricted
/// rational Cherednik algebra, built from parameter-free tables: x_i-
/// multiplication and G-action on the coinvariants and, for y_i, the
/// X-tables of [y_i, x^mu] split by reflection.

#include <functional>
#include <map>
#include <memory>

#include "cheralg/cherednik/algebra.hpp"
#include "cheralg/verma/module.hpp"

namespace cheralg {

/// Parameter-free data over the coinvariant basis Lambda of K[V]_G.
struct VermaTables {
  int rank = 0;
  int size = 0;                                     // |Lambda|
  std::vector<SparseMatrix<NF>> xmul;               // x_i on Lambda
  std::vector<SparseMatrix<NF>> gact;               // group generators on Lambda
  /// ytab[i]: (reflection index, X^{(i,s)}) with column mu holding the
  /// coordinates of the s-part of [y_i, x^mu] at c(s) = 1.
  std::vector<std::vector<std::pair<int, SparseMatrix<NF>>>> ytab;

  explicit VermaTables(const GroupData& d) {
    const auto& G = *d.G;
    const auto& C = d.coinv_x();
    rank = G.rank();
    size = C.dim();
    auto to_sparse = [&](auto&& column_of) {
      SparseMatrix<NF> m(size, size);
      for (int mu = 0; mu < size; ++mu) {
        Vec<NF> v = column_of(mu);
        for (int e = 0; e < size; ++e) m.add(e, mu, v[e]);
      }
      return m;
    };
    for (int i = 0; i < rank; ++i)
      xmul.push_back(to_sparse([&](int mu) { return C.coordinates(MultiPoly<NF>(C.basis()[mu] + mono_var(i), NF(1L), C.names())); }));
    for (int k = 0; k < G.num_generators(); ++k) gact.push_back(SparseMatrix<NF>::from_dense(C.group_matrix(G.generator_element(k))));
    CherednikParameter<NF> one{NF(0L), std::vector<NF>(G.num_reflection_classes(), NF(1L))};
    CherednikAlgebra<NF> H(d, one);
    std::map<int, int> refl_index;
    for (std::size_t s = 0; s < G.reflections().size(); ++s) refl_index[G.reflections()[s].element] = static_cast<int>(s);
    ytab.resize(rank);
    for (int i = 0; i < rank; ++i) {
      std::map<int, SparseMatrix<NF>> per;
      for (int mu = 0; mu < size; ++mu)
        for (auto& [sel, poly] : H.commutator_y_xmono(i, C.basis()[mu]).spart) {
          auto it = per.find(sel);
          if (it == per.end()) it = per.emplace(sel, SparseMatrix<NF>(size, size)).first;
          Vec<NF> v = C.coordinates(poly.with_names(C.names()));
          for (int e = 0; e < size; ++e) it->second.add(e, mu, v[e]);
        }
      for (auto& [sel, m] : per) ytab[i].emplace_back(refl_index.at(sel), std::move(m));
    }
  }
};

/// Delta_c(lambda) over R (any ring containing the field of G); c holds one
/// value per reflection class. Basis vector mu*dim(lambda)+k is xbar^mu (x) w_k.
template <class R>
GradedModule<R> verma_module(const GroupData& d, const VermaTables& T, const std::vector<R>& c, int lambda) {
  const auto& G = *d.G;
  if (lambda < 0 || lambda >= d.num_irreps()) throw std::out_of_range("irrep index out of range");
  if (static_cast<int>(c.size()) != G.num_reflection_classes()) throw std::invalid_argument("c needs one value per reflection class");
  const Irrep& ir = d.irreps[lambda];
  int w = ir.dim, L = T.size, N = L * w;
  GradedModule<R> M;
  M.dim = N;
  for (int mu = 0; mu < L; ++mu)
    for (int k = 0; k < w; ++k) M.degrees.push_back(d.coinv_x().degree_of(mu));
  M.layout = RRCALayout{G.rank(), G.num_generators()};
  M.gen_degrees = M.layout.degrees();
  M.gen_names = M.layout.names();
  M.actions.assign(M.layout.size(), SparseMatrix<R>(N, N));
  auto rho = [&](int g, int t, int k) { return from_nf<R>(ir.mats[g](t, k)); };
  for (int i = 0; i < G.rank(); ++i) {
    auto& X = M.actions[M.layout.x(i)];
    for (int mu = 0; mu < L; ++mu)
      for (auto& [e, a] : T.xmul[i].column(mu))
        for (int k = 0; k < w; ++k) X.add(e * w + k, mu * w + k, from_nf<R>(a));
    auto& Y = M.actions[M.layout.y(i)];
    for (auto& [s, tab] : T.ytab[i]) {
      const auto& refl = G.reflections()[s];
      const R& cs = c[refl.cls];
      if (is_zero(cs)) continue;
      for (int mu = 0; mu < L; ++mu)
        for (auto& [e, a] : tab.column(mu))
          for (int k = 0; k < w; ++k)
            for (int t = 0; t < w; ++t) {
              const NF& r = ir.mats[refl.element](t, k);
              if (!is_zero(r)) Y.add(e * w + t, mu * w + k, cs * from_nf<R>(a * r));
            }
    }
  }
  for (int j = 0; j < G.num_generators(); ++j) {
    auto& A = M.actions[M.layout.g(j)];
    int ge = G.generator_element(j);
    for (int mu = 0; mu < L; ++mu)
      for (auto& [e, a] : T.gact[j].column(mu))
        for (int k = 0; k < w; ++k)
          for (int t = 0; t < w; ++t)
            if (!is_zero(ir.mats[ge](t, k))) A.add(e * w + t, mu * w + k, from_nf<R>(a) * rho(ge, t, k));
  }
  return M;
}

template <class R>
GradedModule<R> verma_module(const GroupData& d, const std::vector<R>& c, int lambda) {
  VermaTables T(d);
  return verma_module(d, T, c, lambda);
}

/// Matrices of all group elements on M, built along the BFS words from the
/// g-generator matrices.
template <class F>
std::vector<Matrix<F>> group_action_matrices(const ReflectionGroup& G, const GradedModule<F>& M) {
  std::vector<Matrix<F>> mats(G.order());
  mats[0] = Matrix<F>::identity(M.dim);
  for (int e = 1; e < G.order(); ++e) {
    int k = G.word(e).front();
    int parent = G.mul(G.inv(G.generator_element(k)), e);
    mats[e] = M.actions[M.layout.g(k)].to_dense() * mats[parent];
  }
  return mats;
}

struct RelationCheck {
  bool ok = true;
  std::string failed;  // first failing relation
  explicit operator bool() const { return ok; }
};

/// Evaluate a polynomial in n commuting matrices.
template <class F>
Matrix<F> evaluate_in_matrices(const MultiPoly<NF>& p, const std::vector<Matrix<F>>& A,
                               const std::function<F(const NF&)>& emb) {
  int N = A.empty() ? 0 : A[0].rows();
  Matrix<F> out(N, N);
  for (auto& [m, c] : p.terms()) {
    Matrix<F> t = Matrix<F>::identity(N).scaled(emb(c));
    for (std::size_t v = 0; v < A.size(); ++v)
      for (int e = 0; e < mono_exp(m, static_cast<int>(v)); ++e) t = t * A[v];
    out = out + t;
  }
  return out;
}

/// Checks the defining relations of the restricted rational Cherednik
/// algebra at t = 0 on M: G-relations, commutation among x's and y's,
/// g x g^-1 = ^g x and g y g^-1 = ^g y, [y_i, x_j] = sum_s c(s)(y_i,x_j)_s s,
/// and vanishing of both Hilbert ideals. `emb` maps field elements of G
/// into the scalars of M.
template <class F>
RelationCheck check_module_relations(const GroupData& d, const std::vector<F>& c, const GradedModule<F>& M,
                                     std::function<F(const NF&)> emb) {
  const auto& G = *d.G;
  const auto& L = M.layout;
  RelationCheck res;
  auto fail = [&](std::string why) {
    if (res.ok) res.ok = false, res.failed = std::move(why);
    return res;
  };
  if (L.rank != G.rank() || L.num_group_gens != G.num_generators() || M.num_gens() != L.size())
    return fail("generator layout");
  if (!M.grading_compatible()) return fail("grading");
  int n = G.rank(), N = M.dim;
  std::vector<Matrix<F>> X(n), Y(n);
  for (int i = 0; i < n; ++i) X[i] = M.actions[L.x(i)].to_dense(), Y[i] = M.actions[L.y(i)].to_dense();
  // Group relations: products along the multiplication table.
  auto g = group_action_matrices(G, M);
  for (int k = 0; k < G.num_generators(); ++k) {
    Matrix<F> gk = M.actions[L.g(k)].to_dense();
    for (int e = 0; e < G.order(); ++e)
      if (!(gk * g[e] == g[G.mul(G.generator_element(k), e)])) return fail("group relation for g" + std::to_string(k + 1));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(X[i] * X[j] == X[j] * X[i])) return fail("x" + std::to_string(i + 1) + " x" + std::to_string(j + 1) + " commute");
      if (!(Y[i] * Y[j] == Y[j] * Y[i])) return fail("y" + std::to_string(i + 1) + " y" + std::to_string(j + 1) + " commute");
    }
  for (int k = 0; k < G.num_generators(); ++k) {
    int ge = G.generator_element(k);
    const Matrix<F>& gm = g[ge];
    const Matrix<F>& gi = g[G.inv(ge)];
    for (int i = 0; i < n; ++i) {
      Matrix<F> xs(N, N), ys(N, N);
      for (int j = 0; j < n; ++j) {
        const NF& a = G.x_action(ge)(i, j);
        const NF& b = G.y_action(ge)(i, j);
        if (!is_zero(a)) xs = xs + X[j].scaled(emb(a));
        if (!is_zero(b)) ys = ys + Y[j].scaled(emb(b));
      }
      if (!(gm * X[i] * gi == xs)) return fail("g" + std::to_string(k + 1) + " x" + std::to_string(i + 1) + " equivariance");
      if (!(gm * Y[i] * gi == ys)) return fail("g" + std::to_string(k + 1) + " y" + std::to_string(i + 1) + " equivariance");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<F> rhs(N, N);
      for (auto& s : G.reflections()) {
        NF pr = s.pairing(i, j);
        if (!is_zero(pr)) rhs = rhs + g[s.element].scaled(emb(pr) * c[s.cls]);
      }
      if (!(Y[i] * X[j] - X[j] * Y[i] == rhs)) return fail("[y" + std::to_string(i + 1) + ", x" + std::to_string(j + 1) + "] relation");
    }
  for (auto& p : d.coinv_x().groebner().polys)
    if (!evaluate_in_matrices(p, X, emb).is_zero_matrix()) return fail("Hilbert ideal of K[V] acts nontrivially");
  for (auto& p : d.coinv_y().groebner().polys)
    if (!evaluate_in_matrices(p, Y, emb).is_zero_matrix()) return fail("Hilbert ideal of K[V*] acts nontrivially");
  return res;
}

template <class F>
RelationCheck check_module_relations(const GroupData& d, const std::vector<F>& c, const GradedModule<F>& M) {
  return check_module_relations<F>(d, c, M, [](const NF& a) { return from_nf<F>(a); });
}

/// Graded G-character: entry lambda maps degree -> multiplicity of lambda
/// in that degree piece.
struct GradedCharacter {
  std::vector<std::map<int, long>> entries;

  /// "t^4", "t + t^3", "0", ...
  static std::string poly_str(const std::map<int, long>& p) {
    std::string s;
    for (auto& [e, m] : p) {
      if (m == 0) continue;
      if (!s.empty()) s += " + ";
      std::string t = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
      if (t.empty()) s += std::to_string(m);
      else s += (m == 1 ? "" : std::to_string(m) + "*") + t;
    }
    return s.empty() ? "0" : s;
  }
  /// Compact form without spaces, e.g. 1+2*t+3*t^2.
  static std::string compact(const std::map<int, long>& p) {
    std::string s = poly_str(p), r;
    for (char ch : s)
      if (ch != ' ') r += ch;
    return r;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + poly_str(entries[i]);
    return s + ")";
  }
  /// Poincare series: sum of entries weighted by dim lambda.
  std::map<int, long> poincare(const std::vector<int>& dims) const {
    std::map<int, long> p;
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (auto& [e, m] : entries[i]) p[e] += m * dims[i];
    return p;
  }
};

/// Multiplicities of each irrep in each degree piece, from traces of the
/// g-action restricted to the piece. `trace_to_nf` maps a trace (a scalar
/// of M that must be a constant) to the field of G.
template <class F>
GradedCharacter graded_character(const GroupData& d, const GradedModule<F>& M,
                                 const std::function<NF(const F&)>& trace_to_nf) {
  const auto& G = *d.G;
  auto g = group_action_matrices(G, M);
  GradedCharacter gc;
  gc.entries.resize(d.num_irreps());
  for (int deg : M.degree_list()) {
    auto b = M.block(deg);
    std::vector<NF> chi(G.order(), NF(0L));
    for (int e = 0; e < G.order(); ++e) {
      F tr(0L);
      for (int i : b) tr += g[e](i, i);
      chi[e] = trace_to_nf(tr);
    }
    for (int l = 0; l < d.num_irreps(); ++l) {
      NF m = character_inner(G, chi, d.irreps[l].chi);
      if (!m.is_rational() || m.rational_value().get_den() != 1 || m.rational_value() < 0)
        throw ModuleError("non-integral character multiplicity in degree " + std::to_string(deg));
      long v = m.rational_value().get_num().get_si();
      if (v) gc.entries[l][deg] = v;
    }
  }
  return gc;
}

/// Embedding of traces for the common scalar towers.
inline NF trace_value(const NF& a) { return a; }
inline NF trace_value(const RatNF& a) {
  if (!a.is_constant()) throw ModuleError("trace depends on the parameter");
  return a.constant_value();
}

template <class F>
GradedCharacter graded_character(const GroupData& d, const GradedModule<F>& M) {
  return graded_character<F>(d, M, [](const F& a) { return trace_value(a); });
}

}  // namespace cheralg
