#pragma once
/// Finite complex reflection groups given by generator matrices over a
/// cyclotomic field: element closure with words, multiplication table,
/// conjugacy classes, and the reflection library (orbits of hyperplanes,
/// reflections per hyperplane, reflection classes, Cartan pairings).
///
/// Conventions: G acts on V = K^n by matrices on column vectors; y_i is the
/// standard basis of V and x_i the dual basis of V*. On V*, g acts by the
/// inverse transpose, so ^g x_i = sum_j (g^-1)_{ij} x_j and
/// ^g y_i = sum_j g_{ji} y_j.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheralg/exactalg.hpp"

namespace cheralg {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Reflection {
  int element = -1;     // index in the element list
  int orbit = -1;       // hyperplane orbit
  int hyperplane = -1;  // global hyperplane index
  int index = -1;       // position among the reflections of its hyperplane
  int cls = -1;         // reflection class (conjugacy class of reflections)
  NF eigenvalue;        // the non-trivial eigenvalue (= det)
  Vec<NF> root;         // alpha_s: row vector with kernel H_s
  Vec<NF> coroot;       // alpha_s^vee: spans the image of id - s
  Matrix<NF> pairing;   // pairing(i, j) = (y_i, x_j)_s
};

struct Hyperplane {
  int orbit = -1;
  Vec<NF> root;                  // normalized alpha (first nonzero entry 1)
  std::vector<int> reflections;  // indices into reflections()
};

struct HyperplaneOrbit {
  std::vector<int> hyperplanes;
  int e = 1;  // order of the pointwise stabilizer of a hyperplane
};

class ReflectionGroup {
 public:
  ReflectionGroup() = default;
  ReflectionGroup(std::string name, const NumberField* K, std::vector<Matrix<NF>> gens,
                  std::vector<std::string> gen_names = {})
      : name_(std::move(name)), K_(K), gens_(std::move(gens)), gen_names_(std::move(gen_names)) {
    if (gens_.empty()) throw GroupError("group needs at least one generator");
    n_ = gens_[0].rows();
    for (auto& g : gens_)
      if (g.rows() != n_ || g.cols() != n_) throw GroupError("generator shape mismatch");
    if (gen_names_.empty())
      for (std::size_t i = 0; i < gens_.size(); ++i) gen_names_.push_back("g" + std::to_string(i + 1));
    close();
    build_classes();
    build_reflections();
  }

  const std::string& name() const { return name_; }
  const NumberField* field() const { return K_; }
  int rank() const { return n_; }
  int order() const { return static_cast<int>(elts_.size()); }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<Matrix<NF>>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }
  int generator_element(int k) const { return gen_idx_[k]; }

  const Matrix<NF>& element(int g) const { return elts_[g]; }
  const std::vector<int>& word(int g) const { return words_[g]; }
  int mul(int a, int b) const { return table_[a * order() + b]; }
  int inv(int g) const { return inv_[g]; }
  int identity() const { return 0; }
  int index_of(const Matrix<NF>& m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end()) throw GroupError("matrix is not a group element");
    return it->second;
  }

  /// Substitution matrix for the action on V*: row i gives ^g x_i.
  const Matrix<NF>& x_action(int g) const { return x_act_[g]; }
  /// Substitution matrix for the action on V: row i gives ^g y_i.
  const Matrix<NF>& y_action(int g) const { return y_act_[g]; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  const std::vector<Reflection>& reflections() const { return refl_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyp_; }
  const std::vector<HyperplaneOrbit>& orbits() const { return orbits_; }
  /// Reflection classes; c-parameters are indexed by these.
  int num_reflection_classes() const { return static_cast<int>(refl_classes_.size()); }
  const std::vector<std::vector<int>>& reflection_classes() const { return refl_classes_; }
  /// Reflection index of an element, or -1.
  int reflection_of(int g) const { return refl_of_[g]; }

  /// The contragredient group (same abstract group acting on V* with
  /// generator matrices (g^-1)^T).
  ReflectionGroup dual() const {
    std::vector<Matrix<NF>> d;
    for (auto& g : gens_) d.push_back(g.inverse_matrix()->transpose());
    return ReflectionGroup(name_ + "*", K_, d, gen_names_);
  }

 private:
  void close() {
    Matrix<NF> id = Matrix<NF>::identity(n_);
    elts_.push_back(id);
    words_.push_back({});
    lookup_[id] = 0;
    for (std::size_t at = 0; at < elts_.size(); ++at) {
      for (int k = 0; k < static_cast<int>(gens_.size()); ++k) {
        Matrix<NF> h = gens_[k] * elts_[at];
        if (lookup_.count(h)) continue;
        std::vector<int> w{k};
        w.insert(w.end(), words_[at].begin(), words_[at].end());
        lookup_[h] = static_cast<int>(elts_.size());
        elts_.push_back(h);
        words_.push_back(std::move(w));
        if (elts_.size() > 100000) throw GroupError("group closure did not terminate");
      }
    }
    int N = order();
    for (auto& g : gens_) gen_idx_.push_back(lookup_.at(g));
    table_.assign(static_cast<std::size_t>(N) * N, -1);
    // Fill by left multiplication with generators along words.
    for (int b = 0; b < N; ++b) table_[0 * N + b] = b;
    for (int a = 1; a < N; ++a) {
      int k = words_[a][0];
      std::vector<int> rest(words_[a].begin() + 1, words_[a].end());
      int a_rest = find_word(rest);
      for (int b = 0; b < N; ++b) {
        int rb = table_[static_cast<std::size_t>(a_rest) * N + b];
        table_[static_cast<std::size_t>(a) * N + b] = left_gen_[static_cast<std::size_t>(rb) * gens_.size() + k];
      }
    }
    inv_.assign(N, -1);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (mul(a, b) == 0) inv_[a] = b;
    for (int g = 0; g < N; ++g) {
      Matrix<NF> gi = elts_[inv_[g]];
      x_act_.push_back(gi);
      y_act_.push_back(elts_[g].transpose());
    }
  }

  // Element index of the product of a word (every prefix-suffix of a BFS
  // word is itself a BFS word of an earlier element).
  int find_word(const std::vector<int>& w) {
    if (left_gen_.empty()) {
      int N = order();
      left_gen_.assign(static_cast<std::size_t>(N) * gens_.size(), -1);
      for (int b = 0; b < N; ++b)
        for (std::size_t k = 0; k < gens_.size(); ++k)
          left_gen_[static_cast<std::size_t>(b) * gens_.size() + k] = lookup_.at(gens_[k] * elts_[b]);
    }
    int cur = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      cur = left_gen_[static_cast<std::size_t>(cur) * gens_.size() + *it];
    return cur;
  }

  void build_classes() {
    int N = order();
    class_of_.assign(N, -1);
    for (int g = 0; g < N; ++g) {
      if (class_of_[g] >= 0) continue;
      int c = static_cast<int>(classes_.size());
      classes_.emplace_back();
      for (int h = 0; h < N; ++h) {
        int conj = mul(mul(h, g), inv_[h]);
        if (class_of_[conj] < 0) {
          class_of_[conj] = c;
          classes_[c].push_back(conj);
        }
      }
      std::sort(classes_[c].begin(), classes_[c].end());
    }
  }

  static Vec<NF> normalized(Vec<NF> v) {
    for (auto& x : v)
      if (!is_zero(x)) {
        NF inv = inverse(x);
        for (auto& y : v) y *= inv;
        break;
      }
    return v;
  }

  void build_reflections() {
    int N = order();
    Matrix<NF> id = Matrix<NF>::identity(n_);
    refl_of_.assign(N, -1);
    for (int g = 1; g < N; ++g) {
      Matrix<NF> d = id - elts_[g];
      if (d.rank() != 1) continue;
      Reflection r;
      r.element = g;
      // id - s = u w^T; rows are multiples of w, columns multiples of u.
      for (int i = 0; i < n_ && r.root.empty(); ++i) {
        auto row = d.row(i);
        if (std::any_of(row.begin(), row.end(), [](const NF& x) { return !is_zero(x); })) r.root = row;
      }
      for (int j = 0; j < n_ && r.coroot.empty(); ++j) {
        auto col = d.column(j);
        if (std::any_of(col.begin(), col.end(), [](const NF& x) { return !is_zero(x); })) r.coroot = col;
      }
      NF tr = d.trace();  // = 1 - eigenvalue
      if (is_zero(tr)) throw GroupError("non-diagonalizable reflection");
      r.eigenvalue = NF(1) - tr;
      r.pairing = Matrix<NF>(n_, n_);
      NF inv_tr = inverse(tr);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.pairing(i, j) = d(j, i) * inv_tr;
      refl_of_[g] = static_cast<int>(refl_.size());
      refl_.push_back(std::move(r));
    }
    // Hyperplanes in order of first reflection.
    for (std::size_t s = 0; s < refl_.size(); ++s) {
      Vec<NF> a = normalized(refl_[s].root);
      int h = -1;
      for (std::size_t k = 0; k < hyp_.size(); ++k)
        if (hyp_[k].root == a) h = static_cast<int>(k);
      if (h < 0) {
        h = static_cast<int>(hyp_.size());
        hyp_.push_back(Hyperplane{-1, a, {}});
      }
      refl_[s].hyperplane = h;
      refl_[s].index = static_cast<int>(hyp_[h].reflections.size());
      hyp_[h].reflections.push_back(static_cast<int>(s));
    }
    // Orbits: H and g(H) share an orbit; conjugating s by g moves H_s to g(H_s).
    for (std::size_t h = 0; h < hyp_.size(); ++h) {
      if (hyp_[h].orbit >= 0) continue;
      int o = static_cast<int>(orbits_.size());
      orbits_.emplace_back();
      int s0 = refl_[hyp_[h].reflections[0]].element;
      for (int g = 0; g < N; ++g) {
        int c = mul(mul(g, s0), inv_[g]);
        int hh = refl_[refl_of_[c]].hyperplane;
        if (hyp_[hh].orbit < 0) {
          hyp_[hh].orbit = o;
          orbits_[o].hyperplanes.push_back(hh);
        }
      }
      std::sort(orbits_[o].hyperplanes.begin(), orbits_[o].hyperplanes.end());
      orbits_[o].e = static_cast<int>(hyp_[h].reflections.size()) + 1;
    }
    for (auto& r : refl_) r.orbit = hyp_[r.hyperplane].orbit;
    // Reflection classes in order of first appearance.
    std::map<int, int> cls_of_conj;
    for (std::size_t s = 0; s < refl_.size(); ++s) {
      int cc = class_of_[refl_[s].element];
      auto it = cls_of_conj.find(cc);
      if (it == cls_of_conj.end()) {
        it = cls_of_conj.emplace(cc, static_cast<int>(refl_classes_.size())).first;
        refl_classes_.emplace_back();
      }
      refl_[s].cls = it->second;
      refl_classes_[it->second].push_back(static_cast<int>(s));
    }
  }

  std::string name_;
  const NumberField* K_ = nullptr;
  std::vector<Matrix<NF>> gens_;
  std::vector<std::string> gen_names_;
  int n_ = 0;
  std::vector<Matrix<NF>> elts_;
  std::vector<std::vector<int>> words_;
  std::map<Matrix<NF>, int> lookup_;
  std::vector<int> gen_idx_;
  std::vector<int> table_;
  std::vector<int> left_gen_;
  std::vector<int> inv_;
  std::vector<Matrix<NF>> x_act_, y_act_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<Reflection> refl_;
  std::vector<Hyperplane> hyp_;
  std::vector<HyperplaneOrbit> orbits_;
  std::vector<std::vector<int>> refl_classes_;
  std::vector<int> refl_of_;
};

/// Image of a polynomial under the linear substitution v_{off+i} ->
/// sum_j A(i,j) v_{off+j} (other variables untouched).
template <class R>
MultiPoly<R> substitute_linear(const MultiPoly<R>& p, const Matrix<NF>& A, int off) {
  int n = A.rows();
  std::vector<MultiPoly<R>> forms(n);
  for (int i = 0; i < n; ++i) {
    std::vector<typename MultiPoly<R>::Term> t;
    for (int j = 0; j < n; ++j)
      if (!is_zero(A(i, j))) t.emplace_back(mono_var(off + j), from_nf<R>(A(i, j)));
    forms[i] = MultiPoly<R>::from_terms(std::move(t), p.names());
  }
  std::map<std::pair<int, int>, MultiPoly<R>> powers;
  auto power = [&](int i, int e) -> const MultiPoly<R>& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    MultiPoly<R> v = e == 1 ? forms[i] : forms[i] * powers.at({i, e - 1});
    return powers.emplace(key, std::move(v)).first->second;
  };
  MultiPoly<R> out;
  out.set_names(p.names());
  for (auto& [m, c] : p.terms()) {
    Monomial rest = m;
    MultiPoly<R> term(mono_part(m, 0, 0) , c, p.names());
    for (int i = 0; i < n; ++i) {
      int e = mono_exp(m, off + i);
      if (!e) continue;
      rest -= mono_var(off + i, e);
      for (int k = 1; k <= e; ++k) power(i, k);
      term = term * power(i, e);
    }
    out += term.mul_term(rest, R(1L));
  }
  return out;
}

}  // namespace cheralg
