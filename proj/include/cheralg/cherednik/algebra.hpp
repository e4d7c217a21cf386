#pragma once
/// Rational Cherednik algebras H_{t,c}(G) in PBW form. An element is a map
/// group element -> polynomial in x_1..x_n, y_1..y_n, read as
/// sum x^a y^b g (x's left of y's left of the group element).
///
/// Relations: [x,x'] = 0, [y,y'] = 0, g x = (^g x) g, g y = (^g y) g, and
/// [y,x] = t<y,x> + sum_s (y,x)_s c(s) s.

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cheralg/refgroup/params.hpp"

namespace cheralg {

template <class R>
struct PBWElement {
  std::map<int, MultiPoly<R>> terms;  // group element -> polynomial, no zero entries

  bool zero() const { return terms.empty(); }
  friend bool is_zero(const PBWElement& a) { return a.terms.empty(); }

  void add(int g, const MultiPoly<R>& p) {
    if (p.zero()) return;
    auto it = terms.find(g);
    if (it == terms.end()) {
      terms.emplace(g, p);
    } else {
      it->second += p;
      if (it->second.zero()) terms.erase(it);
    }
  }
  friend PBWElement operator+(PBWElement a, const PBWElement& b) {
    for (auto& [g, p] : b.terms) a.add(g, p);
    return a;
  }
  PBWElement operator-() const {
    PBWElement r;
    for (auto& [g, p] : terms) r.terms.emplace(g, -p);
    return r;
  }
  friend PBWElement operator-(const PBWElement& a, const PBWElement& b) { return a + (-b); }
  PBWElement scaled(const R& s) const {
    PBWElement r;
    for (auto& [g, p] : terms) r.add(g, p.scaled(s));
    return r;
  }
  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

  MultiPoly<R> coeff(int g) const {
    auto it = terms.find(g);
    return it == terms.end() ? MultiPoly<R>() : it->second;
  }
  std::size_t num_terms() const {
    std::size_t n = 0;
    for (auto& [g, p] : terms) n += p.size();
    return n;
  }
};

/// Hash-map accumulator for building large polynomials.
template <class R>
class PolyAccumulator {
 public:
  void add(Monomial m, const R& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = acc_.try_emplace(m, c);
    if (!fresh) it->second += c;
  }
  /// Adds k * m * p.
  void add(const MultiPoly<R>& p, Monomial m, const R& k) {
    for (auto& [pm, pc] : p.terms()) add(mono_mul(pm, m), pc * k);
  }
  MultiPoly<R> take(const std::vector<std::string>* names) {
    std::vector<typename MultiPoly<R>::Term> t;
    t.reserve(acc_.size());
    for (auto& [m, c] : acc_)
      if (!is_zero(c)) t.emplace_back(m, std::move(c));
    acc_.clear();
    return MultiPoly<R>::from_terms(std::move(t), names);
  }
  bool empty() const { return acc_.empty(); }

 private:
  std::unordered_map<Monomial, R> acc_;
};

template <class R>
class CherednikAlgebra {
 public:
  using Poly = MultiPoly<R>;
  using Element = PBWElement<R>;

  CherednikAlgebra(const GroupData& d, CherednikParameter<R> param)
      : d_(&d), G_(d.G.get()), n_(d.G->rank()), param_(std::move(param)) {
    if (2 * n_ > kMaxVars) throw GroupError("rank too large for PBW monomial packing");
    if (static_cast<int>(param_.c.size()) != G_->num_reflection_classes())
      throw std::invalid_argument("c needs one value per reflection class");
    std::vector<std::string> names;
    for (int i = 1; i <= n_; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n_; ++i) names.push_back("y" + std::to_string(i));
    names_ = intern_names(names);
    // c(s) * (y_i, x_j)_s, cached per reflection.
    cpair_.resize(G_->reflections().size());
    for (std::size_t s = 0; s < G_->reflections().size(); ++s) {
      const auto& r = G_->reflections()[s];
      cpair_[s].resize(n_ * n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) cpair_[s][i * n_ + j] = from_nf<R>(r.pairing(i, j)) * param_.c[r.cls];
    }
  }

  const GroupData& data() const { return *d_; }
  const ReflectionGroup& group() const { return *G_; }
  int rank() const { return n_; }
  const CherednikParameter<R>& parameter() const { return param_; }
  const std::vector<std::string>* names() const { return names_; }

  Element scalar(const R& r) const {
    Element e;
    e.add(0, Poly(0, r, names_));
    return e;
  }
  Element x(int i) const {
    Element e;
    e.add(0, Poly(mono_var(i), R(1L), names_));
    return e;
  }
  Element y(int i) const {
    Element e;
    e.add(0, Poly(mono_var(n_ + i), R(1L), names_));
    return e;
  }
  Element g(int elem) const {
    Element e;
    e.add(elem, Poly(0, R(1L), names_));
    return e;
  }
  /// p (a polynomial in the 2n variables) times group element `elem`.
  Element element(const Poly& p, int elem = 0) const {
    Element e;
    e.add(elem, p.with_names(names_));
    return e;
  }
  Poly xvar(int i) const { return Poly(mono_var(i), R(1L), names_); }
  Poly yvar(int i) const { return Poly(mono_var(n_ + i), R(1L), names_); }

  /// ^g of a PBW polynomial (x-part by the dual action, y-part by g).
  Poly act(int g, const Poly& p) const {
    if (g == 0) return p;
    PolyAccumulator<R> acc;
    for (auto& [m, c] : p.terms()) acc.add(act_monomial(g, m), 0, c);
    return acc.take(names_);
  }

  Element product(const Element& a, const Element& b) const {
    std::map<int, PolyAccumulator<R>> out;
    for (auto& [ga, pa] : a.terms) {
      // e = sum_h ^ga(b_h) (ga h)
      std::map<int, Poly> e;
      for (auto& [h, ph] : b.terms) {
        int gh = G_->mul(ga, h);
        Poly img = act(ga, ph);
        auto it = e.find(gh);
        if (it == e.end()) e.emplace(gh, std::move(img));
        else it->second += img;
      }
      // Group the terms of a_g by their y-part so each y-power is applied once.
      std::map<Monomial, std::vector<std::pair<Monomial, R>>> by_y;
      for (auto& [m, k] : pa.terms()) by_y[mono_part(m, n_, 2 * n_)].emplace_back(mono_part(m, 0, n_), k);
      for (auto& [ym, xs] : by_y) {
        std::map<int, Poly> E = e;
        for (int i = 0; i < n_; ++i)
          for (int r = 0; r < mono_exp(ym, n_ + i); ++r) E = apply_y(i, E);
        for (auto& [h, ph] : E)
          for (auto& [xm, k] : xs) out[h].add(ph, xm, k);
      }
    }
    Element r;
    for (auto& [h, acc] : out) r.add(h, acc.take(names_));
    return r;
  }

  Element commutator(const Element& a, const Element& b) const { return product(a, b) - product(b, a); }

  Element power(const Element& a, int k) const {
    Element r = scalar(R(1L));
    for (int i = 0; i < k; ++i) r = product(a, r);
    return r;
  }

  /// eu = sum_i x_i y_i + sum_s eps_s/(eps_s - 1) c(s) s.
  Element euler_element() const {
    Element e;
    Poly p;
    for (int i = 0; i < n_; ++i) p += Poly(mono_var(i) + mono_var(n_ + i), R(1L), names_);
    e.add(0, p);
    for (auto& s : G_->reflections()) {
      NF w = s.eigenvalue / (s.eigenvalue - NF(1));
      e.add(s.element, Poly(0, from_nf<R>(w) * param_.c[s.cls], names_));
    }
    return e;
  }

  /// True when a commutes with every generator x_i, y_i, g_k.
  bool is_central(const Element& a) const {
    for (int i = 0; i < n_; ++i) {
      if (!commutator(a, x(i)).zero()) return false;
      if (!commutator(a, y(i)).zero()) return false;
    }
    for (int k = 0; k < G_->num_generators(); ++k)
      if (!commutator(a, g(G_->generator_element(k))).zero()) return false;
    return true;
  }

  std::string str(const Element& a) const {
    if (a.zero()) return "0";
    std::string s;
    for (auto& [g, p] : a.terms) {
      if (!s.empty()) s += " + ";
      s += "(" + p.str(names_) + ")";
      if (g != 0) s += "*g" + std::to_string(g);
    }
    return s;
  }

  /// [y_i, x^mu] split as t-part (a polynomial in x) and one polynomial in
  /// x per reflection, each already multiplied by c(s)(y_i,x_j)_s.
  struct Commutator {
    Poly tpart;
    std::vector<std::pair<int, Poly>> spart;  // (group element of s, poly)
  };
  const Commutator& commutator_y_xmono(int i, Monomial mu) const {
    auto key = std::make_pair(i, mu);
    auto it = comm_cache_.find(key);
    if (it != comm_cache_.end()) return it->second;
    Commutator cm;
    int mi = mono_exp(mu, i);
    if (mi > 0 && !is_zero(param_.t)) cm.tpart = Poly(mu - mono_var(i), param_.t * R(static_cast<long>(mi)), names_);
    for (std::size_t s = 0; s < G_->reflections().size(); ++s) {
      int sel = G_->reflections()[s].element;
      Poly total;
      for (int j = 0; j < n_; ++j) {
        int mj = mono_exp(mu, j);
        if (mj == 0) continue;
        const R& coef = cpair_[s][i * n_ + j];
        if (is_zero(coef)) continue;
        Monomial head = mono_part(mu, 0, j);
        Monomial tail = mono_part(mu, j + 1, n_);
        Poly sx = act_x_var(sel, j);
        Poly mid;
        for (int l = 0; l < mj; ++l) mid += sx.pow(mj - l - 1).mul_term(mono_var(j, l), R(1L));
        Poly term = mid * act_monomial_poly(sel, tail);
        total += term.mul_term(head, coef);
      }
      if (!total.zero()) cm.spart.emplace_back(sel, std::move(total));
    }
    return comm_cache_.emplace(key, std::move(cm)).first->second;
  }

 private:
  Poly act_x_var(int g, int j) const {
    const Matrix<NF>& A = G_->x_action(g);
    std::vector<typename Poly::Term> t;
    for (int k = 0; k < n_; ++k)
      if (!is_zero(A(j, k))) t.emplace_back(mono_var(k), from_nf<R>(A(j, k)));
    return Poly::from_terms(std::move(t), names_);
  }

  const Poly& act_monomial_poly(int g, Monomial m) const { return act_monomial(g, m); }

  /// ^g of a single PBW monomial, cached.
  const Poly& act_monomial(int g, Monomial m) const {
    auto key = std::make_pair(g, m);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
    Poly r;
    if (g == 0) {
      r = Poly(m, R(1L), names_);
    } else {
      Poly base(m, R(1L), names_);
      Poly xs = substitute_linear(Poly(mono_part(m, 0, n_), R(1L), names_), G_->x_action(g), 0);
      Poly ys = substitute_linear(Poly(mono_part(m, n_, 2 * n_), R(1L), names_), G_->y_action(g), n_);
      r = xs * ys;
    }
    return act_cache_.emplace(key, std::move(r)).first->second;
  }

  /// y_i * E for E = sum_h E_h h.
  std::map<int, Poly> apply_y(int i, const std::map<int, Poly>& E) const {
    std::map<int, PolyAccumulator<R>> out;
    Monomial yi = mono_var(n_ + i);
    for (auto& [h, p] : E) {
      for (auto& [m, k] : p.terms()) {
        Monomial mu = mono_part(m, 0, n_);
        Monomial beta = mono_part(m, n_, 2 * n_);
        out[h].add(mono_mul(m, yi), k);
        const Commutator& cm = commutator_y_xmono(i, mu);
        if (!cm.tpart.zero()) out[h].add(cm.tpart, beta, k);
        for (auto& [s, sp] : cm.spart) {
          const Poly& sy = act_monomial(s, beta);
          auto& acc = out[G_->mul(s, h)];
          for (auto& [ym, yc] : sy.terms()) acc.add(sp, ym, yc * k);
        }
      }
    }
    std::map<int, Poly> r;
    for (auto& [h, acc] : out) {
      Poly p = acc.take(names_);
      if (!p.zero()) r.emplace(h, std::move(p));
    }
    return r;
  }

  const GroupData* d_;
  const ReflectionGroup* G_;
  int n_;
  CherednikParameter<R> param_;
  const std::vector<std::string>* names_;
  std::vector<std::vector<R>> cpair_;
  mutable std::map<std::pair<int, Monomial>, Commutator> comm_cache_;
  mutable std::map<std::pair<int, Monomial>, Poly> act_cache_;
};

}  // namespace cheralg
