#pragma once
/// The restricted rational Cherednik algebra: H_{0,c} modulo the ideal
/// generated by the invariants without constant term on both sides. Its PBW
/// basis is xbar^lambda ybar^sigma g with lambda, sigma running over the
/// coinvariant monomial bases.

#include <set>
#include <stdexcept>

#include "cheralg/cherednik/algebra.hpp"

namespace cheralg {

template <class R>
class RestrictedAlgebra {
 public:
  using Poly = MultiPoly<R>;
  using Element = PBWElement<R>;

  RestrictedAlgebra(const GroupData& d, std::vector<R> c) : d_(&d), H_(d, CherednikParameter<R>{R(0L), std::move(c)}) {
    int n = d.G->rank();
    // The Hilbert ideals live in disjoint variable blocks, so the union of
    // the two reduced bases is a Groebner basis of their sum.
    gb_.nvars = 2 * n;
    gb_.order = MonomialOrder::Lex;
    auto lift = [&](const MultiPoly<NF>& p, int shift) {
      std::vector<typename Poly::Term> t;
      for (auto& [m, c] : p.terms()) {
        Monomial mm = 0;
        for (int v = 0; v < n; ++v) mm += mono_var(v + shift, mono_exp(m, v));
        t.emplace_back(mm, from_nf<R>(c));
      }
      return Poly::from_terms(std::move(t), H_.names());
    };
    for (auto& p : d.coinv_x().groebner().polys) gb_.polys.push_back(lift(p, 0));
    for (auto& p : d.coinv_y().groebner().polys) gb_.polys.push_back(lift(p, n));
  }

  const CherednikAlgebra<R>& algebra() const { return H_; }
  const GroupData& data() const { return *d_; }

  long dimension() const {
    return static_cast<long>(d_->coinv_x().dim()) * d_->G->order() * d_->coinv_y().dim();
  }

  Element reduce(const Element& a) const {
    Element r;
    for (auto& [g, p] : a.terms) r.add(g, normal_form(p, gb_));
    return r;
  }

  Element product(const Element& a, const Element& b) const { return reduce(H_.product(a, b)); }

  Element x(int i) const { return H_.x(i); }
  Element y(int i) const { return H_.y(i); }
  Element g(int e) const { return H_.g(e); }

  /// True when every polynomial is supported on Lambda x Sigma monomials.
  bool is_reduced(const Element& a) const {
    int n = d_->G->rank();
    for (auto& [g, p] : a.terms)
      for (auto& [m, c] : p.terms()) {
        Monomial ym = 0;
        for (int v = 0; v < n; ++v) ym += mono_var(v, mono_exp(m, n + v));
        if (d_->coinv_x().index(mono_part(m, 0, n)) < 0 || d_->coinv_y().index(ym) < 0) return false;
      }
    return true;
  }

 private:
  const GroupData* d_;
  CherednikAlgebra<R> H_;
  GroebnerBasis<R> gb_;
};

namespace detail {

inline void add_prime_factors(Integer n, std::set<long>& out) {
  if (n < 0) n = -n;
  for (long p = 2; n > 1; ++p) {
    if (Integer(p) * p > n) {
      out.insert(n.get_si());
      break;
    }
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  }
}

inline void add_denominators(const NF& a, std::set<long>& out) { add_prime_factors(a.denominator(), out); }

inline void add_denominators(const MultiPoly<NF>& p, std::set<long>& out) {
  for (auto& [m, c] : p.terms()) add_denominators(c, out);
}

inline void add_denominators(const Matrix<NF>& m, std::set<long>& out) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) add_denominators(m(i, j), out);
}

}  // namespace detail

/// Primes dividing some denominator of the group's structure data: the
/// field's conductor, group element matrices on both sides, irreducible
/// representations, reflection pairings and Euler weights, both Hilbert
/// ideal bases, the coinvariant G-actions and the parameter-free
/// commutators [y_i, x^mu] for mu in the coinvariant basis.
inline std::set<long> bad_primes(const GroupData& d) {
  std::set<long> out;
  const auto& G = *d.G;
  if (G.field()->cyclotomic_order() > 2) detail::add_prime_factors(Integer(G.field()->cyclotomic_order()), out);
  for (int g = 0; g < G.order(); ++g) {
    detail::add_denominators(G.element(g), out);
    detail::add_denominators(G.x_action(g), out);
  }
  for (auto& ir : d.irreps)
    for (auto& m : ir.mats) detail::add_denominators(m, out);
  for (auto& s : G.reflections()) {
    for (int i = 0; i < G.rank(); ++i)
      for (int j = 0; j < G.rank(); ++j) detail::add_denominators(s.pairing(i, j), out);
    detail::add_denominators(s.eigenvalue / (s.eigenvalue - NF(1L)), out);
  }
  for (const Coinvariants* C : {&d.coinv_x(), &d.coinv_y()}) {
    for (auto& p : C->groebner().polys) detail::add_denominators(p, out);
    for (int k = 0; k < G.num_generators(); ++k) detail::add_denominators(C->group_matrix(G.generator_element(k)), out);
  }
  CherednikParameter<NF> one{NF(0L), std::vector<NF>(G.num_reflection_classes(), NF(1L))};
  CherednikAlgebra<NF> H(d, one);
  for (int i = 0; i < G.rank(); ++i)
    for (Monomial mu : d.coinv_x().basis())
      for (auto& [s, p] : H.commutator_y_xmono(i, mu).spart) detail::add_denominators(d.coinv_x().normal_form(p.with_names(d.coinv_x().names())), out);
  return out;
}

/// c(s)(y_j, x_i)_s is p-integral for every reflection s and all i, j.
inline bool is_potentially_integral(const GroupData& d, const std::vector<NF>& c, std::uint32_t p) {
  for (auto& s : d.G->reflections())
    for (int i = 0; i < d.G->rank(); ++i)
      for (int j = 0; j < d.G->rank(); ++j)
        if (!p_integral(c[s.cls] * s.pairing(i, j), p)) return false;
  return true;
}

}  // namespace cheralg
