#pragma once
/// Buchberger's algorithm with the product and chain criteria, normal
/// forms, and standard monomials of zero-dimensional ideals.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cheralg/exactalg.hpp"

namespace cheralg {

template <class F>
struct GroebnerBasis {
  std::vector<MultiPoly<F>> polys;  // reduced, monic, sorted by leading monomial
  int nvars = 0;
  MonomialOrder order = MonomialOrder::Lex;

  Monomial lm(std::size_t i) const { return polys[i].leading(order).first; }
};

/// Normal form of f modulo a basis (full reduction).
template <class F>
MultiPoly<F> normal_form(const MultiPoly<F>& f, const std::vector<MultiPoly<F>>& g, MonomialOrder ord) {
  std::vector<Monomial> lms;
  std::vector<F> inv_lc;
  for (auto& p : g) {
    auto& t = p.leading(ord);
    lms.push_back(t.first);
    inv_lc.push_back(inverse(t.second));
  }
  MultiPoly<F> p = f, r;
  r.set_names(f.names());
  while (!p.zero()) {
    auto lt = p.leading(ord);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!mono_divides(lms[i], lt.first)) continue;
      p = p - g[i].mul_term(mono_div(lt.first, lms[i]), lt.second * inv_lc[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lt.first, lt.second);
      p.add_term(lt.first, -lt.second);
    }
  }
  return r;
}

template <class F>
MultiPoly<F> normal_form(const MultiPoly<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f, gb.polys, gb.order);
}

namespace detail {

template <class F>
MultiPoly<F> make_monic(const MultiPoly<F>& p, MonomialOrder ord) {
  return p.scaled(inverse(p.leading(ord).second));
}

template <class F>
MultiPoly<F> s_polynomial(const MultiPoly<F>& a, const MultiPoly<F>& b, MonomialOrder ord) {
  auto& ta = a.leading(ord);
  auto& tb = b.leading(ord);
  Monomial l = mono_lcm(ta.first, tb.first);
  return a.mul_term(mono_div(l, ta.first), inverse(ta.second)) - b.mul_term(mono_div(l, tb.first), inverse(tb.second));
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens`.
template <class F>
GroebnerBasis<F> groebner_basis(const std::vector<MultiPoly<F>>& gens, int nvars,
                                MonomialOrder ord = MonomialOrder::Lex) {
  std::vector<MultiPoly<F>> g;
  for (auto& p : gens)
    if (!p.zero()) g.push_back(detail::make_monic(p, ord));
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  auto lm = [&](std::size_t i) { return g[i].leading(ord).first; };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  while (!pending.empty()) {
    // Normal strategy: the pair with the smallest lcm goes first.
    auto best = pending.begin();
    Monomial best_l = mono_lcm(lm(best->first), lm(best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = mono_lcm(lm(it->first), lm(it->second));
      if (mono_greater(best_l, l, ord)) {
        best = it;
        best_l = l;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    Monomial mi = lm(i), mj = lm(j);
    // Product criterion: coprime leading monomials.
    if (mono_mul(mi, mj) == best_l) continue;
    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (mono_divides(lm(k), best_l) && !is_pending(i, k) && !is_pending(j, k)) skip = true;
    }
    if (skip) continue;
    MultiPoly<F> s = normal_form(detail::s_polynomial(g[i], g[j], ord), g, ord);
    if (s.zero()) continue;
    g.push_back(detail::make_monic(s, ord));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.emplace(k, g.size() - 1);
  }
  // Minimalize and interreduce.
  std::vector<MultiPoly<F>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      if (mono_divides(lm(k), lm(i)) && (lm(k) != lm(i) || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly<F>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    MultiPoly<F> tail = minimal[i];
    auto lt = tail.leading(ord);
    tail.add_term(lt.first, -lt.second);
    MultiPoly<F> r = normal_form(tail, others, ord);
    r.add_term(lt.first, lt.second);
    reduced.push_back(detail::make_monic(r, ord));
  }
  std::sort(reduced.begin(), reduced.end(), [ord](const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return mono_greater(a.leading(ord).first, b.leading(ord).first, ord);
  });
  GroebnerBasis<F> gb;
  gb.polys = std::move(reduced);
  gb.nvars = nvars;
  gb.order = ord;
  return gb;
}

/// Monomials not divisible by any leading monomial, sorted by total degree
/// and, within a degree, decreasing in the monomial order. Throws when the
/// ideal is not zero-dimensional.
template <class F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& gb) {
  int n = gb.nvars;
  std::vector<int> bound(n, -1);
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    Monomial m = gb.lm(i);
    int nz = 0, var = -1;
    for (int v = 0; v < n; ++v)
      if (mono_exp(m, v)) {
        ++nz;
        var = v;
      }
    if (nz == 1) {
      int e = mono_exp(m, var);
      if (bound[var] < 0 || e < bound[var]) bound[var] = e;
    }
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] < 0) throw std::invalid_argument("ideal is not zero-dimensional");
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  for (;;) {
    Monomial m = mono_from(e);
    bool standard = true;
    for (std::size_t i = 0; i < gb.polys.size() && standard; ++i)
      if (mono_divides(gb.lm(i), m)) standard = false;
    if (standard) out.push_back(m);
    int v = n - 1;
    while (v >= 0) {
      if (++e[v] < bound[v]) break;
      e[v] = 0;
      --v;
    }
    if (v < 0) break;
  }
  MonomialOrder ord = gb.order;
  std::sort(out.begin(), out.end(), [ord](Monomial a, Monomial b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    return mono_greater(a, b, ord);
  });
  return out;
}

}  // namespace cheralg
