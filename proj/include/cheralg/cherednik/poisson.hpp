#pragma once
/// Poisson bracket on the centre of H_{0,c}: lift to H_{eps,c} over dual
/// numbers (eps^2 = 0), take the commutator and read off the eps-part.

#include <stdexcept>

#include "cheralg/cherednik/algebra.hpp"

namespace cheralg {

template <class R>
PBWElement<Dual<R>> lift_to_dual(const PBWElement<R>& a) {
  PBWElement<Dual<R>> r;
  for (auto& [g, p] : a.terms) r.add(g, p.template map_coeffs<Dual<R>>([](const R& c) { return Dual<R>(c); }));
  return r;
}

template <class R>
CherednikAlgebra<Dual<R>> eps_deformation(const CherednikAlgebra<R>& H0) {
  CherednikParameter<Dual<R>> p;
  p.t = Dual<R>::eps();
  for (auto& c : H0.parameter().c) p.c.push_back(Dual<R>(c));
  return CherednikAlgebra<Dual<R>>(H0.data(), p);
}

/// eps-part of [a~, b~] in H_{eps,c}. Requires the eps^0 part to vanish,
/// which holds as soon as a is central in H_{0,c}.
template <class R>
PBWElement<R> eps_commutator(const CherednikAlgebra<R>& H0, const PBWElement<R>& a, const PBWElement<R>& b) {
  if (!is_zero(H0.parameter().t)) throw std::invalid_argument("Poisson bracket needs t = 0");
  auto He = eps_deformation(H0);
  auto com = He.commutator(lift_to_dual(a), lift_to_dual(b));
  PBWElement<R> out;
  for (auto& [g, p] : com.terms) {
    std::vector<typename MultiPoly<R>::Term> real, eps;
    for (auto& [m, c] : p.terms()) {
      if (!is_zero(c.real())) real.emplace_back(m, c.real());
      if (!is_zero(c.eps_part())) eps.emplace_back(m, c.eps_part());
    }
    if (!real.empty()) throw std::logic_error("commutator does not vanish at t = 0");
    out.add(g, MultiPoly<R>::from_terms(std::move(eps), H0.names()));
  }
  return out;
}

/// {a, b} for central a, b in H_{0,c}; throws if either is not central.
template <class R>
PBWElement<R> poisson_bracket(const CherednikAlgebra<R>& H0, const PBWElement<R>& a, const PBWElement<R>& b) {
  if (!H0.is_central(a) || !H0.is_central(b)) throw std::invalid_argument("Poisson bracket arguments must be central");
  return eps_commutator(H0, a, b);
}

}  // namespace cheralg
