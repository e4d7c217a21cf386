#pragma once
/// Exact scalar tower: Q, Q(zeta_n), K[k_1..k_m], K(T), F_p, and dual
/// numbers over any of them, with the embeddings between levels.

#include "cheralg/exactalg/dual.hpp"
#include "cheralg/exactalg/fp.hpp"
#include "cheralg/exactalg/matrix.hpp"
#include "cheralg/exactalg/mpoly.hpp"
#include "cheralg/exactalg/numfield.hpp"
#include "cheralg/exactalg/parse.hpp"
#include "cheralg/exactalg/ratfunc.hpp"
#include "cheralg/exactalg/rational.hpp"
#include "cheralg/exactalg/upoly.hpp"

namespace cheralg {

/// Rational functions in one indeterminate over a number field; the field
/// in which characteristic-zero lifting takes place.
using RatNF = RatFunc<NF>;
/// Polynomial ring over a number field (generic parameters).
using PolyNF = MultiPoly<NF>;

/// Embedding of number-field elements into a scalar type.
template <class F>
struct Embed;

template <>
struct Embed<NF> {
  static NF from_nf(const NF& a) { return a; }
};
template <>
struct Embed<Rational> {
  static Rational from_nf(const NF& a) {
    if (!a.is_rational()) throw FieldMismatch("irrational value in Q");
    return a.rational_value();
  }
};
template <class F>
struct Embed<RatFunc<F>> {
  static RatFunc<F> from_nf(const NF& a) { return RatFunc<F>(Embed<F>::from_nf(a)); }
};
template <class F>
struct Embed<MultiPoly<F>> {
  static MultiPoly<F> from_nf(const NF& a) { return MultiPoly<F>(Embed<F>::from_nf(a)); }
};
template <class R>
struct Embed<Dual<R>> {
  static Dual<R> from_nf(const NF& a) { return Dual<R>(Embed<R>::from_nf(a)); }
};

template <class F>
F from_nf(const NF& a) {
  return Embed<F>::from_nf(a);
}

/// Reduction data for passing from K(T) to F_p: T -> u, then the number
/// field generator -> root (mod p).
struct Specialization {
  std::uint32_t p = 0;
  std::uint64_t root = 0;
  long u = 0;
};

inline Fp specialize(const NF& a, const Specialization& s) { return a.reduce_mod_prime(s.p, s.root); }

inline Fp specialize(const RatNF& a, const Specialization& s) {
  NF d = a.den()(NF(s.u));
  if (is_zero(d)) throw DivisionError("denominator vanishes at the specialization point");
  Fp dp = specialize(d, s);
  if (is_zero(dp)) throw DivisionError("denominator vanishes modulo p");
  return specialize(a.num()(NF(s.u)), s) / dp;
}

/// A scalar that reduces to a unit mod p (numerator and denominator).
inline bool p_integral(const NF& a, std::uint32_t p) {
  Integer d = a.denominator();
  return d % p != 0;
}

}  // namespace cheralg
