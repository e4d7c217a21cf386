#pragma once
/// Finite field specializations: T -> u in the parameter line, then the
/// number field generator -> a root of its defining polynomial mod p.
/// Modules over K(T) are specialized entrywise.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cheralg/refgroup/params.hpp"
#include "cheralg/restricted/restricted.hpp"
#include "cheralg/verma/module.hpp"

namespace cheralg {

inline Fp specialize(const Rational& a, const Specialization& s) {
  return Fp(static_cast<long>(rational_mod(a, s.p)), s.p);
}

inline Fp specialize(const Fp& a, const Specialization& s) { return a.bound_to(s.p); }

inline std::string describe(const Specialization& s) {
  return "p=" + std::to_string(s.p) + " root=" + std::to_string(s.root) + " u=" + std::to_string(s.u);
}

/// Entrywise specialization; degrees and generator layout are kept.
/// Throws DivisionError when a denominator vanishes at u or mod p.
template <class F>
GradedModule<Fp> specialize_module(const GradedModule<F>& M, const Specialization& s) {
  return M.template map<Fp>([&](const F& x) { return specialize(x, s); });
}

template <class F>
Matrix<Fp> specialize_matrix(const Matrix<F>& A, const Specialization& s) {
  Matrix<Fp> B(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) B(i, j) = specialize(A(i, j), s);
  return B;
}

/// Primes in [lo, hi) over which the group's field splits completely,
/// avoiding the given exclusions.
inline std::vector<std::uint32_t> candidate_primes(const NumberField* K, std::uint32_t lo, std::uint32_t hi,
                                                   const std::set<long>& exclude) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = std::max<std::uint32_t>(lo, 2); p < hi; ++p) {
    if (!is_prime(p) || exclude.count(p)) continue;
    if (!K->is_rational() && static_cast<int>(roots_mod_p(K, p).size()) != K->degree()) continue;
    out.push_back(p);
  }
  return out;
}

struct SpecializationPolicy {
  std::uint32_t prime_lo = 0;  // 0: derived from the module dimension
  std::uint32_t prime_hi = 0;
  long u_height = 64;          // u drawn from [1, u_height]
  std::set<long> exclude;      // extra primes to avoid
};

/// Value of the parameter line at T = u (throws if a denominator vanishes).
inline std::vector<NF> evaluate_line(const std::vector<RatNF>& c, long u) {
  std::vector<NF> out;
  for (auto& x : c) out.push_back(x.eval(NF(u)));
  return out;
}

/// Draws (p, root, u): p from the candidate range outside the bad primes,
/// u with the line's c-values defined, not all zero and potentially
/// integral at p. `dim` sets the default range (dim, 10 dim).
inline Specialization draw_specialization(const GroupData& d, const std::vector<RatNF>& c, int dim,
                                          const std::set<long>& bad, const SpecializationPolicy& pol,
                                          std::mt19937_64& rng) {
  std::uint32_t lo = pol.prime_lo ? pol.prime_lo : static_cast<std::uint32_t>(dim + 1);
  std::uint32_t hi = pol.prime_hi ? pol.prime_hi : static_cast<std::uint32_t>(10 * dim);
  std::set<long> ex = bad;
  ex.insert(pol.exclude.begin(), pol.exclude.end());
  auto primes = candidate_primes(d.field(), lo, hi, ex);
  if (primes.empty())
    throw std::runtime_error("no admissible prime in [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
  bool constant = std::all_of(c.begin(), c.end(), [](const RatNF& x) { return x.is_constant(); });
  for (int tries = 0; tries < 1000; ++tries) {
    Specialization s;
    s.p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
    auto roots = d.field()->is_rational() ? std::vector<std::uint64_t>{0} : roots_mod_p(d.field(), s.p);
    s.root = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
    s.u = constant ? 0 : std::uniform_int_distribution<long>(1, pol.u_height)(rng);
    std::vector<NF> cu;
    try {
      cu = evaluate_line(c, s.u);
    } catch (const DivisionError&) {
      continue;
    }
    if (std::all_of(cu.begin(), cu.end(), [&](const NF& x) { return is_zero(x); }) && !constant) continue;
    if (!is_potentially_integral(d, cu, s.p)) continue;
    return s;
  }
  throw std::runtime_error("no admissible specialization point found");
}

}  // namespace cheralg
