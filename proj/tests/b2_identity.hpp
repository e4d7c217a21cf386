#pragma once
// Degree-8 polynomial in eu for B2 at the BR parameters c_s = -2A, c_t = -2B.

#include "cheralg/cherednik/algebra.hpp"
#include "cheralg/refgroup/params.hpp"

namespace testsupport {

inline cheralg::PBWElement<cheralg::PolyNF> b2_euler_polynomial(const cheralg::GroupData& b2) {
  using namespace cheralg;
  using E = PBWElement<PolyNF>;
  CherednikParameter<PolyNF> p;
  p.t = PolyNF(0L);
  p.c = param_type_c(b2, *b2.find_param_type("BR"));
  auto nm = p.c[0].names();
  PolyNF A = PolyNF::variable(0, nm), B = PolyNF::variable(1, nm);
  CherednikAlgebra<PolyNF> H(b2, p);
  auto mul = [&](const E& a, const E& b) { return H.product(a, b); };
  auto sq = [&](const E& a) { return mul(a, a); };
  auto k = [](long v) { return PolyNF(v); };
  auto sc = [&](const PolyNF& r) { return H.scalar(r); };
  E eu = H.euler_element();
  E sigma = sq(H.y(0)) + sq(H.y(1)), pi = mul(sq(H.y(0)), sq(H.y(1)));
  E Sigma = sq(H.x(0)) + sq(H.x(1)), Pi = mul(sq(H.x(0)), sq(H.x(1)));
  E sS = mul(sigma, Sigma), s2P = mul(sq(sigma), Pi), S2p = mul(sq(Sigma), pi), pP = mul(pi, Pi);
  PolyNF A2 = A * A, B2 = B * B;
  E eu2 = sq(eu), eu4 = sq(eu2), eu6 = mul(eu2, eu4), eu8 = sq(eu4);
  E c6 = (sS + sc((A2 + B2) * k(4))).scaled(k(-2));
  E c4 = sq(sS) + (s2P + S2p - pP.scaled(k(8))).scaled(k(2)) + sS.scaled((A2 + B2) * k(8)) + sc((A2 - B2) * (A2 - B2) * k(16));
  E c2 = (mul(sS + sc((A2 - B2) * k(4)), s2P + S2p) - mul(sS, pP).scaled(k(8)) + sq(sS).scaled(B2 * k(2))).scaled(k(-2));
  E c0 = sq(s2P - S2p);
  return eu8 + mul(eu6, c6) + mul(eu4, c4) + mul(eu2, c2) + c0;
}

}  // namespace testsupport
