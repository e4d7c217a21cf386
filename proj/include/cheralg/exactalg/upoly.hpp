#pragma once
/// Dense univariate polynomials over a field F, coefficients low to high,
/// always trimmed (no trailing zeros).

#include <string>
#include <utility>
#include <vector>

#include "cheralg/exactalg/rational.hpp"

namespace cheralg {

template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(F c) {
    if (!is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static UPoly monomial(F c, int k) {
    if (is_zero(c)) return {};
    std::vector<F> v(k + 1, F(0));
    v[k] = std::move(c);
    UPoly p;
    p.c_ = std::move(v);
    return p;
  }
  static UPoly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const { return k < static_cast<int>(c_.size()) && k >= 0 ? c_[k] : F(0); }
  const F& lead() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }

  friend bool is_zero(const UPoly& p) { return p.c_.empty(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    const UPoly& big = a.c_.size() >= b.c_.size() ? a : b;
    const UPoly& small = a.c_.size() >= b.c_.size() ? b : a;
    UPoly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.trim();
    return r;
  }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly scaled(const F& s) const {
    if (is_zero(s)) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
  UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
  UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Quotient and remainder; the divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.zero()) throw DivisionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> rem = a.c_;
    std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0));
    F inv_lead = inverse(b.lead());
    int db = b.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
      if (is_zero(rem[k])) continue;
      F f = rem[k] * inv_lead;
      q[k - db] = f;
      for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * b.c_[i];
    }
    rem.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  UPoly monic() const {
    if (zero()) return {};
    if (lead() == F(1)) return *this;
    return scaled(inverse(lead()));
  }

  /// Monic gcd.
  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
  static std::tuple<UPoly, UPoly, UPoly> xgcd(UPoly a, UPoly b) {
    UPoly s0(F(1)), s1, t0, t1(F(1));
    while (!b.zero()) {
      auto [q, r] = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
      UPoly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      UPoly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (a.zero()) return {a, s0, t0};
    F inv = inverse(a.lead());
    return {a.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

  template <class G>
  G eval(const G& x) const {
    G r(0);
    for (int k = degree(); k >= 0; --k) r = r * x + G(c_[k]);
    return r;
  }
  F operator()(const F& x) const {
    F r(0);
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
  }

  UPoly derivative() const {
    std::vector<F> r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * F(static_cast<long>(k)));
    return UPoly(std::move(r));
  }

  std::string str(const std::string& var) const {
    if (zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (is_zero(c_[k])) continue;
      std::string cs = to_string(c_[k]);
      bool paren = cs.find_first_of("+-", 1) != std::string::npos;
      std::string term;
      if (k == 0) {
        term = paren ? "(" + cs + ")" : cs;
      } else {
        if (cs == "1") term = "";
        else if (cs == "-1") term = "-";
        else term = (paren ? "(" + cs + ")" : cs) + "*";
        term += var;
        if (k > 1) term += "^" + std::to_string(k);
      }
      if (!out.empty()) {
        if (term[0] == '-') out += term;
        else out += "+" + term;
      } else {
        out = term;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

}  // namespace cheralg
