#pragma once
/// Univariate rational functions num/den over a field F with den monic and
/// gcd(num, den) = 1. The indeterminate's name is an interned string.

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cheralg/exactalg/upoly.hpp"

namespace cheralg {

/// Interned variable name; equal names share one pointer.
inline const std::string* intern_name(const std::string& s) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<std::string>> names;
  std::lock_guard<std::mutex> lock(mu);
  auto it = names.find(s);
  if (it != names.end()) return it->second.get();
  auto p = std::make_unique<std::string>(s);
  const std::string* raw = p.get();
  names.emplace(s, std::move(p));
  return raw;
}

template <class F>
class RatFunc {
 public:
  using Poly = UPoly<F>;

  RatFunc() : den_(F(1)) {}
  RatFunc(long a) : num_(F(a)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const F& a) : num_(a), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly n, Poly d, const std::string* var) : num_(std::move(n)), den_(std::move(d)), var_(var) {
    normalize();
  }

  /// The indeterminate itself.
  static RatFunc variable(const std::string& name) {
    return RatFunc(Poly::x(), Poly(F(1)), intern_name(name));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::string* var() const { return var_; }
  std::string var_name() const { return var_ ? *var_ : std::string("T"); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  F constant_value() const { return num_.coeff(0); }

  friend bool is_zero(const RatFunc& a) { return a.num_.zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    const std::string* v = common(a, b);
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ + b.num_, a.den_, v);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_, v);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, v);
  }
  RatFunc operator-() const { return raw(-num_, den_, var_); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    const std::string* v = common(a, b);
    if (a.num_.zero() || b.num_.zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, a.den_, v);
    if (a.is_constant()) return raw(b.num_.scaled(a.num_.coeff(0)), b.den_, v);
    if (b.is_constant()) return raw(a.num_.scaled(b.num_.coeff(0)), a.den_, v);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_, v);
  }
  friend RatFunc inverse(const RatFunc& a) {
    if (a.num_.zero()) throw DivisionError("division by zero rational function");
    return RatFunc(a.den_, a.num_, a.var_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.zero()) throw DivisionError("division by zero rational function");
    if (b.is_constant()) {
      const std::string* v = common(a, b);
      return raw(a.num_.scaled(inverse(b.num_.coeff(0))), a.den_, v);
    }
    return a * inverse(b);
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Value at x = u; throws if the denominator vanishes there.
  F eval(const F& u) const {
    F d = den_(u);
    if (is_zero(d)) throw DivisionError("denominator vanishes at evaluation point");
    return num_(u) / d;
  }

  friend std::string to_string(const RatFunc& a) {
    std::string v = a.var_name();
    if (a.den_.is_one()) return a.num_.str(v);
    std::string n = a.num_.str(v), d = a.den_.str(v);
    bool np = !a.num_.is_constant() && a.num_.coeffs().size() > 1;
    return (np ? "(" + n + ")" : n) + "/(" + d + ")";
  }

 private:
  static RatFunc raw(Poly n, Poly d, const std::string* v) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.var_ = v;
    if (r.num_.zero()) r.den_ = Poly(F(1));
    return r;
  }
  static const std::string* common(const RatFunc& a, const RatFunc& b) {
    bool ca = a.is_constant(), cb = b.is_constant();
    if (!ca && !cb && a.var_ != b.var_) throw FieldMismatch("rational functions in different indeterminates");
    if (!ca) return a.var_;
    if (!cb) return b.var_;
    return a.var_ ? a.var_ : b.var_;
  }
  void normalize() {
    if (den_.zero()) throw DivisionError("zero denominator");
    if (num_.zero()) {
      den_ = Poly(F(1));
      return;
    }
    if (!den_.is_constant()) {
      Poly g = Poly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
      }
    }
    F l = den_.lead();
    if (!(l == F(1))) {
      F il = inverse(l);
      num_ = num_.scaled(il);
      den_ = den_.scaled(il);
    }
  }

  Poly num_, den_;
  const std::string* var_ = nullptr;
};

}  // namespace cheralg
