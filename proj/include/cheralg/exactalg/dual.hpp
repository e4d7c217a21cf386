#pragma once
/// Dual numbers a + b*eps with eps^2 = 0 over a ring R.

#include <string>

#include "cheralg/exactalg/rational.hpp"

namespace cheralg {

template <class R>
class Dual {
 public:
  Dual() = default;
  Dual(long a) : a_(a), b_(0L) {}  // NOLINT(google-explicit-constructor)
  Dual(const R& a) : a_(a), b_(0L) {}  // NOLINT(google-explicit-constructor)
  Dual(R a, R b) : a_(std::move(a)), b_(std::move(b)) {}
  static Dual eps() { return Dual(R(0L), R(1L)); }

  const R& real() const { return a_; }
  const R& eps_part() const { return b_; }

  friend bool is_zero(const Dual& x) { return is_zero(x.a_) && is_zero(x.b_); }
  friend Dual operator+(const Dual& x, const Dual& y) { return Dual(x.a_ + y.a_, x.b_ + y.b_); }
  friend Dual operator-(const Dual& x, const Dual& y) { return Dual(x.a_ - y.a_, x.b_ - y.b_); }
  Dual operator-() const { return Dual(-a_, -b_); }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return Dual(x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend Dual inverse(const Dual& x) {
    R ia = inverse(x.a_);
    return Dual(ia, -(x.b_ * ia * ia));
  }
  friend Dual operator/(const Dual& x, const Dual& y) { return x * inverse(y); }
  Dual& operator+=(const Dual& y) { return *this = *this + y; }
  Dual& operator-=(const Dual& y) { return *this = *this - y; }
  Dual& operator*=(const Dual& y) { return *this = *this * y; }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }
  friend std::string to_string(const Dual& x) {
    if (is_zero(x.b_)) return to_string(x.a_);
    return "(" + to_string(x.a_) + ")+(" + to_string(x.b_) + ")*eps";
  }

 private:
  R a_{0L}, b_{0L};
};

}  // namespace cheralg
