#pragma once
/// Prime field elements. An element with p == 0 is an unbound integer
/// constant; it adopts the modulus of whatever it is combined with.

#include <cstdint>
#include <string>

#include "cheralg/exactalg/rational.hpp"

namespace cheralg {

class Fp {
 public:
  Fp() = default;
  Fp(long x) : v_(x), p_(0) {}  // NOLINT(google-explicit-constructor)
  Fp(long x, std::uint32_t p) : p_(p) {
    long r = x % static_cast<long>(p);
    if (r < 0) r += p;
    v_ = r;
  }

  std::uint32_t prime() const { return p_; }
  /// Residue in [0,p) (requires a bound modulus).
  std::uint64_t value() const { return static_cast<std::uint64_t>(v_); }
  long raw() const { return v_; }

  friend bool is_zero(const Fp& a) { return a.v_ == 0; }

  Fp bound_to(std::uint32_t p) const {
    if (p_ == p) return *this;
    if (p_ != 0) throw FieldMismatch("F_p elements with different primes");
    return Fp(v_, p);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return Fp(a.v_ + b.v_);
    std::uint64_t s = a.bound_to(p).value() + b.bound_to(p).value();
    if (s >= p) s -= p;
    return raw_make(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return Fp(a.v_ - b.v_);
    std::uint64_t x = a.bound_to(p).value(), y = b.bound_to(p).value();
    return raw_make(x >= y ? x - y : x + p - y, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return Fp(a.v_ * b.v_);
    return raw_make(a.bound_to(p).value() * b.bound_to(p).value() % p, p);
  }
  Fp operator-() const {
    if (p_ == 0) return Fp(-v_);
    return raw_make(v_ == 0 ? 0 : p_ - v_, p_);
  }
  friend Fp inverse(const Fp& a) {
    if (a.p_ == 0) {
      if (a.v_ == 1 || a.v_ == -1) return a;
      throw DivisionError("inverse of an unbound F_p constant");
    }
    if (a.v_ == 0) throw DivisionError("division by zero in F_p");
    return a.pow(a.p_ - 2);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) {
      if (b.v_ == 0) throw DivisionError("division by zero in F_p");
      if (a.v_ % b.v_ == 0) return Fp(a.v_ / b.v_);
      throw DivisionError("division of unbound F_p constants");
    }
    return a.bound_to(p) * inverse(b.bound_to(p));
  }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, r = p_ ? Fp(1, p_) : Fp(1);
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t p = common(a, b);
    if (p == 0) return a.v_ == b.v_;
    return a.bound_to(p).v_ == b.bound_to(p).v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::string to_string(const Fp& a) { return std::to_string(a.v_); }

 private:
  static Fp raw_make(std::uint64_t v, std::uint32_t p) {
    Fp r;
    r.v_ = static_cast<long>(v);
    r.p_ = p;
    return r;
  }
  static std::uint32_t common(const Fp& a, const Fp& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_)
      throw FieldMismatch("F_p elements with different primes");
    return a.p_ ? a.p_ : b.p_;
  }

  long v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace cheralg
