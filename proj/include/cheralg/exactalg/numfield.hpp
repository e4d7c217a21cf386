#pragma once
/// Number fields Q[z]/(f) with f monic irreducible over Q. Only cyclotomic
/// fields Q(zeta_n) are created by the group data, but any monic f works.
///
/// Field objects are interned and never destroyed, so elements can carry a
/// plain pointer. A null pointer marks a rational constant, which is valid
/// in every number field.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cheralg/exactalg/fp.hpp"
#include "cheralg/exactalg/rational.hpp"
#include "cheralg/exactalg/upoly.hpp"

namespace cheralg {

class NumberField {
 public:
  /// Interned Q(zeta_n); n = 1 or 2 gives Q itself.
  static const NumberField* cyclotomic(int n, const std::string& gen = "");
  /// Interned field with the given monic defining polynomial.
  static const NumberField* make(const UPoly<Rational>& f, const std::string& gen, int cyclotomic_order);

  int degree() const { return modulus_.degree(); }
  const UPoly<Rational>& modulus() const { return modulus_; }
  const std::string& generator_name() const { return gen_; }
  /// n for Q(zeta_n), 0 if the field was not built as cyclotomic.
  int cyclotomic_order() const { return order_; }
  bool is_rational() const { return degree() == 1; }

  std::string describe() const {
    if (is_rational()) return "Q";
    return "Q(" + gen_ + ")";
  }

 private:
  NumberField(UPoly<Rational> f, std::string gen, int order)
      : modulus_(std::move(f)), gen_(std::move(gen)), order_(order) {}
  UPoly<Rational> modulus_;
  std::string gen_;
  int order_;
};

/// n-th cyclotomic polynomial over Q.
inline UPoly<Rational> cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for all proper divisors d of n.
  UPoly<Rational> p = UPoly<Rational>::monomial(Rational(1), n) - UPoly<Rational>(Rational(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = UPoly<Rational>::divmod(p, cyclotomic_polynomial(d)).first;
  return p;
}

inline const NumberField* NumberField::make(const UPoly<Rational>& f, const std::string& gen, int order) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<NumberField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  for (auto& k : registry)
    if (k->modulus_ == f && k->gen_ == gen) return k.get();
  registry.emplace_back(new NumberField(f, gen, order));
  return registry.back().get();
}

inline const NumberField* NumberField::cyclotomic(int n, const std::string& gen) {
  if (n <= 2) return make(UPoly<Rational>(std::vector<Rational>{Rational(-1), Rational(1)}), "", 1);
  return make(cyclotomic_polynomial(n), gen.empty() ? "z" + std::to_string(n) : gen, n);
}

/// Element of a number field, stored as a trimmed coefficient vector in
/// the power basis 1, z, z^2, ...
class NF {
 public:
  NF() = default;
  NF(long a) {  // NOLINT(google-explicit-constructor)
    if (a != 0) c_.emplace_back(a);
  }
  NF(const Rational& a) {  // NOLINT(google-explicit-constructor)
    if (!cheralg::is_zero(a)) {
      c_.push_back(a);
      c_.back().canonicalize();
    }
  }
  NF(const NumberField* K, std::vector<Rational> c) : K_(K), c_(std::move(c)) { normalize(); }

  static NF generator(const NumberField* K) {
    if (K->is_rational()) return NF(K, {-K->modulus().coeff(0)});
    return NF(K, {Rational(0), Rational(1)});
  }

  const NumberField* field() const { return K_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }

  friend bool is_zero(const NF& a) { return a.c_.empty(); }

  friend NF operator+(const NF& a, const NF& b) {
    const NumberField* K = common(a, b);
    const NF& big = a.c_.size() >= b.c_.size() ? a : b;
    const NF& small = a.c_.size() >= b.c_.size() ? b : a;
    NF r = big;
    r.K_ = K;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.trim();
    return r;
  }
  NF operator-() const {
    NF r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend NF operator-(const NF& a, const NF& b) { return a + (-b); }
  friend NF operator*(const NF& a, const NF& b) {
    const NumberField* K = common(a, b);
    if (a.c_.empty() || b.c_.empty()) return NF();
    NF r;
    r.K_ = K;
    if (a.c_.size() == 1 || b.c_.size() == 1) {
      const NF& s = a.c_.size() == 1 ? a : b;
      const NF& o = a.c_.size() == 1 ? b : a;
      r.c_ = o.c_;
      for (auto& x : r.c_) x *= s.c_[0];
      return r;
    }
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    r.c_ = std::move(prod);
    r.reduce();
    return r;
  }
  friend NF inverse(const NF& a) {
    if (a.c_.empty()) throw DivisionError("division by zero in number field");
    if (a.c_.size() == 1) return NF(a.K_, {1 / a.c_[0]});
    auto [g, s, t] = UPoly<Rational>::xgcd(UPoly<Rational>(a.c_), a.K_->modulus());
    if (g.degree() != 0) throw DivisionError("non-invertible element (reducible modulus)");
    return NF(a.K_, s.coeffs());
  }
  friend NF operator/(const NF& a, const NF& b) { return a * inverse(b); }
  NF& operator+=(const NF& b) { return *this = *this + b; }
  NF& operator-=(const NF& b) { return *this = *this - b; }
  NF& operator*=(const NF& b) { return *this = *this * b; }
  NF& operator/=(const NF& b) { return *this = *this / b; }

  NF pow(long e) const {
    if (e < 0) return inverse(*this).pow(-e);
    NF base = *this, r(1);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const NF& a, const NF& b) {
    if (a.c_.size() > 1 && b.c_.size() > 1 && a.K_ != b.K_) throw FieldMismatch("different number fields");
    return a.c_ == b.c_;
  }
  friend bool operator!=(const NF& a, const NF& b) { return !(a == b); }
  friend bool operator<(const NF& a, const NF& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  /// Canonical text, e.g. "2*z3+1", "-1/3*z3+2/3".
  friend std::string to_string(const NF& a) {
    if (a.c_.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(a.c_.size()) - 1; k >= 0; --k) {
      if (cheralg::is_zero(a.c_[k])) continue;
      std::string cs = a.c_[k].get_str();
      std::string term;
      if (k == 0) {
        term = cs;
      } else {
        const std::string& g = a.K_->generator_name();
        if (cs == "1") term = g;
        else if (cs == "-1") term = "-" + g;
        else term = cs + "*" + g;
        if (k > 1) term += "^" + std::to_string(k);
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

  /// Least common multiple of the coefficient denominators.
  Integer denominator() const {
    Integer d = 1;
    for (auto& x : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
  }

  /// Image in F_p sending the generator to `root` (a root of f mod p).
  Fp reduce_mod_prime(std::uint32_t p, std::uint64_t root) const {
    std::uint64_t acc = 0, pw = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      acc = (acc + rational_mod(c_[i], p) * pw) % p;
      pw = pw * root % p;
    }
    return Fp(static_cast<long>(acc), p);
  }

 private:
  static const NumberField* common(const NF& a, const NF& b) {
    if (a.K_ && b.K_ && a.K_ != b.K_) {
      if (a.c_.size() > 1 && b.c_.size() > 1) throw FieldMismatch("different number fields");
    }
    return a.K_ ? a.K_ : b.K_;
  }
  void trim() {
    while (!c_.empty() && cheralg::is_zero(c_.back())) c_.pop_back();
  }
  void reduce() {
    if (K_ == nullptr) {
      trim();
      if (c_.size() > 1) throw FieldMismatch("irrational element without a field");
      return;
    }
    const auto& f = K_->modulus().coeffs();
    int d = static_cast<int>(f.size()) - 1;
    for (int k = static_cast<int>(c_.size()) - 1; k >= d; --k) {
      if (cheralg::is_zero(c_[k])) continue;
      Rational lead = c_[k];
      for (int i = 0; i < d; ++i)
        if (!cheralg::is_zero(f[i])) c_[k - d + i] -= lead * f[i];
      c_[k] = 0;
    }
    trim();
  }
  void normalize() {
    for (auto& q : c_) q.canonicalize();
    reduce();
  }

  const NumberField* K_ = nullptr;
  std::vector<Rational> c_;
};

/// All roots of the defining polynomial of K modulo p (empty if none).
inline std::vector<std::uint64_t> roots_mod_p(const NumberField* K, std::uint32_t p) {
  std::vector<std::uint64_t> out;
  const auto& f = K->modulus().coeffs();
  for (std::uint64_t r = 0; r < p; ++r) {
    std::uint64_t acc = 0;
    bool ok = true;
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) {
      std::uint64_t c;
      try {
        c = rational_mod(f[k], p);
      } catch (const DivisionError&) {
        ok = false;
        break;
      }
      acc = (acc * r + c) % p;
    }
    if (ok && acc == 0) out.push_back(r);
  }
  return out;
}

}  // namespace cheralg
