#pragma once
/// Sparse multivariate polynomials in at most 8 variables. A monomial is a
/// packed 64-bit word, one byte per exponent, variable 0 in the top byte,
/// so integer comparison is the lex order x0 > x1 > ... > x7. Terms are
/// stored in decreasing lex order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cheralg/exactalg/rational.hpp"

namespace cheralg {

using Monomial = std::uint64_t;
inline constexpr int kMaxVars = 8;

inline int mono_exp(Monomial m, int i) { return static_cast<int>((m >> (8 * (7 - i))) & 0xffu); }
inline Monomial mono_var(int i, int e = 1) {
  if (e < 0 || e > 255) throw std::overflow_error("exponent out of range");
  return static_cast<Monomial>(e) << (8 * (7 - i));
}
inline Monomial mono_from(const std::vector<int>& e) {
  Monomial m = 0;
  for (std::size_t i = 0; i < e.size(); ++i) m += mono_var(static_cast<int>(i), e[i]);
  return m;
}
inline std::vector<int> mono_exponents(Monomial m, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = mono_exp(m, i);
  return e;
}
inline Monomial mono_mul(Monomial a, Monomial b) {
  Monomial s = a + b;
  if (((s ^ a ^ b) & 0x0101010101010100ULL) || s < a) throw std::overflow_error("exponent overflow");
  return s;
}
inline bool mono_divides(Monomial a, Monomial b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (mono_exp(a, i) > mono_exp(b, i)) return false;
  return true;
}
inline Monomial mono_div(Monomial b, Monomial a) { return b - a; }
inline Monomial mono_lcm(Monomial a, Monomial b) {
  Monomial m = 0;
  for (int i = 0; i < kMaxVars; ++i) m += mono_var(i, std::max(mono_exp(a, i), mono_exp(b, i)));
  return m;
}
inline int mono_degree(Monomial m) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += mono_exp(m, i);
  return d;
}
/// Degree in variables [lo, hi).
inline int mono_degree(Monomial m, int lo, int hi) {
  int d = 0;
  for (int i = lo; i < hi; ++i) d += mono_exp(m, i);
  return d;
}
/// Keep only the exponents of variables [lo, hi).
inline Monomial mono_part(Monomial m, int lo, int hi) {
  Monomial r = 0;
  for (int i = lo; i < hi; ++i) r += mono_var(i, mono_exp(m, i));
  return r;
}

enum class MonomialOrder { Lex, DegRevLex };

/// a > b in the given order.
inline bool mono_greater(Monomial a, Monomial b, MonomialOrder ord) {
  if (ord == MonomialOrder::Lex) return a > b;
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    int ea = mono_exp(a, i), eb = mono_exp(b, i);
    if (ea != eb) return ea < eb;
  }
  return false;
}

/// Interned variable-name lists.
inline const std::vector<std::string>* intern_names(const std::vector<std::string>& v) {
  static std::mutex mu;
  static std::map<std::vector<std::string>, std::unique_ptr<std::vector<std::string>>> reg;
  std::lock_guard<std::mutex> lock(mu);
  auto it = reg.find(v);
  if (it != reg.end()) return it->second.get();
  auto p = std::make_unique<std::vector<std::string>>(v);
  auto* raw = p.get();
  reg.emplace(v, std::move(p));
  return raw;
}

template <class F>
class MultiPoly {
 public:
  using Term = std::pair<Monomial, F>;

  MultiPoly() = default;
  MultiPoly(long a) {  // NOLINT(google-explicit-constructor)
    if (a != 0) t_.emplace_back(0, F(a));
  }
  MultiPoly(const F& a) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(a)) t_.emplace_back(0, a);
  }
  MultiPoly(Monomial m, F c, const std::vector<std::string>* names = nullptr) : names_(names) {
    if (!is_zero(c)) t_.emplace_back(m, std::move(c));
  }
  /// Takes terms in any order; combines duplicates.
  static MultiPoly from_terms(std::vector<Term> terms, const std::vector<std::string>* names = nullptr) {
    MultiPoly p;
    p.names_ = names;
    p.t_ = std::move(terms);
    p.canonicalize();
    return p;
  }
  static MultiPoly variable(int i, const std::vector<std::string>* names = nullptr) {
    return MultiPoly(mono_var(i), F(1), names);
  }

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool zero() const { return t_.empty(); }
  const std::vector<std::string>* names() const { return names_; }
  void set_names(const std::vector<std::string>* n) { names_ = n; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
  F constant_term() const {
    if (!t_.empty() && t_.back().first == 0) return t_.back().second;
    return F(0);
  }
  F coeff(Monomial m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, Monomial x) { return t.first > x; });
    if (it != t_.end() && it->first == m) return it->second;
    return F(0);
  }
  int total_degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, mono_degree(m));
    return d;
  }

  /// Leading term under an order (lex is the storage order).
  const Term& leading(MonomialOrder ord = MonomialOrder::Lex) const {
    if (ord == MonomialOrder::Lex) return t_.front();
    std::size_t best = 0;
    for (std::size_t i = 1; i < t_.size(); ++i)
      if (mono_greater(t_[i].first, t_[best].first, ord)) best = i;
    return t_[best];
  }

  friend bool is_zero(const MultiPoly& a) { return a.t_.empty(); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.empty()) return b.with_names(a.names_);
    if (b.t_.empty()) return a.with_names(b.names_);
    MultiPoly r;
    r.names_ = a.names_ ? a.names_ : b.names_;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
      if (a.t_[i].first > b.t_[j].first) {
        r.t_.push_back(a.t_[i++]);
      } else if (a.t_[i].first < b.t_[j].first) {
        r.t_.push_back(b.t_[j++]);
      } else {
        F c = a.t_[i].second + b.t_[j].second;
        if (!is_zero(c)) r.t_.emplace_back(a.t_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.empty() || b.t_.empty()) return MultiPoly();
    if (a.t_.size() == 1 && a.t_[0].first == 0) return b.scaled(a.t_[0].second).with_names(a.names_);
    if (b.t_.size() == 1 && b.t_[0].first == 0) return a.scaled(b.t_[0].second).with_names(b.names_);
    std::vector<Term> prod;
    prod.reserve(a.t_.size() * b.t_.size());
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) prod.emplace_back(mono_mul(ma, mb), ca * cb);
    return from_terms(std::move(prod), a.names_ ? a.names_ : b.names_);
  }
  MultiPoly scaled(const F& s) const {
    if (is_zero(s)) return MultiPoly();
    MultiPoly r;
    r.names_ = names_;
    r.t_.reserve(t_.size());
    for (auto& [m, c] : t_) {
      F x = c * s;
      if (!is_zero(x)) r.t_.emplace_back(m, std::move(x));
    }
    return r;
  }
  /// Multiply by c * m.
  MultiPoly mul_term(Monomial m, const F& c) const {
    MultiPoly r;
    r.names_ = names_;
    if (is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (auto& [mm, cc] : t_) {
      F x = cc * c;
      if (!is_zero(x)) r.t_.emplace_back(mono_mul(mm, m), std::move(x));
    }
    return r;
  }
  friend MultiPoly inverse(const MultiPoly& a) {
    if (!a.is_constant() || a.t_.empty()) throw DivisionError("division in a polynomial ring by a non-unit");
    return MultiPoly(inverse(a.t_[0].second)).with_names(a.names_);
  }
  /// Division is only defined by nonzero constants (units of the ring).
  friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) { return a * inverse(b); }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  MultiPoly& operator/=(const MultiPoly& b) { return *this = *this / b; }

  /// In-place add of c*m (keeps order).
  void add_term(Monomial m, const F& c) {
    if (is_zero(c)) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, Monomial x) { return t.first > x; });
    if (it != t_.end() && it->first == m) {
      it->second += c;
      if (is_zero(it->second)) t_.erase(it);
    } else {
      t_.insert(it, Term(m, c));
    }
  }

  MultiPoly pow(int e) const {
    MultiPoly r(1L), b = *this;
    r.names_ = names_;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].first != b.t_[i].first || !(a.t_[i].second == b.t_[i].second)) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Replace each variable i by vals[i] (variables beyond vals.size() stay).
  template <class G>
  G evaluate(const std::vector<G>& vals) const {
    G r(0L);
    for (auto& [m, c] : t_) {
      G term(c);
      for (int i = 0; i < kMaxVars; ++i) {
        int e = mono_exp(m, i);
        if (e == 0) continue;
        if (i >= static_cast<int>(vals.size())) throw std::out_of_range("evaluate: missing value");
        for (int k = 0; k < e; ++k) term = term * vals[i];
      }
      r = r + term;
    }
    return r;
  }

  /// Apply f to every coefficient.
  template <class G, class Fn>
  MultiPoly<G> map_coeffs(Fn f) const {
    std::vector<typename MultiPoly<G>::Term> out;
    out.reserve(t_.size());
    for (auto& [m, c] : t_) out.emplace_back(m, f(c));
    return MultiPoly<G>::from_terms(std::move(out), names_);
  }

  std::string str(const std::vector<std::string>* names = nullptr) const {
    if (!names) names = names_;
    if (t_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : t_) {
      std::string mon;
      for (int i = 0; i < kMaxVars; ++i) {
        int e = mono_exp(m, i);
        if (!e) continue;
        if (!mon.empty()) mon += "*";
        mon += names && i < static_cast<int>(names->size()) ? (*names)[i] : "v" + std::to_string(i + 1);
        if (e > 1) mon += "^" + std::to_string(e);
      }
      std::string cs = to_string(c);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos && cs.find('(') != std::string::npos;
      std::string term;
      if (mon.empty()) {
        term = compound ? "(" + cs + ")" : cs;
      } else if (cs == "1") {
        term = mon;
      } else if (cs == "-1") {
        term = "-" + mon;
      } else {
        term = (compound ? "(" + cs + ")" : cs) + "*" + mon;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }
  friend std::string to_string(const MultiPoly& a) { return a.str(); }

  MultiPoly with_names(const std::vector<std::string>* n) const {
    if (!n || names_) return *this;
    MultiPoly r = *this;
    r.names_ = n;
    return r;
  }

 private:
  void canonicalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && is_zero(out.back().second)) out.pop_back();
    t_ = std::move(out);
  }

  std::vector<Term> t_;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace cheralg
