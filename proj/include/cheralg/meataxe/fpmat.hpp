#pragma once
/// Dense linear algebra and univariate polynomials over a prime field F_p
/// with residues stored as machine integers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cheralg::fp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Vec = std::vector<u32>;

inline u32 addm(u32 a, u32 b, u32 p) {
  u64 s = u64(a) + b;
  return static_cast<u32>(s >= p ? s - p : s);
}
inline u32 subm(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 mulm(u32 a, u32 b, u32 p) { return static_cast<u32>(u64(a) * b % p); }
inline u32 powm(u32 a, u64 e, u32 p) {
  u64 r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}
inline u32 invm(u32 a, u32 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return powm(a, p - 2, p);
}

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
}

/// Dense r x c matrix; columns are images of basis vectors when used as an
/// action.
struct Mat {
  int r = 0, c = 0;
  u32 p = 0;
  std::vector<u32> a;

  Mat() = default;
  Mat(int rows, int cols, u32 prime) : r(rows), c(cols), p(prime), a(std::size_t(rows) * cols, 0) {}
  static Mat identity(int n, u32 p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  u32& operator()(int i, int j) { return a[std::size_t(i) * c + j]; }
  u32 operator()(int i, int j) const { return a[std::size_t(i) * c + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.c != y.r) throw std::invalid_argument("matrix shape mismatch");
    Mat z(x.r, y.c, x.p);
    const u32 p = x.p;
    std::vector<u64> acc(y.c);
    for (int i = 0; i < x.r; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int k = 0; k < x.c; ++k) {
        u64 v = x(i, k);
        if (!v) continue;
        const u32* yr = &y.a[std::size_t(k) * y.c];
        for (int j = 0; j < y.c; ++j) {
          acc[j] += v * yr[j];
          if (acc[j] >= (u64(1) << 62)) acc[j] %= p;
        }
      }
      for (int j = 0; j < y.c; ++j) z(i, j) = static_cast<u32>(acc[j] % p);
    }
    return z;
  }
  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = addm(z.a[i], y.a[i], x.p);
    return z;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = subm(z.a[i], y.a[i], x.p);
    return z;
  }
  friend bool operator==(const Mat& x, const Mat& y) { return x.r == y.r && x.c == y.c && x.a == y.a; }
  Mat scaled(u32 s) const {
    Mat z = *this;
    for (auto& v : z.a) v = mulm(v, s, p);
    return z;
  }
  Mat transpose() const {
    Mat t(c, r, p);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Vec apply(const Vec& v) const {
    Vec out(r, 0);
    for (int i = 0; i < r; ++i) {
      u64 s = 0;
      const u32* row = &a[std::size_t(i) * c];
      for (int j = 0; j < c; ++j) {
        s += u64(row[j]) * v[j];
        if (s >= (u64(1) << 62)) s %= p;
      }
      out[i] = static_cast<u32>(s % p);
    }
    return out;
  }
  Vec column(int j) const {
    Vec v(r);
    for (int i = 0; i < r; ++i) v[i] = (*this)(i, j);
    return v;
  }
  static Mat from_columns(int rows, const std::vector<Vec>& cols, u32 p) {
    Mat m(rows, static_cast<int>(cols.size()), p);
    for (int j = 0; j < m.c; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }
  bool is_zero() const { return is_zero_vec(a); }
};

/// Reduced row echelon basis of a subspace of F_p^n, maintained
/// incrementally (pivot = first nonzero coordinate).
class Echelon {
 public:
  Echelon(int n, u32 p) : n_(n), p_(p) {}
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  void reduce(Vec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      u32 f = v[piv_[k]];
      if (!f) continue;
      const Vec& r = rows_[k];
      for (int j = piv_[k]; j < n_; ++j)
        if (r[j]) v[j] = subm(v[j], mulm(f, r[j], p_), p_);
    }
  }
  bool contains(Vec v) const {
    reduce(v);
    return is_zero_vec(v);
  }
  /// Returns false when v is already in the span.
  bool insert(Vec v) {
    reduce(v);
    int p = -1;
    for (int j = 0; j < n_; ++j)
      if (v[j]) {
        p = j;
        break;
      }
    if (p < 0) return false;
    u32 inv = invm(v[p], p_);
    for (int j = p; j < n_; ++j) v[j] = mulm(v[j], inv, p_);
    for (auto& r : rows_) {
      u32 f = r[p];
      if (!f) continue;
      for (int j = p; j < n_; ++j)
        if (v[j]) r[j] = subm(r[j], mulm(f, v[j], p_), p_);
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

 private:
  int n_;
  u32 p_;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
};

/// Right kernel {v : A v = 0}, one basis vector per free column.
inline std::vector<Vec> nullspace(const Mat& A) {
  Mat m = A;
  const u32 p = A.p;
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < m.c && row < m.r; ++col) {
    int sel = -1;
    for (int i = row; i < m.r; ++i)
      if (m(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.c; ++j) std::swap(m(sel, j), m(row, j));
    u32 inv = invm(m(row, col), p);
    for (int j = col; j < m.c; ++j) m(row, j) = mulm(m(row, j), inv, p);
    for (int i = 0; i < m.r; ++i) {
      if (i == row || !m(i, col)) continue;
      u32 f = m(i, col);
      for (int j = col; j < m.c; ++j)
        if (m(row, j)) m(i, j) = subm(m(i, j), mulm(f, m(row, j), p), p);
    }
    pivcol.push_back(col);
    ++row;
  }
  std::vector<char> is_piv(m.c, 0);
  for (int c : pivcol) is_piv[c] = 1;
  std::vector<Vec> out;
  for (int f = 0; f < m.c; ++f) {
    if (is_piv[f]) continue;
    Vec v(m.c, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivcol.size(); ++k) v[pivcol[k]] = subm(0, m(static_cast<int>(k), f), p);
    out.push_back(std::move(v));
  }
  return out;
}

inline int rank(const Mat& A) { return A.c - static_cast<int>(nullspace(A).size()); }

/// Inverse of a square matrix; throws when singular.
inline Mat inverse(const Mat& A) {
  int n = A.r;
  const u32 p = A.p;
  Mat m(n, 2 * n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = A(i, j);
    m(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (m(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) throw std::domain_error("singular matrix");
    if (sel != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(m(sel, j), m(col, j));
    u32 inv = invm(m(col, col), p);
    for (int j = 0; j < 2 * n; ++j) m(col, j) = mulm(m(col, j), inv, p);
    for (int i = 0; i < n; ++i) {
      if (i == col || !m(i, col)) continue;
      u32 f = m(i, col);
      for (int j = 0; j < 2 * n; ++j)
        if (m(col, j)) m(i, j) = subm(m(i, j), mulm(f, m(col, j), p), p);
    }
  }
  Mat r(n, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = m(i, n + j);
  return r;
}

// ---------------------------------------------------------------------------
// Polynomials: coefficient vectors, lowest degree first, no trailing zeros.

using Poly = std::vector<u32>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly padd(Poly a, const Poly& b, u32 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = addm(a[i], b[i], p);
  trim(a);
  return a;
}
inline Poly psub(Poly a, const Poly& b, u32 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = subm(a[i], b[i], p);
  trim(a);
  return a;
}
inline Poly pmul(const Poly& a, const Poly& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + u64(a[i]) * b[j]) % p;
  }
  Poly out(r.begin(), r.end());
  trim(out);
  return out;
}
/// (quotient, remainder) of a by nonzero b.
inline std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, u32 p) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  u32 inv = invm(b.back(), p);
  for (int i = deg(a); i >= deg(b); --i) {
    u32 f = mulm(a[i], inv, p);
    if (!f) continue;
    q[i - deg(b)] = f;
    for (int j = 0; j <= deg(b); ++j) a[i - deg(b) + j] = subm(a[i - deg(b) + j], mulm(f, b[j], p), p);
  }
  trim(a);
  trim(q);
  return {q, a};
}
inline Poly pmod(const Poly& a, const Poly& b, u32 p) { return pdivmod(a, b, p).second; }
inline Poly monic(Poly f, u32 p) {
  if (f.empty()) return f;
  u32 inv = invm(f.back(), p);
  for (auto& c : f) c = mulm(c, inv, p);
  return f;
}
inline Poly pgcd(Poly a, Poly b, u32 p) {
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}
inline Poly pderiv(const Poly& f, u32 p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulm(f[i], static_cast<u32>(i % p), p));
  trim(d);
  return d;
}
/// base^e mod m with e a GMP integer.
inline Poly ppowmod(Poly base, mpz_class e, const Poly& m, u32 p) {
  Poly r{1};
  r = pmod(r, m, p);
  base = pmod(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

/// Evaluate f at a square matrix (Horner).
inline Mat eval_at(const Poly& f, const Mat& A) {
  Mat r(A.r, A.c, A.p);
  for (int i = deg(f); i >= 0; --i) {
    r = r * A;
    for (int k = 0; k < A.r; ++k) r(k, k) = addm(r(k, k), f[i], A.p);
  }
  return r;
}

/// Characteristic polynomial via reduction to upper Hessenberg form.
inline Poly charpoly(const Mat& A0) {
  Mat H = A0;
  const int n = H.r;
  const u32 p = H.p;
  for (int m = 1; m < n - 1; ++m) {
    int sel = -1;
    for (int i = m; i < n; ++i)
      if (H(i, m - 1)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != m) {
      for (int j = 0; j < n; ++j) std::swap(H(sel, j), H(m, j));
      for (int i = 0; i < n; ++i) std::swap(H(i, sel), H(i, m));
    }
    u32 inv = invm(H(m, m - 1), p);
    for (int i = m + 1; i < n; ++i) {
      u32 f = mulm(H(i, m - 1), inv, p);
      if (!f) continue;
      for (int j = 0; j < n; ++j) H(i, j) = subm(H(i, j), mulm(f, H(m, j), p), p);
      for (int k = 0; k < n; ++k) H(k, m) = addm(H(k, m), mulm(f, H(k, i), p), p);
    }
  }
  std::vector<Poly> P(n + 1);
  P[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Poly x_minus{subm(0, H(m - 1, m - 1), p), 1};
    Poly cur = pmul(x_minus, P[m - 1], p);
    u32 prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = mulm(prod, H(i, i - 1), p);
      if (!prod) break;
      u32 coef = mulm(prod, H(i - 1, m - 1), p);
      if (coef) {
        Poly t = P[i - 1];
        for (auto& c : t) c = mulm(c, coef, p);
        cur = psub(cur, t, p);
      }
    }
    P[m] = cur;
  }
  return P[n];
}

namespace detail {

/// Equal-degree splitting (Cantor-Zassenhaus) of a squarefree monic f
/// whose irreducible factors all have degree d.
inline void equal_degree(const Poly& f, int d, u32 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<u32> coef(0, p - 1);
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, d);
  for (;;) {
    Poly a(deg(f));
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    Poly g;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly t = a, s = a;
      for (int i = 1; i < d; ++i) {
        t = pmod(pmul(t, t, p), f, p);
        s = padd(s, t, p);
      }
      g = pgcd(f, s, p);
    } else {
      Poly b = ppowmod(a, (q - 1) / 2, f, p);
      g = pgcd(f, psub(b, Poly{1}, p), p);
    }
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(pdivmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Distinct irreducible factors of a squarefree monic f.
inline void squarefree_factors(Poly f, u32 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  Poly x{0, 1};
  Poly h = pmod(x, f, p);
  for (int d = 1; deg(f) >= 2 * d; ++d) {
    h = ppowmod(h, mpz_class(p), f, p);
    Poly g = pgcd(f, psub(h, x, p), p);
    if (deg(g) > 0) {
      equal_degree(g, d, p, rng, out);
      f = pdivmod(f, g, p).first;
      h = pmod(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(monic(f, p));
}

}  // namespace detail

/// Distinct monic irreducible factors of f, sorted by degree then
/// coefficients.
inline std::vector<Poly> irreducible_factors(Poly f, u32 p, std::mt19937_64& rng) {
  f = monic(f, p);
  std::vector<Poly> out;
  while (deg(f) > 0) {
    Poly d = pderiv(f, p);
    if (d.empty()) {
      // f is a p-th power: take the p-th root.
      Poly r;
      for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
      f = r;
      continue;
    }
    Poly g = pgcd(f, d, p);
    Poly sq = pdivmod(f, g, p).first;  // product of distinct factors of f (up to those with multiplicity divisible by p)
    detail::squarefree_factors(monic(sq, p), p, rng, out);
    // Remove all found factors from f completely.
    for (const Poly& q : out)
      for (;;) {
        auto [qq, r] = pdivmod(f, q, p);
        if (!r.empty()) break;
        f = qq;
      }
    f = monic(f, p);
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cheralg::fp
