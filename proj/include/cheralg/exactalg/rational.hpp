#pragma once
/// Rational numbers (GMP) and the small helper vocabulary shared by all
/// scalar types: is_zero, to_string, hash.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace cheralg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two scalars from incompatible fields meet.
struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// Raised on division by zero or division in a ring without inverses.
struct DivisionError : std::domain_error {
  using std::domain_error::domain_error;
};

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

inline std::string to_string(const Rational& a) { return a.get_str(); }

inline Rational inverse(const Rational& a) {
  if (is_zero(a)) throw DivisionError("division by zero in Q");
  return 1 / a;
}

inline std::size_t hash_value(const Rational& a) {
  std::size_t h = std::hash<std::string>{}(a.get_str(16));
  return h;
}

/// Parse "a" or "a/b" with optional sign.
inline Rational parse_rational(const std::string& s) {
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

/// Residue of a rational modulo p. Throws when p divides the denominator.
inline std::uint64_t rational_mod(const Rational& a, std::uint64_t p) {
  Integer P(static_cast<unsigned long>(p));
  Integer den = a.get_den() % P;
  if (den == 0) throw DivisionError("denominator divisible by p");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  Integer num = a.get_num() % P;
  if (num < 0) num += P;
  Integer r = (num * inv) % P;
  return r.get_ui();
}

}  // namespace cheralg
