#ifndef CY3_RATIONAL_HPP
#define CY3_RATIONAL_HPP

// Exact scalar types. Every computation in this library is over Z or Q;
// there is no floating point and no tolerance anywhere.

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cy3 {

using Integer = mpz_class;
// mpq_class values built with the two-argument constructor are stored as
// given; callers must canonicalize() them before any comparison runs.
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Canonical text form: "7", "-3/2".
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer numer(const Rational& q) { return q.get_num(); }
inline Integer denom(const Rational& q) { return q.get_den(); }

// Floor of the exact quotient, used for residue computations.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nonnegative residue of a mod m, m > 0.
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Exact square root when the argument is a perfect square.
inline std::optional<Integer> perfect_sqrt(const Integer& z) {
  if (z < 0) return std::nullopt;
  if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

// Exact square root of a nonnegative rational when it is a square in Q.
inline std::optional<Rational> perfect_sqrt(const Rational& q) {
  auto n = perfect_sqrt(numer(q));
  if (!n) return std::nullopt;
  auto d = perfect_sqrt(denom(q));
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace cy3

#endif
