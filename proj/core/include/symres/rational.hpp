#ifndef SYMRES_RATIONAL_HPP
#define SYMRES_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symres {

// All coefficient arithmetic in the library is exact. Rational is GMP's
// canonicalized rational; Integer its arbitrary-precision integer.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Converts an exact rational known to be an integer into int64.
inline long long to_int64(const Rational& q) {
  if (!is_integral(q)) throw std::logic_error("to_int64: value is not an integer: " + q.get_str());
  const Integer& n = q.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("to_int64: value out of range: " + n.get_str());
  return n.get_si();
}

inline long long to_int64(const Integer& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("to_int64: value out of range: " + n.get_str());
  return n.get_si();
}

inline Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

inline Integer int_pow(long long base, int exp) {
  Integer b(static_cast<long>(base)), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace symres

#endif
