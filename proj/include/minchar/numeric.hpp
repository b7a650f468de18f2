#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace minchar {

using Int = mpz_class;
using Rat = mpq_class;

// Floor division, divisor must be positive.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_sqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer out of range for long: " + v.get_str());
  return v.get_si();
}

// Nearest integer to num/den with den > 0; an exact half rounds toward zero.
// *tie is set exactly when num/den is a half-integer.
inline Int round_nearest_half_toward_zero(const Int& num, const Int& den, bool* tie = nullptr) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int twice = 2 * r;
  if (tie) *tie = (twice == den);
  if (twice > den) return q + 1;
  if (twice < den) return q;
  return (num >= 0) ? q : q + 1;
}

inline Int rat_floor(const Rat& q) {
  Int num(q.get_num()), den(q.get_den());
  return floor_div(num, den);
}

// Nearest integer to a rational; an exact half rounds down.
inline Int round_nearest_half_down(const Rat& q) { return rat_floor(q + Rat(1, 2)); }

inline Int rat_to_int_exact(const Rat& q) {
  if (q.get_den() != 1) throw std::logic_error("expected an integer, got " + q.get_str());
  return Int(q.get_num());
}

}  // namespace minchar
