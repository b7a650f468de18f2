#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minchar/numeric.hpp"

namespace minchar {

long totient(long n);

// Monic coefficients of the n-th cyclotomic polynomial, constant term first,
// length totient(n) + 1. Computed by exact division of x^n - 1 and cached.
const std::vector<Int>& cyclotomic_polynomial(long n);

// An element of Z[zeta_n], stored as the canonical residue modulo the n-th
// cyclotomic polynomial: totient(n) integer coefficients for the basis
// 1, zeta, ..., zeta^(totient(n)-1). Two values of different declared orders
// compare and combine through the embedding into Z[zeta_lcm]. Values are
// immutable after construction; all operations are pure.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_{Int(0)} {}
  Cyclotomic(const Int& value) : order_(1), coeffs_{value} {}
  Cyclotomic(long value) : order_(1), coeffs_{Int(value)} {}

  // zeta_n^exponent; the exponent is taken modulo n.
  static Cyclotomic zeta(long n, long exponent);

  // Sum of c * zeta_n^e over the given (c, e) terms.
  static Cyclotomic from_terms(long n, const std::vector<std::pair<Int, long>>& terms);

  long order() const { return order_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  // The value as an ordinary integer; throws NotRationalError otherwise.
  Int as_integer() const;

  // Complex conjugate, zeta -> zeta^(n-1).
  Cyclotomic conj() const;

  // this * conj(this); real and nonnegative, integer for the uses here.
  Cyclotomic norm_squared() const;

  // Rewrite over Z[zeta_m] where order() divides m.
  Cyclotomic embedded(long m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

  // Human-readable form such as "2", "z12^7" or "-1+2*z5^3".
  std::string str() const;

 private:
  Cyclotomic(long order, std::vector<Int> reduced)
      : order_(order), coeffs_(std::move(reduced)) {}

  // Reduce a dense exponent vector of length n modulo the n-th cyclotomic
  // polynomial; returns the canonical residue of length totient(n).
  static std::vector<Int> reduce(std::vector<Int> dense, long n);

  long order_;
  std::vector<Int> coeffs_;
};

}  // namespace minchar
