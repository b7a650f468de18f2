#include <doctest.h>

#include <random>
#include <vector>

#include "minchar/cyclotomic.hpp"
#include "minchar/errors.hpp"

using minchar::Cyclotomic;
using minchar::Int;

namespace {

// Naive convolution product, constant term first. Independent of the exact
// division used to build the cyclotomic polynomials.
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Cyclotomic random_element(std::mt19937_64& rng, long order) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<std::pair<Int, long>> terms;
  for (long e = 0; e < order; ++e) terms.emplace_back(Int(coeff(rng)), e);
  return Cyclotomic::from_terms(order, terms);
}

}  // namespace

TEST_CASE("totient values and divisor sum") {
  CHECK(minchar::totient(1) == 1);
  CHECK(minchar::totient(2) == 1);
  CHECK(minchar::totient(12) == 4);
  CHECK(minchar::totient(36) == 12);
  CHECK(minchar::totient(97) == 96);
  for (long n = 1; n <= 200; ++n) {
    long sum = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sum += minchar::totient(d);
    CHECK(sum == n);
  }
  CHECK_THROWS_AS(minchar::totient(0), minchar::InvalidParametersError);
}

TEST_CASE("small cyclotomic polynomials") {
  using P = std::vector<Int>;
  CHECK(minchar::cyclotomic_polynomial(1) == P{-1, 1});
  CHECK(minchar::cyclotomic_polynomial(2) == P{1, 1});
  CHECK(minchar::cyclotomic_polynomial(3) == P{1, 1, 1});
  CHECK(minchar::cyclotomic_polynomial(4) == P{1, 0, 1});
  CHECK(minchar::cyclotomic_polynomial(6) == P{1, -1, 1});
  CHECK(minchar::cyclotomic_polynomial(12) == P{1, 0, -1, 0, 1});
  CHECK(minchar::cyclotomic_polynomial(7) == P{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^n - 1") {
  for (long n = 1; n <= 30; ++n) {
    std::vector<Int> product{Int(1)};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) product = poly_mul(product, minchar::cyclotomic_polynomial(d));
    std::vector<Int> expected(static_cast<size_t>(n) + 1, Int(0));
    expected[0] = -1;
    expected[static_cast<size_t>(n)] = 1;
    CHECK(product == expected);
    CHECK(minchar::cyclotomic_polynomial(n).size() ==
          static_cast<size_t>(minchar::totient(n)) + 1);
  }
}

TEST_CASE("canonical residues of roots of unity") {
  CHECK(Cyclotomic::zeta(4, 1) * Cyclotomic::zeta(4, 1) == Cyclotomic(-1));
  // Phi_3 vanishes at zeta_3.
  Cyclotomic w = Cyclotomic::zeta(3, 1);
  CHECK((w * w + w + Cyclotomic(1)).is_zero());
  // zeta_6^2 reduces through x^2 = x - 1.
  Cyclotomic z6 = Cyclotomic::zeta(6, 1);
  CHECK(z6 * z6 == z6 - Cyclotomic(1));
  for (long n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15}) {
    Cyclotomic z = Cyclotomic::zeta(n, 1);
    Cyclotomic power(1);
    for (long i = 0; i < n; ++i) power *= z;
    CHECK(power == Cyclotomic(1));
    CHECK(z.norm_squared() == Cyclotomic(1));
  }
  // Negative exponents wrap.
  CHECK(Cyclotomic::zeta(5, -2) == Cyclotomic::zeta(5, 3));
}

TEST_CASE("values of different declared orders compare through the embedding") {
  CHECK(Cyclotomic::zeta(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(6, 2) == Cyclotomic::zeta(3, 1));
  CHECK(Cyclotomic::zeta(3, 1) * Cyclotomic::zeta(4, 1) == Cyclotomic::zeta(12, 7));
  CHECK(Cyclotomic::zeta(8, 2) == Cyclotomic::zeta(4, 1));
  CHECK(Cyclotomic::zeta(3, 1).embedded(12) == Cyclotomic::zeta(12, 4));
  CHECK(Cyclotomic::zeta(5, 2) != Cyclotomic::zeta(5, 3));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(20240517);
  const long orders[] = {1, 2, 3, 4, 5, 6, 8, 9, 12};
  std::uniform_int_distribution<size_t> pick(0, std::size(orders) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Cyclotomic a = random_element(rng, orders[pick(rng)]);
    Cyclotomic b = random_element(rng, orders[pick(rng)]);
    Cyclotomic c = random_element(rng, orders[pick(rng)]);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic(0));
    CHECK(a * Cyclotomic(1) == a);
    CHECK(a * Cyclotomic(0) == Cyclotomic(0));
    CHECK(-(-a) == a);
  }
}

TEST_CASE("conjugation is a ring involution") {
  std::mt19937_64 rng(991);
  const long orders[] = {3, 4, 5, 7, 8, 12};
  std::uniform_int_distribution<size_t> pick(0, std::size(orders) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Cyclotomic a = random_element(rng, orders[pick(rng)]);
    Cyclotomic b = random_element(rng, orders[pick(rng)]);
    CHECK(a.conj().conj() == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    // x * conj(x) is real: fixed by conjugation.
    Cyclotomic ns = a.norm_squared();
    CHECK(ns.conj() == ns);
  }
  CHECK(Cyclotomic(7).conj() == Cyclotomic(7));
  CHECK(Cyclotomic::zeta(5, 1).conj() == Cyclotomic::zeta(5, 4));
}

TEST_CASE("rational detection") {
  CHECK(Cyclotomic(5).is_rational());
  CHECK(Cyclotomic(5).as_integer() == 5);
  CHECK(Cyclotomic::zeta(6, 3).as_integer() == -1);
  CHECK(!Cyclotomic::zeta(5, 1).is_rational());
  CHECK_THROWS_AS(Cyclotomic::zeta(5, 1).as_integer(), minchar::NotRationalError);
  CHECK(Cyclotomic(0).is_zero());
  CHECK(!Cyclotomic(2).is_zero());
}

TEST_CASE("from_terms matches the monomial sum") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (long n : {1, 4, 6, 10, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::pair<Int, long>> terms;
      Cyclotomic sum(0);
      for (long e = 0; e < n; ++e) {
        Int c(coeff(rng));
        terms.emplace_back(c, e);
        sum += Cyclotomic(c) * Cyclotomic::zeta(n, e);
      }
      CHECK(Cyclotomic::from_terms(n, terms) == sum);
    }
  }
}

TEST_CASE("printed form") {
  CHECK(Cyclotomic(0).str() == "0");
  CHECK(Cyclotomic(2).str() == "2");
  CHECK(Cyclotomic(-3).str() == "-3");
  CHECK(Cyclotomic::zeta(5, 3).str() == "z5^3");
  CHECK(Cyclotomic::zeta(5, 1).str() == "z5");
  // z12^7 reduces to -z12 in the canonical basis.
  CHECK(Cyclotomic::zeta(12, 7).str() == "-z12");
  CHECK(Cyclotomic::zeta(12, 7) == -Cyclotomic::zeta(12, 1));
  CHECK((-Cyclotomic::zeta(4, 1)).str() == "-z4");
  CHECK((Cyclotomic(2) * Cyclotomic::zeta(5, 3) - Cyclotomic(1)).str() == "-1+2*z5^3");
}
