#include <doctest.h>

#include <random>
#include <vector>

#include "minchar/errors.hpp"
#include "minchar/lattice.hpp"

using minchar::GramMatrix;
using minchar::Int;
using minchar::Rat;

namespace {

GramMatrix gram(std::vector<std::vector<long>> rows) {
  GramMatrix g;
  for (auto& r : rows) g.entries.emplace_back(r.begin(), r.end());
  return g;
}

std::vector<std::vector<Int>> conjugate(const std::vector<std::vector<Int>>& u,
                                        const GramMatrix& g) {
  const size_t n = g.dim();
  std::vector<std::vector<Int>> ug(n, std::vector<Int>(n, 0)), out(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l) ug[i][j] += u[i][l] * g.entries[l][j];
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l) out[i][j] += ug[i][l] * u[j][l];
  return out;
}

Int form_value(const GramMatrix& g, const std::vector<Int>& x) {
  Int out = 0;
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < g.dim(); ++j) out += x[i] * g.entries[i][j] * x[j];
  return out;
}

// Gram-Schmidt data recomputed from scratch; independent of the incremental
// bookkeeping inside the reduction.
void gso(const GramMatrix& g, std::vector<std::vector<Rat>>* mu, std::vector<Rat>* b) {
  const size_t n = g.dim();
  mu->assign(n, std::vector<Rat>(n, 0));
  b->assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) {
      Rat dot = Rat(g.entries[i][j]);
      for (size_t l = 0; l < j; ++l) dot -= (*mu)[i][l] * (*mu)[j][l] * (*b)[l];
      (*mu)[i][j] = dot / (*b)[j];
    }
    Rat norm = Rat(g.entries[i][i]);
    for (size_t l = 0; l < i; ++l) norm -= (*mu)[i][l] * (*mu)[i][l] * (*b)[l];
    (*b)[i] = norm;
  }
}

void check_reduced(const GramMatrix& g, const minchar::ReductionResult& res) {
  CHECK(conjugate(res.transform, g) == res.reduced.entries);
  Int det = minchar::determinant(res.transform);
  CHECK((det == 1 || det == -1));
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> b;
  gso(res.reduced, &mu, &b);
  const Rat delta(3, 4);
  for (size_t i = 0; i < g.dim(); ++i) {
    CHECK(b[i] > 0);
    for (size_t j = 0; j < i; ++j) {
      Rat twice = 2 * mu[i][j];
      if (twice < 0) twice = -twice;
      CHECK(twice <= 1);
    }
    if (i > 0) CHECK(b[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * b[i - 1]);
  }
}

}  // namespace

TEST_CASE("reduction of the order-12 quotient form") {
  // 12 I - d d^T for degrees (1, 1, 3); the short degree-3 axis moves first.
  GramMatrix g = gram({{11, -1, -3}, {-1, 11, -3}, {-3, -3, 3}});
  auto res = minchar::lll_reduce(g);
  check_reduced(g, res);
  CHECK(res.reduced.entries ==
        std::vector<std::vector<Int>>{{3, 0, 0}, {0, 8, -4}, {0, -4, 8}});
}

TEST_CASE("reduction of the order-24 quotient form") {
  GramMatrix g = gram({{23, -2, -3, -3}, {-2, 20, -6, -6}, {-3, -6, 15, -9}, {-3, -6, -9, 15}});
  auto res = minchar::lll_reduce(g);
  check_reduced(g, res);
  CHECK(res.reduced.entries[0][0] == 8);
}

TEST_CASE("reduction leaves an already reduced basis intact up to the conditions") {
  GramMatrix g = gram({{2, 0}, {0, 3}});
  auto res = minchar::lll_reduce(g);
  check_reduced(g, res);
  CHECK(res.reduced.entries == g.entries);
}

TEST_CASE("reduction rejects an indefinite form") {
  CHECK_THROWS_AS(minchar::lll_reduce(gram({{1, 2}, {2, 1}})),
                  minchar::NotPositiveDefiniteError);
  CHECK_THROWS_AS(minchar::lll_reduce(gram({{0}})), minchar::NotPositiveDefiniteError);
  CHECK_THROWS_AS(minchar::lll_reduce(gram({{-1}})), minchar::NotPositiveDefiniteError);
}

TEST_CASE("random positive definite forms stay equivalent under reduction") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<long> entry(-3, 3);
  int produced = 0;
  while (produced < 50) {
    std::vector<std::vector<Int>> basis(3, std::vector<Int>(3));
    for (auto& row : basis)
      for (Int& v : row) v = entry(rng);
    if (minchar::determinant(basis) == 0) continue;
    ++produced;
    GramMatrix g;
    g.entries.assign(3, std::vector<Int>(3, 0));
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        for (size_t l = 0; l < 3; ++l) g.entries[i][j] += basis[i][l] * basis[j][l];
    auto res = minchar::lll_reduce(g);
    check_reduced(g, res);
    CHECK(minchar::determinant(res.reduced.entries) == minchar::determinant(g.entries));
  }
}

TEST_CASE("enumeration finds the minimum of the order-12 quotient form") {
  GramMatrix g = gram({{11, -1, -3}, {-1, 11, -3}, {-3, -3, 3}});
  auto res = minchar::enumerate_min(g, Int(3));
  CHECK(res.minimum == 3);
  CHECK(res.vectors == std::vector<std::vector<Int>>{{0, 0, 1}});
  CHECK(res.nodes > 0);
}

TEST_CASE("enumeration of the order-24 quotient form inside the difference radius") {
  GramMatrix g = gram({{23, -2, -3, -3}, {-2, 20, -6, -6}, {-3, -6, 15, -9}, {-3, -6, -9, 15}});
  auto res = minchar::enumerate_min(g, Int(15));
  CHECK(res.minimum == 8);
  CHECK(res.vectors == std::vector<std::vector<Int>>{{0, 1, 1, 1}});
}

TEST_CASE("enumeration reports every minimizer once, sign-normalized") {
  GramMatrix g = gram({{2, 0}, {0, 2}});
  auto res = minchar::enumerate_min(g, Int(2));
  CHECK(res.minimum == 2);
  CHECK(res.vectors == std::vector<std::vector<Int>>{{0, 1}, {1, 0}});
}

TEST_CASE("a radius below the true minimum is rejected") {
  CHECK_THROWS_AS(minchar::enumerate_min(gram({{5, 0}, {0, 7}}), Int(4)),
                  minchar::RadiusTooSmallError);
}

TEST_CASE("enumeration agrees with a direct box scan") {
  std::mt19937_64 rng(2718281);
  std::uniform_int_distribution<long> entry(-3, 3);
  int produced = 0;
  while (produced < 30) {
    std::vector<std::vector<Int>> basis(3, std::vector<Int>(3));
    for (auto& row : basis)
      for (Int& v : row) v = entry(rng);
    if (minchar::determinant(basis) == 0) continue;
    ++produced;
    GramMatrix g;
    g.entries.assign(3, std::vector<Int>(3, 0));
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        for (size_t l = 0; l < 3; ++l) g.entries[i][j] += basis[i][l] * basis[j][l];

    Int radius = g.entries[0][0];
    for (size_t i = 1; i < 3; ++i) radius = std::min(radius, g.entries[i][i]);
    auto res = minchar::enumerate_min(g, radius);

    long bound = 3;
    for (const auto& v : res.vectors) {
      CHECK(form_value(g, v) == res.minimum);
      for (const Int& c : v) bound = std::max(bound, std::abs(c.get_si()));
    }
    // Every sign-normalized minimizer in a box covering the reported vectors
    // must be reported; a missed shorter vector inside the box would differ.
    std::vector<std::vector<Int>> box;
    Int best = radius;
    for (long x = -bound; x <= bound; ++x)
      for (long y = -bound; y <= bound; ++y)
        for (long z = -bound; z <= bound; ++z) {
          if (x == 0 && y == 0 && z == 0) continue;
          std::vector<Int> v{x, y, z};
          Int q = form_value(g, v);
          if (q > best) continue;
          if (x < 0 || (x == 0 && y < 0) || (x == 0 && y == 0 && z < 0)) continue;
          if (q < best) {
            best = q;
            box.clear();
          }
          box.push_back(v);
        }
    std::sort(box.begin(), box.end());
    CHECK(best == res.minimum);
    CHECK(box == res.vectors);
  }
}

TEST_CASE("fraction-free determinants") {
  CHECK(minchar::determinant({{2, 1}, {1, 2}}) == 3);
  CHECK(minchar::determinant({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
  CHECK(minchar::determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(minchar::determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(minchar::determinant({{3, 1, 0, 2}, {1, 4, 1, 0}, {0, 1, 5, 1}, {2, 0, 1, 6}}) == 221);
}
