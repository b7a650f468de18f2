#include "minchar/lattice.hpp"

#include <algorithm>
#include <set>

#include "minchar/errors.hpp"

namespace minchar {

namespace {

// Gram-Schmidt data over the rationals for the first `kmax+1` rows of A.
struct Gso {
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
  std::vector<Rat> B;                // squared lengths of the orthogonalized rows
};

void gso_row(const std::vector<std::vector<Int>>& a, Gso& g, size_t k) {
  // c_j = <b_k, b*_j> accumulated left to right; mu and B follow.
  std::vector<Rat> c(k + 1);
  for (size_t j = 0; j <= k; ++j) {
    Rat u = Rat(a[k][j]);
    for (size_t i = 0; i < j; ++i) u -= g.mu[j][i] * c[i];
    c[j] = u;
    if (j < k) {
      if (g.B[j] == 0) throw NotPositiveDefiniteError("zero Gram-Schmidt norm");
      g.mu[k][j] = u / g.B[j];
    }
  }
  // c[k] came out of the recurrence as a_kk minus the projections, which is
  // already the squared length of the orthogonalized row.
  if (c[k] <= 0) throw NotPositiveDefiniteError("form is not positive definite");
  g.B[k] = c[k];
}

}  // namespace

ReductionResult lll_reduce(const GramMatrix& gram, const Rat& delta) {
  const size_t n = gram.dim();
  std::vector<std::vector<Int>> a = gram.entries;  // current Gram matrix
  std::vector<std::vector<Int>> h(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) h[i][i] = 1;
  if (n == 0) return {h, {a}};

  Gso g;
  g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  g.B.assign(n, Rat(0));

  // Replace row k by row k - q * row l in both the basis and the Gram matrix.
  auto reduce_pair = [&](size_t k, size_t l) {
    if (2 * abs(g.mu[k][l]) <= 1) return;
    const Int q = round_nearest_half_down(g.mu[k][l]);
    for (size_t j = 0; j < n; ++j) h[k][j] -= q * h[l][j];
    const Int akl = a[k][l], all = a[l][l];
    for (size_t j = 0; j < n; ++j) a[k][j] -= q * a[l][j];
    a[k][k] += q * (q * all - akl);
    for (size_t j = 0; j < n; ++j) a[j][k] = a[k][j];
    g.mu[k][l] -= q;
    for (size_t i = 0; i < l; ++i) g.mu[k][i] -= q * g.mu[l][i];
  };

  size_t kmax = 0;
  g.B[0] = Rat(a[0][0]);
  if (g.B[0] <= 0) throw NotPositiveDefiniteError("form is not positive definite");

  size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gso_row(a, g, k);
    }
    reduce_pair(k, k - 1);
    if (g.B[k] < (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
      // Swap rows k-1 and k, then patch the Gram-Schmidt data in place.
      std::swap(h[k - 1], h[k]);
      std::swap(a[k - 1], a[k]);
      for (size_t j = 0; j < n; ++j) std::swap(a[j][k - 1], a[j][k]);
      const Rat mu = g.mu[k][k - 1];
      const Rat bprime = g.B[k] + mu * mu * g.B[k - 1];
      g.mu[k][k - 1] = mu * g.B[k - 1] / bprime;
      g.B[k] = g.B[k - 1] * g.B[k] / bprime;
      g.B[k - 1] = bprime;
      for (size_t i = 0; i + 1 < k; ++i) std::swap(g.mu[k - 1][i], g.mu[k][i]);
      for (size_t i = k + 1; i <= kmax; ++i) {
        const Rat t = g.mu[i][k];
        g.mu[i][k] = g.mu[i][k - 1] - mu * t;
        g.mu[i][k - 1] = t + g.mu[k][k - 1] * g.mu[i][k];
      }
      k = (k > 1) ? k - 1 : 1;
    } else {
      for (size_t l = k - 1; l-- > 0;) reduce_pair(k, l);
      ++k;
    }
  }
  return {h, {a}};
}

EnumerationResult enumerate_min(const GramMatrix& gram, const Int& radius) {
  const size_t n = gram.dim();
  if (n == 0) throw RadiusTooSmallError("empty quadratic form has no nonzero vectors");
  if (radius < 0) throw RadiusTooSmallError("negative radius");

  // Cholesky-style decomposition: Q(x) = sum_i w[i] (x_i + sum_{j>i} u[i][j] x_j)^2.
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q[i][j] = Rat(gram.entries[i][j]);
  for (size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) throw NotPositiveDefiniteError("form is not positive definite");
    for (size_t j = i + 1; j < n; ++j) {
      const Rat uij = q[i][j] / q[i][i];
      for (size_t l = j; l < n; ++l) q[j][l] -= uij * q[i][l];
      q[i][j] = uij;
    }
  }

  EnumerationResult out;
  out.minimum = radius;
  bool found = false;
  std::set<std::vector<Int>> collected;
  Rat best = Rat(radius);

  std::vector<Int> x(n, 0);

  // Levels run from n-1 down to 0; `used` is the weight consumed by the
  // levels above the current one.
  auto descend = [&](auto&& self, size_t level, const Rat& used) -> void {
    const size_t i = level;
    Rat c = Rat(0);
    for (size_t j = i + 1; j < n; ++j)
      if (x[j] != 0) c += q[i][j] * Rat(x[j]);

    const Int start = round_nearest_half_down(-c);
    auto term = [&](const Int& v) -> Rat {
      const Rat shifted = Rat(v) + c;
      return q[i][i] * shifted * shifted;
    };
    auto visit = [&](const Int& v) -> bool {
      const Rat t = term(v);
      if (used + t > best) return false;
      ++out.nodes;
      if (i == 0) {
        bool zero = (v == 0);
        if (zero)
          for (size_t j = 1; j < n; ++j)
            if (x[j] != 0) {
              zero = false;
              break;
            }
        if (!zero) {
          x[0] = v;
          const Rat total = used + t;
          const Int value = rat_to_int_exact(total);
          if (!found || value < out.minimum) {
            found = true;
            out.minimum = value;
            best = total;
            collected.clear();
          }
          if (value == out.minimum) {
            std::vector<Int> rep = x;
            for (const Int& e : rep) {
              if (e == 0) continue;
              if (e < 0)
                for (Int& f : rep) f = -f;
              break;
            }
            collected.insert(rep);
          }
          x[0] = 0;
        }
      } else {
        x[i] = v;
        self(self, i - 1, used + t);
        x[i] = 0;
        // The recursion may have shrunk `best`; the caller's loop re-tests.
      }
      return true;
    };

    // Zigzag outward from the projected center; each direction dies once its
    // parabola leaves the budget.
    if (!visit(start)) return;
    for (Int step = 1;; ++step) {
      const bool up = visit(start + step);
      const bool down = visit(start - step);
      if (!up && !down) break;
    }
  };
  descend(descend, n - 1, Rat(0));

  if (!found) throw RadiusTooSmallError("no nonzero vector within radius " + radius.get_str());
  out.vectors.assign(collected.begin(), collected.end());
  return out;
}

Int determinant(const std::vector<std::vector<Int>>& matrix) {
  // Bareiss fraction-free elimination.
  const size_t n = matrix.size();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> m = matrix;
  Int prev = 1;
  int sign = 1;
  for (size_t col = 0; col + 1 < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      sign = -sign;
    }
    for (size_t row = col + 1; row < n; ++row) {
      for (size_t j = col + 1; j < n; ++j)
        m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / prev;
      m[row][col] = 0;
    }
    prev = m[col][col];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace minchar
