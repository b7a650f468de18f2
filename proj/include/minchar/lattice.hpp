#pragma once

#include <vector>

#include "minchar/numeric.hpp"

namespace minchar {

// Dense symmetric integer Gram matrix of a positive definite form.
struct GramMatrix {
  std::vector<std::vector<Int>> entries;
  size_t dim() const { return entries.size(); }
};

// Result of lattice reduction: the unimodular change of basis (rows are the
// new basis vectors in old coordinates) and the reduced Gram matrix
// U * G * U^T.
struct ReductionResult {
  std::vector<std::vector<Int>> transform;
  GramMatrix reduced;
};

// Exact Lenstra-Lenstra-Lovasz reduction on a Gram matrix over the
// rationals, reduction parameter 3/4. Throws NotPositiveDefiniteError when a
// Gram-Schmidt norm fails to stay positive.
ReductionResult lll_reduce(const GramMatrix& gram, const Rat& delta = Rat(3, 4));

// All nonzero minimizers of x^T G x within the radius, one vector per
// +/- pair (first nonzero coordinate positive), sorted lexicographically.
struct EnumerationResult {
  Int minimum;
  std::vector<std::vector<Int>> vectors;
  unsigned long long nodes = 0;
};

// Depth-first enumeration over the Cholesky decomposition with centered
// zigzag ordering and a radius that shrinks to the best value seen. Throws
// RadiusTooSmallError when no nonzero vector lies within the given radius.
EnumerationResult enumerate_min(const GramMatrix& gram, const Int& radius);

// Determinant by fraction-free elimination; used to confirm unimodularity.
Int determinant(const std::vector<std::vector<Int>>& matrix);

}  // namespace minchar
