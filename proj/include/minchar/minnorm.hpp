#pragma once

#include <vector>

#include "minchar/chartab.hpp"
#include "minchar/lattice.hpp"
#include "minchar/numeric.hpp"

namespace minchar {

// |G| * sum a_i^2 - (sum a_i d_i)^2; zero exactly on integer multiples of
// the degree vector.
Int quadratic_form_value(const DegreeProfile& profile, const std::vector<Int>& a);

// Gram matrix of the form on the quotient by the degree line, in the basis
// of the images of e_2..e_k: entries |G| delta_ij - d_(i+1) d_(j+1).
GramMatrix quotient_gram(const DegreeProfile& profile);

// Canonical representative of the translation/sign class of a: shift by a
// multiple of the degrees and flip sign so that 0 <= a.d <= |G|/2, with the
// lexicographically smaller vector on boundary ties.
std::vector<Int> canonicalize(const DegreeProfile& profile, const std::vector<Int>& a);

// Rounded profile of t * d / |G|: the nearest integer vector, its residuals,
// and its form value. Half-integer residuals round toward zero and are
// flagged.
struct CandidateReport {
  std::vector<Int> coeffs;
  std::vector<Rat> residuals;     // coeffs - t * d / |G|
  Int form_value;
  std::vector<size_t> tie_indices;
  bool tie_flagged = false;
};
CandidateReport nearest_integer_candidate(const DegreeProfile& profile, const Int& t);

struct MinimizationStats {
  unsigned long long nodes = 0;
  Int initial_radius;
};

struct MinimizationResult {
  Int minimum;
  std::vector<std::vector<Int>> minimizers;  // canonical, sorted
  MinimizationStats stats;
};

// The minimum of the form over integer vectors outside the degree line,
// with every canonical minimizer. Reduces the quotient Gram matrix, then
// enumerates within the nilpotent-difference radius |G| - d_k^2.
// Throws TrivialGroupError for the one-class profile.
MinimizationResult minimal_norm(const DegreeProfile& profile);

// Independent check: scan integer vectors with sum of squares at most
// `radius` directly on the definition, one representative per coordinate
// permutation within equal-degree blocks, and expand the minimizing orbits.
// No reduction and no form-shaped pruning.
MinimizationResult brute_force_minimum(const DegreeProfile& profile, const Int& radius);

}  // namespace minchar
