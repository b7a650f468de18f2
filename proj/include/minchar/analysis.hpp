#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minchar/catalog.hpp"
#include "minchar/chartab.hpp"
#include "minchar/minnorm.hpp"

namespace minchar {

enum class EqualityClass { Abelian, FrobeniusAbelianKernel, Strict };

struct Classification {
  EqualityClass kind = EqualityClass::Strict;
  // Set for the Frobenius case only.
  std::vector<size_t> kernel_class_indices;
  Int kernel_order = 0;
  Int complement_order = 0;
};

std::string to_string(const Classification& c);

// Table-level test of which side of the lower bound a group falls on:
// all degrees 1, or a proper nontrivial kernel-intersection subgroup K such
// that every character whose kernel misses K vanishes off K and has degree
// |G|/|K|, or neither. Throws NeedsFullTableError when given a bare profile
// downstream.
Classification classify_equality(const CharacterTable& table);
Classification classify_equality(const CatalogEntry& entry);

struct BoundReport {
  std::string name;
  Int group_order;
  size_t class_count = 0;
  Int max_degree;
  Int bound;            // |G| / d_k - 1
  Int minimum;          // m from the minimization result
  bool bound_holds = false;
  bool equality = false;
  bool class_bound_holds = false;  // m >= k - 1
  std::optional<bool> expected_match;   // against catalog annotation
  std::optional<bool> nilpotent_formula_holds;   // m == |G| - d_k^2
  std::optional<bool> center_bound_holds;        // m >= |G| - |G|/|Z|
  std::optional<Classification> classification;
  std::optional<bool> classification_consistent;  // equality iff not Strict
};

// Evaluate the degree-quotient lower bound and the attached expectations for
// one catalog entry and its minimization result.
BoundReport theorem1_report(const CatalogEntry& entry, const MinimizationResult& result);

// The canonical Frobenius witness: sum of the rows whose kernel does not
// contain K. Verifies value -1 on the non-identity classes of K and 0
// outside, and that its class sum of |theta|^2 is |K| - 1. Throws
// WitnessFailedError naming the first violating class.
struct WitnessReport {
  GeneralizedCharacter theta;
  Int sigma;
  bool form_matches_minimum = false;
};
WitnessReport frobenius_witness(const CharacterTable& table,
                                const std::vector<size_t>& kernel_classes, const Int& minimum);

// Structural facts about the minimizers that the bound argument predicts.
// The support/coefficient facts apply in the small-minimum regime
// m * d_k < |G|; the order identity |G| = d_k + r * d_k^2 additionally needs
// a nonlinear top degree. Neighbor optimality and the two-sided pairing
// bound are checked on every minimizer, skipping infeasible neighbors that
// land on the degree line.
struct ProofChecks {
  bool regime_applies = false;          // m * d_k < |G|
  std::optional<bool> coeffs_zero_one;  // all minimizer entries in {0,1}
  std::optional<bool> support_on_top_degrees;
  std::optional<bool> order_identity;   // |G| = d_k + r d_k^2, nonabelian equality only
  bool neighbors_optimal = true;        // Q(a -+ e_i) >= m off the degree line
  bool pairing_bound_holds = true;      // 2|(a,e_i)| <= |G| - d_i^2 when both
                                        // neighbors are feasible
  std::vector<std::string> failures;
};
ProofChecks minimizer_proof_checks(const DegreeProfile& profile,
                                   const MinimizationResult& result);

// Class fusion from a subgroup table into an ambient group table.
struct FusionData {
  std::string name;
  CharacterTable group;
  CharacterTable subgroup;
  std::vector<size_t> class_map;  // subgroup class -> group class
};

ValidationReport validate_fusion(const FusionData& fusion);

// Number of group rows whose values on the images of the subgroup's
// non-identity classes are not all zero.
Int kplus(const FusionData& fusion);

struct FusionReport {
  Int subgroup_order;
  Int max_subgroup_degree;
  Int kplus_value;
  Rat rhs;              // mu(1)(|H|-1)/(|H|-mu(1)) * max |C_G(h)|
  Int max_centralizer;
  bool holds = false;
  bool equality = false;
  Int counting_lhs;     // sum over h-classes of size_H * |C_G(image)|
  Rat counting_rhs;     // (|H|-1) + (k+ - 1)(|H|/mu(1) - 1)
  bool counting_holds = false;
};

// The centralizer-ratio upper bound on the number of group characters not
// vanishing identically off the identity on the subgroup, with its exact
// counting inequality. Throws InvalidFusionError on structural mismatch or
// when |H| equals the top subgroup degree.
FusionReport corollary3_check(const FusionData& fusion);

}  // namespace minchar
