#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minchar/cyclotomic.hpp"
#include "minchar/numeric.hpp"

namespace minchar {

// Optional expectations a catalog constructor attaches to its output.
struct Annotations {
  std::optional<bool> abelian;
  std::optional<bool> nilpotent;
  std::optional<Int> expected_m;
  std::string provenance;  // where expected_m comes from; empty when unset
  std::optional<Int> frobenius_kernel_order;
};

// Group order plus the multiset of irreducible degrees, weakly increasing.
// Enough data for the quadratic form; value-level operations need the table.
struct DegreeProfile {
  std::string name;
  Int group_order;
  std::vector<Int> degrees;
  Annotations notes;

  size_t k() const { return degrees.size(); }
  const Int& max_degree() const { return degrees.back(); }
};

struct ClassInfo {
  std::string label;
  Int size;
};

// Full character table: rows are irreducible characters sorted by degree with
// the trivial character first, columns are conjugacy classes with the
// identity class at index 0. All values share one cyclotomic order.
struct CharacterTable {
  std::string name;
  Int group_order;
  long cyclotomic_order = 1;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Cyclotomic>> values;
  Annotations notes;

  size_t k() const { return classes.size(); }
  const Cyclotomic& value(size_t chi, size_t cls) const { return values[chi][cls]; }
  Int degree(size_t chi) const { return values[chi][0].as_integer(); }
  DegreeProfile degree_profile() const;
};

// Integer combination of the rows of a table, indexed like the rows.
struct GeneralizedCharacter {
  std::vector<Int> coeffs;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural checks on a bare profile: first degree 1, weakly increasing,
// each degree positive and dividing the order, degree squares summing to the
// order.
ValidationReport validate_profile(const DegreeProfile& profile);

// Full exact table check: profile invariants of the degree row, identity
// class of size 1 at index 0, class sizes dividing and summing to the order,
// trivial character first, and both exact orthogonality relations.
ValidationReport validate_table(const CharacterTable& table);

// Value of a generalized character at a class column.
Cyclotomic value_at(const CharacterTable& table, const GeneralizedCharacter& theta, size_t cls);

// Sum of class_size * |theta(c)|^2 over the non-identity classes, as an
// exact integer.
Int sigma_sharp(const CharacterTable& table, const GeneralizedCharacter& theta);

// |G| * (a . b) - (a . d)(b . d) from coefficients alone.
Int paren_form(const DegreeProfile& profile, const std::vector<Int>& a, const std::vector<Int>& b);

// The same bilinear form evaluated from character values; agrees with
// paren_form on any valid table.
Int paren_form_from_values(const CharacterTable& table, const GeneralizedCharacter& alpha,
                           const GeneralizedCharacter& beta);

// The regular character: coefficients equal to the degrees.
GeneralizedCharacter regular_character(const DegreeProfile& profile);

// Classes where row chi takes its degree value; a normal subgroup as a
// sorted list of class indices.
std::vector<size_t> kernel_classes(const CharacterTable& table, size_t chi);

struct NormalSubgroupView {
  std::vector<size_t> classes;  // sorted, always contains 0
  Int order;                    // sum of the class sizes
};

// Intersection of the kernels of the given rows.
NormalSubgroupView kernel_intersection(const CharacterTable& table,
                                       const std::vector<size_t>& rows);

// Number of elements whose class has size 1.
Int center_order(const CharacterTable& table);

}  // namespace minchar
