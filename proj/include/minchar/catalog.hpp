#pragma once

#include <string>
#include <variant>
#include <vector>

#include "minchar/chartab.hpp"

namespace minchar {

// One catalog entry: either a full table or a degree-only profile.
struct CatalogEntry {
  std::string name;
  std::variant<CharacterTable, DegreeProfile> data;

  bool has_table() const { return std::holds_alternative<CharacterTable>(data); }
  const CharacterTable& table() const { return std::get<CharacterTable>(data); }
  const DegreeProfile& profile_only() const { return std::get<DegreeProfile>(data); }
  DegreeProfile profile() const;
  const Annotations& notes() const;
};

// Cyclic group of order n, one class per element, values zeta_n^(jm).
CharacterTable cyclic(long n);

// Dihedral group of order 2n for n >= 3. Odd n: two linear characters and
// (n-1)/2 two-dimensional rows; even n: four linear characters, two
// reflection classes, and n/2-1 two-dimensional rows.
CharacterTable dihedral(long n);

// The metacyclic Frobenius group of order p*q: cyclic kernel of prime order
// p, cyclic complement of order q dividing p-1 acting with q-element orbits.
// q linear characters lifted from the complement and (p-1)/q induced
// characters of degree q vanishing off the kernel.
CharacterTable frobenius_metacyclic(long p, long q);

// Outer product table: classes are pairs, values multiply, rows re-sorted by
// degree, cyclotomic orders combined by lcm.
CharacterTable direct_product(const CharacterTable& a, const CharacterTable& b);

// Degree profile of an extraspecial group of order p^3: p^2 linear
// characters and p-1 of degree p. Profile only; no value matrix here.
DegreeProfile extraspecial_profile(long p);

// Hard-coded small tables: "s3", "s4", "a4", "q8".
CharacterTable builtin(const std::string& name);

// Resolve a catalog name: "cyclic(6)" or "c6", "dihedral(5)" or "d5",
// "frobenius(7,3)", "extraspecial(3)" or "es3", builtin names, "v4", and
// x-joined products such as "c2xs3".
CatalogEntry resolve(const std::string& name);

// The survey parameter grid, normally loaded from a config file.
struct SurveyGrid {
  std::vector<long> cyclic;
  std::vector<long> dihedral;
  std::vector<std::pair<long, long>> frobenius;
  std::vector<long> extraspecial;
  std::vector<std::string> products;
  std::vector<std::string> builtins;
};

// All entries of the grid, in grid order.
std::vector<CatalogEntry> standard_catalog(const SurveyGrid& grid);

// Numeric-aware name ordering: digit runs compare by value, so "cyclic(9)"
// sorts before "cyclic(10)".
bool natural_less(const std::string& a, const std::string& b);

}  // namespace minchar
