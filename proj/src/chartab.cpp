#include "minchar/chartab.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "minchar/errors.hpp"

namespace minchar {

namespace {

std::string at(const char* what, size_t i) {
  std::ostringstream out;
  out << what << "[" << i << "]";
  return out.str();
}

std::string at2(const char* what, size_t i, size_t j) {
  std::ostringstream out;
  out << what << "(" << i << "," << j << ")";
  return out.str();
}

}  // namespace

DegreeProfile CharacterTable::degree_profile() const {
  DegreeProfile profile;
  profile.name = name;
  profile.group_order = group_order;
  profile.degrees.reserve(k());
  for (size_t i = 0; i < k(); ++i) profile.degrees.push_back(degree(i));
  profile.notes = notes;
  return profile;
}

ValidationReport validate_profile(const DegreeProfile& profile) {
  ValidationReport report;
  auto& bad = report.violations;
  if (profile.group_order < 1) bad.push_back("group order must be positive");
  if (profile.degrees.empty()) {
    bad.push_back("no degrees");
    return report;
  }
  if (profile.degrees.front() != 1) bad.push_back("first degree must be 1");
  Int sum_squares = 0;
  for (size_t i = 0; i < profile.degrees.size(); ++i) {
    const Int& d = profile.degrees[i];
    if (d < 1) bad.push_back(at("degree", i) + " must be positive");
    if (i > 0 && d < profile.degrees[i - 1])
      bad.push_back(at("degree", i) + " breaks the weakly increasing order");
    if (d >= 1 && profile.group_order % d != 0)
      bad.push_back(at("degree", i) + " does not divide the group order");
    sum_squares += d * d;
  }
  if (sum_squares != profile.group_order)
    bad.push_back("degree squares sum to " + sum_squares.get_str() + ", not the group order");
  return report;
}

ValidationReport validate_table(const CharacterTable& table) {
  ValidationReport report;
  auto& bad = report.violations;
  const size_t k = table.k();
  if (k == 0) {
    bad.push_back("no classes");
    return report;
  }
  if (table.cyclotomic_order < 1) bad.push_back("cyclotomic order must be positive");
  if (table.values.size() != k) {
    bad.push_back("character count differs from class count");
    return report;
  }
  for (size_t i = 0; i < k; ++i)
    if (table.values[i].size() != k) {
      bad.push_back(at("row", i) + " has the wrong length");
      return report;
    }

  if (table.classes[0].size != 1) bad.push_back("identity class must have size 1");
  Int size_sum = 0;
  for (size_t c = 0; c < k; ++c) {
    const Int& s = table.classes[c].size;
    if (s < 1) bad.push_back(at("class", c) + " must have positive size");
    if (s >= 1 && table.group_order % s != 0)
      bad.push_back(at("class", c) + " size does not divide the group order");
    size_sum += s;
  }
  if (size_sum != table.group_order)
    bad.push_back("class sizes sum to " + size_sum.get_str() + ", not the group order");

  // Degree column: integer values forming a valid profile, trivial row first.
  std::vector<Int> degrees;
  for (size_t i = 0; i < k; ++i) {
    const Cyclotomic& v = table.values[i][0];
    if (!v.is_rational()) {
      bad.push_back(at("row", i) + " has a non-integer degree");
      return report;
    }
    degrees.push_back(v.as_integer());
  }
  DegreeProfile profile{table.name, table.group_order, degrees, {}};
  for (std::string& v : validate_profile(profile).violations) bad.push_back(std::move(v));
  for (size_t c = 0; c < k; ++c)
    if (table.values[0][c] != Cyclotomic(1)) {
      bad.push_back("first row is not the trivial character");
      break;
    }

  // Row orthogonality: sum of size_c x_i(c) conj(x_j(c)) = delta_ij |G|.
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      Cyclotomic sum = 0;
      for (size_t c = 0; c < k; ++c)
        sum += Cyclotomic(table.classes[c].size) * table.values[i][c] * table.values[j][c].conj();
      const Cyclotomic expected = (i == j) ? Cyclotomic(table.group_order) : Cyclotomic(0);
      if (sum != expected) bad.push_back(at2("row orthogonality", i, j) + " fails");
    }

  // Column orthogonality: sum over rows of x(c) conj(x(c')) = delta |G|/|c|.
  for (size_t c = 0; c < k; ++c)
    for (size_t cp = c; cp < k; ++cp) {
      Cyclotomic sum = 0;
      for (size_t i = 0; i < k; ++i)
        sum += table.values[i][c] * table.values[i][cp].conj();
      Cyclotomic expected = 0;
      if (c == cp && table.classes[c].size >= 1 && table.group_order % table.classes[c].size == 0)
        expected = Cyclotomic(Int(table.group_order / table.classes[c].size));
      if (sum != expected) bad.push_back(at2("column orthogonality", c, cp) + " fails");
    }

  return report;
}

Cyclotomic value_at(const CharacterTable& table, const GeneralizedCharacter& theta, size_t cls) {
  if (theta.coeffs.size() != table.k())
    throw Error("generalized character has wrong coefficient count");
  Cyclotomic sum = 0;
  for (size_t i = 0; i < table.k(); ++i) {
    if (theta.coeffs[i] == 0) continue;
    sum += Cyclotomic(theta.coeffs[i]) * table.values[i][cls];
  }
  return sum;
}

Int sigma_sharp(const CharacterTable& table, const GeneralizedCharacter& theta) {
  Cyclotomic sum = 0;
  for (size_t c = 1; c < table.k(); ++c) {
    Cyclotomic v = value_at(table, theta, c);
    sum += Cyclotomic(table.classes[c].size) * v * v.conj();
  }
  return sum.as_integer();
}

Int paren_form(const DegreeProfile& profile, const std::vector<Int>& a,
               const std::vector<Int>& b) {
  if (a.size() != profile.k() || b.size() != profile.k())
    throw Error("coefficient vectors must match the profile length");
  Int dot = 0, ad = 0, bd = 0;
  for (size_t i = 0; i < profile.k(); ++i) {
    dot += a[i] * b[i];
    ad += a[i] * profile.degrees[i];
    bd += b[i] * profile.degrees[i];
  }
  return profile.group_order * dot - ad * bd;
}

Int paren_form_from_values(const CharacterTable& table, const GeneralizedCharacter& alpha,
                           const GeneralizedCharacter& beta) {
  // |G| <alpha, beta> - alpha(1) beta(1), with the inner product expanded as
  // an exact class sum.
  Cyclotomic sum = 0;
  for (size_t c = 0; c < table.k(); ++c) {
    Cyclotomic va = value_at(table, alpha, c);
    Cyclotomic vb = value_at(table, beta, c);
    sum += Cyclotomic(table.classes[c].size) * va * vb.conj();
  }
  sum -= value_at(table, alpha, 0) * value_at(table, beta, 0);
  return sum.as_integer();
}

GeneralizedCharacter regular_character(const DegreeProfile& profile) {
  return GeneralizedCharacter{profile.degrees};
}

std::vector<size_t> kernel_classes(const CharacterTable& table, size_t chi) {
  std::vector<size_t> out;
  const Cyclotomic& deg = table.values[chi][0];
  for (size_t c = 0; c < table.k(); ++c)
    if (table.values[chi][c] == deg) out.push_back(c);
  return out;
}

NormalSubgroupView kernel_intersection(const CharacterTable& table,
                                       const std::vector<size_t>& rows) {
  std::set<size_t> common;
  for (size_t c = 0; c < table.k(); ++c) common.insert(c);
  for (size_t chi : rows) {
    if (chi >= table.k()) throw Error("character index out of range");
    std::vector<size_t> ker = kernel_classes(table, chi);
    std::set<size_t> keep(ker.begin(), ker.end());
    for (auto it = common.begin(); it != common.end();)
      it = keep.count(*it) ? std::next(it) : common.erase(it);
  }
  NormalSubgroupView view;
  view.order = 0;
  for (size_t c : common) {
    view.classes.push_back(c);
    view.order += table.classes[c].size;
  }
  return view;
}

Int center_order(const CharacterTable& table) {
  Int count = 0;
  for (const ClassInfo& cls : table.classes)
    if (cls.size == 1) count += 1;
  return count;
}

}  // namespace minchar
