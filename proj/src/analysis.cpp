#include "minchar/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "minchar/errors.hpp"

namespace minchar {

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case EqualityClass::Abelian:
      return "abelian";
    case EqualityClass::FrobeniusAbelianKernel:
      return "frobenius(|K|=" + c.kernel_order.get_str() + ")";
    case EqualityClass::Strict:
      return "strict";
  }
  return "?";
}

Classification classify_equality(const CharacterTable& table) {
  const size_t k = table.k();
  if (k > 64) throw Error("classification supports at most 64 classes");

  bool all_linear = true;
  for (size_t i = 0; i < k; ++i)
    if (table.degree(i) != 1) {
      all_linear = false;
      break;
    }
  if (all_linear) {
    Classification c;
    c.kind = EqualityClass::Abelian;
    return c;
  }

  // Candidate normal subgroups: the intersection closure of the row kernels.
  std::vector<uint64_t> kernels(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t c : kernel_classes(table, i)) kernels[i] |= uint64_t(1) << c;

  std::set<uint64_t> closure(kernels.begin(), kernels.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<uint64_t> members(closure.begin(), closure.end());
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        if (closure.insert(members[i] & members[j]).second) grew = true;
  }

  auto subgroup_order = [&](uint64_t mask) {
    Int order = 0;
    for (size_t c = 0; c < k; ++c)
      if (mask & (uint64_t(1) << c)) order += table.classes[c].size;
    return order;
  };

  const uint64_t everything = (k == 64) ? ~uint64_t(0) : ((uint64_t(1) << k) - 1);
  std::vector<std::pair<Int, uint64_t>> candidates;
  for (uint64_t mask : closure) {
    if (mask == everything || mask == 1) continue;  // proper and nontrivial
    candidates.emplace_back(subgroup_order(mask), mask);
  }
  std::sort(candidates.begin(), candidates.end());

  for (const auto& [order, mask] : candidates) {
    if (table.group_order % order != 0) continue;
    const Int index = table.group_order / order;
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i) {
      if ((kernels[i] & mask) == mask) continue;  // kernel contains K
      if (table.degree(i) != index) {
        ok = false;
        break;
      }
      for (size_t c = 0; c < k; ++c) {
        if (mask & (uint64_t(1) << c)) continue;
        if (!table.values[i][c].is_zero()) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    Classification c;
    c.kind = EqualityClass::FrobeniusAbelianKernel;
    for (size_t cls = 0; cls < k; ++cls)
      if (mask & (uint64_t(1) << cls)) c.kernel_class_indices.push_back(cls);
    c.kernel_order = order;
    c.complement_order = index;
    return c;
  }
  return Classification{};
}

Classification classify_equality(const CatalogEntry& entry) {
  if (!entry.has_table())
    throw NeedsFullTableError("classification of '" + entry.name +
                              "' needs character values, not just degrees");
  return classify_equality(entry.table());
}

BoundReport theorem1_report(const CatalogEntry& entry, const MinimizationResult& result) {
  const DegreeProfile profile = entry.profile();
  BoundReport report;
  report.name = entry.name;
  report.group_order = profile.group_order;
  report.class_count = profile.k();
  report.max_degree = profile.max_degree();

  if (profile.group_order % report.max_degree != 0)
    throw DegreeNotDividingError("top degree does not divide the order of '" + entry.name + "'");
  report.bound = profile.group_order / report.max_degree - 1;
  report.minimum = result.minimum;
  report.bound_holds = result.minimum >= report.bound;
  report.equality = result.minimum == report.bound;
  report.class_bound_holds = result.minimum >= Int(profile.k()) - 1;

  const Annotations& notes = entry.notes();
  if (notes.expected_m) report.expected_match = (result.minimum == *notes.expected_m);
  if (notes.nilpotent && *notes.nilpotent) {
    const Int predicted = profile.group_order - report.max_degree * report.max_degree;
    report.nilpotent_formula_holds = (result.minimum == predicted);
  }
  if (entry.has_table()) {
    const CharacterTable& table = entry.table();
    if (notes.nilpotent && *notes.nilpotent) {
      // m >= |G| - [G : Z], compared exactly in rationals.
      const Rat index = Rat(table.group_order) / Rat(center_order(table));
      report.center_bound_holds = (Rat(result.minimum) >= Rat(table.group_order) - index);
    }
    report.classification = classify_equality(table);
    const bool predicted_equality =
        report.classification->kind != EqualityClass::Strict;
    report.classification_consistent = (predicted_equality == report.equality);
  }
  return report;
}

WitnessReport frobenius_witness(const CharacterTable& table,
                                const std::vector<size_t>& kernel, const Int& minimum) {
  const size_t k = table.k();
  std::set<size_t> in_kernel(kernel.begin(), kernel.end());
  if (!in_kernel.count(0)) throw WitnessFailedError("kernel must contain the identity class");

  WitnessReport report;
  report.theta.coeffs.assign(k, 0);
  for (size_t i = 0; i < k; ++i) {
    // Include the row unless its kernel contains every class of K.
    bool contains = true;
    std::vector<size_t> ker = kernel_classes(table, i);
    std::set<size_t> ker_set(ker.begin(), ker.end());
    for (size_t c : kernel)
      if (!ker_set.count(c)) {
        contains = false;
        break;
      }
    if (!contains) report.theta.coeffs[i] = 1;
  }

  Int kernel_order = 0;
  for (size_t c : kernel) kernel_order += table.classes[c].size;
  for (size_t c = 1; c < k; ++c) {
    const Cyclotomic v = value_at(table, report.theta, c);
    const Cyclotomic expected = in_kernel.count(c) ? Cyclotomic(-1) : Cyclotomic(0);
    if (v != expected)
      throw WitnessFailedError("witness value at class '" + table.classes[c].label +
                               "' is " + v.str() + ", expected " + expected.str());
  }
  report.sigma = sigma_sharp(table, report.theta);
  if (report.sigma != kernel_order - 1)
    throw WitnessFailedError("witness weight " + report.sigma.get_str() +
                             " differs from kernel order minus one");
  report.form_matches_minimum =
      quadratic_form_value(table.degree_profile(), report.theta.coeffs) == minimum;
  return report;
}

ProofChecks minimizer_proof_checks(const DegreeProfile& profile,
                                   const MinimizationResult& result) {
  ProofChecks checks;
  const Int& n = profile.group_order;
  const Int& dk = profile.max_degree();
  const size_t k = profile.k();
  checks.regime_applies = result.minimum * dk < n;

  // First index of the top-degree block.
  size_t top_start = k;
  while (top_start > 0 && profile.degrees[top_start - 1] == dk) --top_start;

  auto on_line = [&](const std::vector<Int>& v) {
    // v is a multiple of the degrees iff v == v_0 * d (first degree is 1).
    for (size_t i = 0; i < k; ++i)
      if (v[i] != v[0] * profile.degrees[i]) return false;
    return true;
  };

  if (checks.regime_applies) {
    bool zero_one = true, support_top = true;
    for (const std::vector<Int>& a : result.minimizers)
      for (size_t i = 0; i < k; ++i) {
        if (a[i] != 0 && a[i] != 1) zero_one = false;
        if (a[i] != 0 && i < top_start) support_top = false;
      }
    checks.coeffs_zero_one = zero_one;
    checks.support_on_top_degrees = support_top;
    if (!zero_one) checks.failures.push_back("minimizer entries leave {0,1}");
    if (!support_top) checks.failures.push_back("minimizer support leaves the top-degree block");

    const bool equality = (result.minimum == n / dk - 1);
    if (equality && dk > 1) {
      bool identity_holds = true;
      for (const std::vector<Int>& a : result.minimizers) {
        Int r = 0;
        for (const Int& v : a) r += (v != 0) ? 1 : 0;
        if (n != dk + r * dk * dk) identity_holds = false;
      }
      checks.order_identity = identity_holds;
      if (!identity_holds)
        checks.failures.push_back("support count breaks the order identity");
    }
  }

  for (const std::vector<Int>& a : result.minimizers) {
    for (size_t i = 0; i < k; ++i) {
      int feasible = 0;
      for (int sgn : {+1, -1}) {
        std::vector<Int> b = a;
        b[i] -= sgn;
        if (on_line(b)) continue;
        ++feasible;
        if (quadratic_form_value(profile, b) < result.minimum) {
          checks.neighbors_optimal = false;
          std::ostringstream msg;
          msg << "neighbor at index " << i << " beats the minimum";
          checks.failures.push_back(msg.str());
        }
      }
      if (feasible == 2) {
        std::vector<Int> e(k, 0);
        e[i] = 1;
        const Int pairing = paren_form(profile, a, e);
        if (2 * abs(pairing) > n - profile.degrees[i] * profile.degrees[i]) {
          checks.pairing_bound_holds = false;
          std::ostringstream msg;
          msg << "pairing bound fails at index " << i;
          checks.failures.push_back(msg.str());
        }
      }
    }
  }
  return checks;
}

ValidationReport validate_fusion(const FusionData& fusion) {
  ValidationReport report;
  auto& bad = report.violations;
  for (std::string& v : validate_table(fusion.group).violations)
    bad.push_back("group: " + std::move(v));
  for (std::string& v : validate_table(fusion.subgroup).violations)
    bad.push_back("subgroup: " + std::move(v));
  if (fusion.class_map.size() != fusion.subgroup.k()) {
    bad.push_back("class map length differs from the subgroup class count");
    return report;
  }
  if (!fusion.class_map.empty() && fusion.class_map[0] != 0)
    bad.push_back("identity must map to the identity class");
  for (size_t c = 0; c < fusion.class_map.size(); ++c)
    if (fusion.class_map[c] >= fusion.group.k()) {
      bad.push_back("class map target out of range");
      return report;
    }
  if (fusion.group.group_order % fusion.subgroup.group_order != 0)
    bad.push_back("subgroup order does not divide the group order");
  return report;
}

Int kplus(const FusionData& fusion) {
  Int count = 0;
  for (size_t i = 0; i < fusion.group.k(); ++i) {
    bool nonzero = false;
    for (size_t c = 1; c < fusion.subgroup.k(); ++c)
      if (!fusion.group.values[i][fusion.class_map[c]].is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) count += 1;
  }
  return count;
}

FusionReport corollary3_check(const FusionData& fusion) {
  ValidationReport valid = validate_fusion(fusion);
  if (!valid.ok()) {
    std::string msg = "fusion '" + fusion.name + "' is inconsistent:";
    for (const std::string& v : valid.violations) msg += " " + v + ";";
    throw InvalidFusionError(msg);
  }

  FusionReport report;
  const Int& h = fusion.subgroup.group_order;
  report.subgroup_order = h;
  report.max_subgroup_degree = fusion.subgroup.degree(fusion.subgroup.k() - 1);
  const Int& mu = report.max_subgroup_degree;
  if (h == mu)
    throw InvalidFusionError("top subgroup degree equals the subgroup order in '" +
                             fusion.name + "'");

  report.max_centralizer = 0;
  report.counting_lhs = 0;
  for (size_t c = 1; c < fusion.subgroup.k(); ++c) {
    const Int& class_size = fusion.group.classes[fusion.class_map[c]].size;
    const Int centralizer = fusion.group.group_order / class_size;
    report.max_centralizer = std::max(report.max_centralizer, centralizer);
    report.counting_lhs += fusion.subgroup.classes[c].size * centralizer;
  }

  report.kplus_value = kplus(fusion);
  report.rhs = Rat(mu * (h - 1)) / Rat(h - mu) * Rat(report.max_centralizer);
  report.holds = Rat(report.kplus_value) <= report.rhs;
  report.equality = Rat(report.kplus_value) == report.rhs;
  report.counting_rhs =
      Rat(h - 1) + Rat(report.kplus_value - 1) * (Rat(h) / Rat(mu) - 1);
  report.counting_holds = Rat(report.counting_lhs) >= report.counting_rhs;
  return report;
}

}  // namespace minchar
