#include "minchar/survey.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "minchar/errors.hpp"

namespace minchar {

namespace {

std::string join_coeffs(const std::vector<Int>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].get_str();
  }
  out << ")";
  return out.str();
}

EntryReport survey_entry(const CatalogEntry& entry, const Int& oracle_limit) {
  const auto start = std::chrono::steady_clock::now();
  EntryReport report;
  report.row.name = entry.name;

  if (entry.has_table()) {
    ValidationReport valid = validate_table(entry.table());
    for (const std::string& v : valid.violations)
      report.verdicts.push_back("table validation: " + v);
  } else {
    ValidationReport valid = validate_profile(entry.profile_only());
    for (const std::string& v : valid.violations)
      report.verdicts.push_back("profile validation: " + v);
  }

  const DegreeProfile profile = entry.profile();
  report.result = minimal_norm(profile);
  report.bound = theorem1_report(entry, report.result);
  report.proof = minimizer_proof_checks(profile, report.result);

  const BoundReport& b = report.bound;
  report.row.group_order = b.group_order;
  report.row.class_count = b.class_count;
  report.row.max_degree = b.max_degree;
  report.row.bound = b.bound;
  report.row.minimum = b.minimum;
  report.row.equality = b.equality;
  report.row.classification = b.classification ? to_string(*b.classification) : "-";

  if (!b.bound_holds) report.verdicts.push_back("degree bound fails");
  if (!b.class_bound_holds) report.verdicts.push_back("class-count bound fails");
  if (b.expected_match && !*b.expected_match)
    report.verdicts.push_back("minimum differs from the cataloged value");
  if (b.nilpotent_formula_holds && !*b.nilpotent_formula_holds)
    report.verdicts.push_back("nilpotent difference formula fails");
  if (b.center_bound_holds && !*b.center_bound_holds)
    report.verdicts.push_back("center index bound fails");
  if (b.classification_consistent && !*b.classification_consistent)
    report.verdicts.push_back("classification disagrees with equality");
  for (const std::string& f : report.proof.failures)
    report.verdicts.push_back("proof check: " + f);

  report.row.witness = "-";
  if (b.classification && b.classification->kind == EqualityClass::FrobeniusAbelianKernel) {
    try {
      WitnessReport w =
          frobenius_witness(entry.table(), b.classification->kernel_class_indices, b.minimum);
      report.row.witness = w.form_matches_minimum ? "ok" : "FAIL form value";
      if (!w.form_matches_minimum)
        report.verdicts.push_back("witness form value differs from the minimum");
    } catch (const WitnessFailedError& e) {
      report.row.witness = "FAIL";
      report.verdicts.push_back(std::string("witness: ") + e.what());
    }
  }

  report.row.oracle = "skipped";
  if (profile.group_order <= oracle_limit) {
    MinimizationResult direct = brute_force_minimum(profile, report.result.stats.initial_radius);
    const bool same = direct.minimum == report.result.minimum &&
                      direct.minimizers == report.result.minimizers;
    report.row.oracle = same ? "ok" : "FAIL";
    if (!same) report.verdicts.push_back("direct scan disagrees with enumeration");
  }

  const auto stop = std::chrono::steady_clock::now();
  report.row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace

SurveyResult run_survey(const std::vector<CatalogEntry>& entries, const Int& oracle_limit) {
  SurveyResult survey;
  for (const CatalogEntry& entry : entries)
    survey.entries.push_back(survey_entry(entry, oracle_limit));
  std::sort(survey.entries.begin(), survey.entries.end(),
            [](const EntryReport& a, const EntryReport& b) {
              return natural_less(a.row.name, b.row.name);
            });
  for (const EntryReport& r : survey.entries)
    if (!r.verdicts.empty()) ++survey.failed;
  return survey;
}

std::string survey_tsv(const SurveyResult& survey) {
  std::ostringstream out;
  out << "name\torder\tclasses\tmax_degree\tbound\tm\tequality\tclassification\twitness\toracle\n";
  for (const EntryReport& r : survey.entries) {
    const SurveyRow& row = r.row;
    out << row.name << "\t" << row.group_order.get_str() << "\t" << row.class_count << "\t"
        << row.max_degree.get_str() << "\t" << row.bound.get_str() << "\t"
        << row.minimum.get_str() << "\t" << (row.equality ? "yes" : "no") << "\t"
        << row.classification << "\t" << row.witness << "\t" << row.oracle << "\n";
  }
  return out.str();
}

Json survey_reports_json(const SurveyResult& survey) {
  Json entries = Json::array();
  for (const EntryReport& r : survey.entries) {
    Json e;
    e["name"] = r.row.name;
    e["group_order"] = r.row.group_order.get_str();
    e["classes"] = r.row.class_count;
    e["max_degree"] = r.row.max_degree.get_str();
    e["bound"] = r.row.bound.get_str();
    e["minimum"] = r.row.minimum.get_str();
    e["equality"] = r.row.equality;
    e["classification"] = r.row.classification;
    e["witness"] = r.row.witness;
    e["oracle"] = r.row.oracle;
    Json mins = Json::array();
    for (const auto& v : r.result.minimizers) {
      Json m = Json::array();
      for (const Int& c : v) m.push_back(c.get_str());
      mins.push_back(std::move(m));
    }
    e["minimizers"] = std::move(mins);
    e["nodes"] = r.result.stats.nodes;
    e["initial_radius"] = r.result.stats.initial_radius.get_str();
    e["verdicts"] = r.verdicts;
    entries.push_back(std::move(e));
  }
  Json j;
  j["entries"] = std::move(entries);
  j["failed"] = survey.failed;
  return j;
}

std::string describe_entry(const EntryReport& r) {
  std::ostringstream out;
  const BoundReport& b = r.bound;
  out << "name: " << r.row.name << "\n";
  out << "group order: " << b.group_order.get_str() << "\n";
  out << "classes: " << b.class_count << "\n";
  out << "max degree: " << b.max_degree.get_str() << "\n";
  out << "degree bound: " << b.bound.get_str() << "\n";
  out << "m: " << b.minimum.get_str() << "\n";
  out << "bound holds: " << (b.bound_holds ? "yes" : "no") << "\n";
  out << "equality: " << (b.equality ? "yes" : "no") << "\n";
  out << "classification: " << r.row.classification << "\n";
  if (b.nilpotent_formula_holds)
    out << "nilpotent formula: " << (*b.nilpotent_formula_holds ? "ok" : "FAIL") << "\n";
  if (b.center_bound_holds)
    out << "center bound: " << (*b.center_bound_holds ? "ok" : "FAIL") << "\n";
  out << "witness: " << r.row.witness << "\n";
  out << "oracle: " << r.row.oracle << "\n";
  out << "minimizers (" << r.result.minimizers.size() << "):\n";
  for (const auto& v : r.result.minimizers) out << "  " << join_coeffs(v) << "\n";
  out << "nodes: " << r.result.stats.nodes << "\n";
  if (!r.verdicts.empty()) {
    out << "failed checks:\n";
    for (const std::string& v : r.verdicts) out << "  " << v << "\n";
  }
  return out.str();
}

}  // namespace minchar
