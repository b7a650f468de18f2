#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minchar/analysis.hpp"
#include "minchar/catalog.hpp"
#include "minchar/io.hpp"
#include "minchar/minnorm.hpp"

namespace minchar {

struct SurveyRow {
  std::string name;
  Int group_order;
  size_t class_count = 0;
  Int max_degree;
  Int bound;
  Int minimum;
  bool equality = false;
  std::string classification;  // "abelian", "frobenius(|K|=n)", "strict", "-"
  std::string witness;         // "ok", "-", or "FAIL ..."
  std::string oracle;          // "ok", "skipped", or "FAIL ..."
  double wall_ms = 0.0;
};

// Everything computed for one catalog entry. `verdicts` lists the checks
// that failed; an empty list means the entry agrees with every prediction.
struct EntryReport {
  SurveyRow row;
  BoundReport bound;
  MinimizationResult result;
  ProofChecks proof;
  std::vector<std::string> verdicts;
};

struct SurveyResult {
  std::vector<EntryReport> entries;  // sorted by natural name order
  size_t failed = 0;                 // entries with at least one failed verdict
};

// Run the full pipeline on each entry: validation, minimization, the bound
// report, classification and witness when a table is present, the proof
// checks, and the direct-scan cross-check for orders up to oracle_limit.
SurveyResult run_survey(const std::vector<CatalogEntry>& entries, const Int& oracle_limit = 100);

// Tab-separated rows, one line per entry, preceded by a header. Identical
// bytes for identical inputs; timing never enters the text.
std::string survey_tsv(const SurveyResult& survey);

// Full report document for machine consumption.
Json survey_reports_json(const SurveyResult& survey);

// Human-oriented multi-line report for one entry.
std::string describe_entry(const EntryReport& report);

}  // namespace minchar
