// Command line front end: validate documents, minimize single entries,
// survey the whole catalog, and check fusion bounds.
//
// Exit codes: 0 success, 1 usage or input errors, 2 a computation finished
// but contradicted a predicted value.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "minchar/errors.hpp"
#include "minchar/io.hpp"
#include "minchar/survey.hpp"

namespace {

using namespace minchar;

CatalogEntry entry_from_document(const Document& doc, const std::string& path) {
  if (std::holds_alternative<CharacterTable>(doc)) {
    const auto& t = std::get<CharacterTable>(doc);
    return {t.name, t};
  }
  if (std::holds_alternative<DegreeProfile>(doc)) {
    const auto& p = std::get<DegreeProfile>(doc);
    return {p.name, p};
  }
  throw ParseError(path + ": expected a character table or degree profile");
}

int cmd_validate(const std::string& path) {
  Document doc = load_document(path);
  ValidationReport report;
  std::string what;
  if (std::holds_alternative<CharacterTable>(doc)) {
    report = validate_table(std::get<CharacterTable>(doc));
    what = "character table '" + std::get<CharacterTable>(doc).name + "'";
  } else if (std::holds_alternative<DegreeProfile>(doc)) {
    report = validate_profile(std::get<DegreeProfile>(doc));
    what = "degree profile '" + std::get<DegreeProfile>(doc).name + "'";
  } else {
    FusionData fusion = link_fusion(std::get<FusionDoc>(doc));
    report = validate_fusion(fusion);
    what = "fusion '" + fusion.name + "'";
  }
  if (report.ok()) {
    std::cout << what << ": ok\n";
    return 0;
  }
  std::cout << what << ": " << report.violations.size() << " violation(s)\n";
  for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
  return 1;
}

int cmd_minnorm(const std::string& path, const std::string& catalog_name, bool with_oracle,
                bool with_witness) {
  CatalogEntry entry = catalog_name.empty()
                           ? entry_from_document(load_document(path), path)
                           : resolve(catalog_name);
  SurveyResult survey = run_survey({entry}, with_oracle ? Int(1000000) : Int(-1));
  const EntryReport& report = survey.entries[0];
  std::cout << describe_entry(report);

  if (with_witness && report.row.witness == "-")
    std::cout << "witness: not applicable (classification is " << report.row.classification
              << ")\n";
  return survey.failed ? 2 : 0;
}

int cmd_survey(const std::string& out_path, const std::string& grid_path,
               const std::string& default_grid) {
  SurveyGrid grid = load_grid(grid_path.empty() ? default_grid : grid_path);
  SurveyResult survey = run_survey(standard_catalog(grid));

  const std::string tsv = survey_tsv(survey);
  if (out_path.empty()) {
    std::cout << tsv;
  } else {
    write_file(out_path, tsv);
    write_file(out_path + ".reports.json", survey_reports_json(survey).dump(2) + "\n");
  }

  double total_ms = 0;
  for (const EntryReport& r : survey.entries) total_ms += r.row.wall_ms;
  std::cerr << survey.entries.size() << " entries, " << survey.failed << " with failed checks, "
            << static_cast<long>(total_ms) << " ms\n";
  return survey.failed ? 2 : 0;
}

int cmd_cor3(const std::string& path) {
  Document doc = load_document(path);
  if (!std::holds_alternative<FusionDoc>(doc))
    throw ParseError(path + ": expected a fusion document");
  FusionData fusion = link_fusion(std::get<FusionDoc>(doc));
  FusionReport report = corollary3_check(fusion);
  std::cout << "fusion: " << fusion.name << "\n";
  std::cout << "subgroup order: " << report.subgroup_order.get_str() << "\n";
  std::cout << "top subgroup degree: " << report.max_subgroup_degree.get_str() << "\n";
  std::cout << "k+: " << report.kplus_value.get_str() << "\n";
  std::cout << "max centralizer: " << report.max_centralizer.get_str() << "\n";
  std::cout << "bound: " << report.rhs.get_str() << "\n";
  std::cout << "holds: " << (report.holds ? "yes" : "no")
            << (report.equality ? " (equality)" : "") << "\n";
  std::cout << "counting: " << report.counting_lhs.get_str() << " >= "
            << report.counting_rhs.get_str() << " "
            << (report.counting_holds ? "ok" : "FAIL") << "\n";
  return report.holds && report.counting_holds ? 0 : 2;
}

int cmd_catalog_list(const std::string& grid_path, const std::string& default_grid) {
  SurveyGrid grid = load_grid(grid_path.empty() ? default_grid : grid_path);
  std::vector<CatalogEntry> entries = standard_catalog(grid);
  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return natural_less(a.name, b.name);
  });
  for (const CatalogEntry& entry : entries) {
    const DegreeProfile profile = entry.profile();
    std::cout << entry.name << "\t|G|=" << profile.group_order.get_str() << "\tk="
              << profile.k() << "\t" << (entry.has_table() ? "table" : "profile") << "\n";
  }
  return 0;
}

int cmd_catalog_emit(const std::string& name, const std::string& out_path) {
  CatalogEntry entry = resolve(name);
  const std::string text = entry_to_json(entry).dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimal norms of generalized characters"};
  app.require_subcommand(1);

  std::string default_grid = "data/survey_grid.json";
  app.add_option("--default-grid", default_grid, "fallback grid config path");

  auto* validate = app.add_subcommand("validate", "check a document's invariants");
  std::string validate_path;
  validate->add_option("path", validate_path, "JSON document")->required();

  auto* minnorm = app.add_subcommand("minnorm", "minimize the norm form for one entry");
  std::string minnorm_path, minnorm_catalog;
  bool minnorm_oracle = false, minnorm_witness = false;
  minnorm->add_option("path", minnorm_path, "table or profile JSON");
  minnorm->add_option("--catalog", minnorm_catalog, "catalog name instead of a file");
  minnorm->add_flag("--oracle", minnorm_oracle, "cross-check with the direct scan");
  minnorm->add_flag("--witness", minnorm_witness, "report on the kernel witness");

  auto* survey = app.add_subcommand("survey", "run the whole catalog");
  std::string survey_out, survey_grid;
  survey->add_option("--out", survey_out, "write TSV here plus .reports.json beside it");
  survey->add_option("--grid", survey_grid, "grid config (JSON)");

  auto* cor3 = app.add_subcommand("cor3", "check the fusion character-count bound");
  std::string cor3_path;
  cor3->add_option("path", cor3_path, "fusion JSON")->required();

  auto* catalog = app.add_subcommand("catalog", "list or emit catalog entries");
  auto* list = catalog->add_subcommand("list", "names and sizes");
  std::string list_grid;
  list->add_option("--grid", list_grid, "grid config (JSON)");
  auto* emit = catalog->add_subcommand("emit", "print one entry as JSON");
  std::string emit_name, emit_out;
  emit->add_option("name", emit_name, "catalog name")->required();
  emit->add_option("--out", emit_out, "output path");
  catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(validate_path);
    if (*minnorm) {
      if (minnorm_path.empty() == minnorm_catalog.empty()) {
        std::cerr << "minnorm needs exactly one of a path or --catalog\n";
        return 1;
      }
      return cmd_minnorm(minnorm_path, minnorm_catalog, minnorm_oracle, minnorm_witness);
    }
    if (*survey) return cmd_survey(survey_out, survey_grid, default_grid);
    if (*cor3) return cmd_cor3(cor3_path);
    if (*catalog) {
      if (*list) return cmd_catalog_list(list_grid, default_grid);
      if (*emit) return cmd_catalog_emit(emit_name, emit_out);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
