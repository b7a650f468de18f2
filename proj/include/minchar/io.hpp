#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "minchar/analysis.hpp"
#include "minchar/catalog.hpp"
#include "minchar/chartab.hpp"

namespace minchar {

using Json = nlohmann::json;

// A fusion document names its two tables by catalog name and lists
// subgroup-class to group-class index pairs.
struct FusionDoc {
  std::string name;
  std::string group;
  std::string subgroup;
  std::vector<std::pair<size_t, size_t>> class_map;
};

using Document = std::variant<CharacterTable, DegreeProfile, FusionDoc>;

// Parse by the "kind" field: "character_table", "degree_profile", "fusion".
// Throws ParseError with the offending field on malformed input.
Document parse_document(const Json& j);
Document load_document(const std::string& path);

Json table_to_json(const CharacterTable& table);
Json profile_to_json(const DegreeProfile& profile);
Json fusion_to_json(const FusionDoc& doc);
Json entry_to_json(const CatalogEntry& entry);

// Resolve the names in a fusion document against the catalog.
FusionData link_fusion(const FusionDoc& doc);

// Survey grid config: arrays "cyclic", "dihedral", "frobenius" (pairs),
// "extraspecial", "products", "builtins".
SurveyGrid parse_grid(const Json& j);
SurveyGrid load_grid(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace minchar
