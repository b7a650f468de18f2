#include <doctest.h>

#include <string>
#include <variant>
#include <vector>

#include "minchar/analysis.hpp"
#include "minchar/catalog.hpp"
#include "minchar/errors.hpp"
#include "minchar/io.hpp"

using minchar::CharacterTable;
using minchar::DegreeProfile;
using minchar::Document;
using minchar::FusionDoc;
using minchar::Int;
using minchar::Json;

namespace {

const std::string kDataDir = std::string(MINCHAR_SOURCE_DIR) + "/data";

}  // namespace

TEST_CASE("tables survive a serialization round trip byte for byte") {
  for (const char* name : {"a4", "s4", "q8", "cyclic(12)", "dihedral(7)", "frobenius(7,3)"}) {
    CharacterTable table = minchar::resolve(name).table();
    Json emitted = minchar::table_to_json(table);
    Document parsed = minchar::parse_document(emitted);
    REQUIRE(std::holds_alternative<CharacterTable>(parsed));
    const CharacterTable& back = std::get<CharacterTable>(parsed);
    INFO(std::string(name));
    CHECK(minchar::table_to_json(back).dump(2) == emitted.dump(2));
    CHECK(back.group_order == table.group_order);
    CHECK(back.cyclotomic_order == table.cyclotomic_order);
    REQUIRE(back.k() == table.k());
    for (size_t i = 0; i < table.k(); ++i) {
      CHECK(back.classes[i].label == table.classes[i].label);
      CHECK(back.classes[i].size == table.classes[i].size);
      for (size_t c = 0; c < table.k(); ++c) CHECK(back.values[i][c] == table.values[i][c]);
    }
    CHECK(back.notes.expected_m == table.notes.expected_m);
    CHECK(back.notes.provenance == table.notes.provenance);
  }
}

TEST_CASE("profiles and fusions round trip") {
  DegreeProfile es3 = minchar::resolve("es3").profile_only();
  Json emitted = minchar::profile_to_json(es3);
  Document parsed = minchar::parse_document(emitted);
  REQUIRE(std::holds_alternative<DegreeProfile>(parsed));
  const DegreeProfile& back = std::get<DegreeProfile>(parsed);
  CHECK(back.degrees == es3.degrees);
  CHECK(back.group_order == 27);
  CHECK(*back.notes.expected_m == 18);
  CHECK(minchar::profile_to_json(back).dump() == emitted.dump());

  FusionDoc doc{"s4-s3", "s4", "s3", {{0, 0}, {1, 3}, {2, 1}}};
  Json fj = minchar::fusion_to_json(doc);
  Document fparsed = minchar::parse_document(fj);
  REQUIRE(std::holds_alternative<FusionDoc>(fparsed));
  const FusionDoc& fback = std::get<FusionDoc>(fparsed);
  CHECK(fback.group == "s4");
  CHECK(fback.class_map == doc.class_map);
  CHECK(minchar::fusion_to_json(fback).dump() == fj.dump());
}

TEST_CASE("integers beyond the machine word go through strings") {
  Json j = {{"kind", "degree_profile"},
            {"name", "big"},
            {"group_order", "340282366920938463463374607431768211456"},
            {"degrees", Json::array({1, "18446744073709551616"})}};
  Document parsed = minchar::parse_document(j);
  const DegreeProfile& p = std::get<DegreeProfile>(parsed);
  CHECK(p.group_order == Int("340282366920938463463374607431768211456"));
  CHECK(p.degrees[1] == Int("18446744073709551616"));
  Json emitted = minchar::profile_to_json(p);
  CHECK(emitted["group_order"] == "340282366920938463463374607431768211456");
  CHECK(emitted["degrees"][0] == 1);
}

TEST_CASE("rows are sorted by degree on load") {
  Json j = {{"kind", "character_table"},
            {"name", "swapped"},
            {"group_order", 6},
            {"cyclotomic_order", 1},
            {"classes", Json::array({{{"label", "1"}, {"size", 1}},
                                     {{"label", "a"}, {"size", 2}},
                                     {{"label", "b"}, {"size", 3}}})},
            {"values", Json::array({Json::array({2, -1, 0}), Json::array({1, 1, 1}),
                                    Json::array({1, 1, -1})})}};
  Document parsed = minchar::parse_document(j);
  const CharacterTable& t = std::get<CharacterTable>(parsed);
  CHECK(t.degree(0) == 1);
  CHECK(t.degree(2) == 2);
  CHECK(minchar::validate_table(t).ok());
}

TEST_CASE("malformed documents name the offending field") {
  auto parse = [](Json j) { return minchar::parse_document(j); };
  CHECK_THROWS_WITH_AS(parse(Json{{"name", "x"}}), doctest::Contains("kind"),
                       minchar::ParseError);
  CHECK_THROWS_WITH_AS(parse(Json{{"kind", "poem"}}), doctest::Contains("poem"),
                       minchar::ParseError);
  CHECK_THROWS_AS(parse(Json{{"kind", "degree_profile"}, {"group_order", 6}}),
                  minchar::ParseError);
  CHECK_THROWS_WITH_AS(
      parse(Json{{"kind", "degree_profile"}, {"name", "x"}, {"group_order", 6.5}}),
      doctest::Contains("group_order"), minchar::ParseError);
  CHECK_THROWS_AS(parse(Json::array({1, 2})), minchar::ParseError);

  Json bad_row = {{"kind", "character_table"},
                  {"name", "x"},
                  {"group_order", 2},
                  {"cyclotomic_order", 1},
                  {"classes", Json::array({{{"label", "1"}, {"size", 1}},
                                           {{"label", "a"}, {"size", 1}}})},
                  {"values", Json::array({Json::array({1, 1}), Json::array({1})})}};
  CHECK_THROWS_WITH_AS(parse(bad_row), doctest::Contains("one entry per class"),
                       minchar::ParseError);

  Json bad_term = bad_row;
  bad_term["values"] = Json::array(
      {Json::array({1, 1}), Json::array({1, Json::array({Json::array({1, 2, 3})})})});
  CHECK_THROWS_WITH_AS(parse(bad_term), doctest::Contains("coefficient, exponent"),
                       minchar::ParseError);

  Json bad_fusion = {{"kind", "fusion"}, {"name", "x"},       {"group", "s4"},
                     {"subgroup", "c2"}, {"class_map", Json::array({Json::array({0})})}};
  CHECK_THROWS_AS(parse(bad_fusion), minchar::ParseError);
}

TEST_CASE("fusion documents link against the catalog") {
  FusionDoc doc{"s4-s3", "s4", "s3", {{0, 0}, {1, 3}, {2, 1}}};
  minchar::FusionData data = minchar::link_fusion(doc);
  CHECK(data.class_map == std::vector<size_t>{0, 3, 1});
  CHECK(minchar::kplus(data) == 5);

  FusionDoc out_of_order{"bad", "s4", "s3", {{1, 3}, {0, 0}, {2, 1}}};
  CHECK_THROWS_AS(minchar::link_fusion(out_of_order), minchar::InvalidFusionError);

  FusionDoc profile_side{"bad", "es3", "c3", {{0, 0}, {1, 1}, {2, 2}}};
  CHECK_THROWS_AS(minchar::link_fusion(profile_side), minchar::InvalidFusionError);

  FusionDoc unknown{"bad", "marsupial", "c2", {{0, 0}, {1, 1}}};
  CHECK_THROWS_AS(minchar::link_fusion(unknown), minchar::UnknownNameError);
}

TEST_CASE("the shipped fusion fixtures load and check out") {
  for (const char* stem : {"s4_c2", "s4_s3", "a4_v4", "s3_c2"}) {
    Document doc = minchar::load_document(kDataDir + "/fusion/" + stem + ".json");
    REQUIRE(std::holds_alternative<FusionDoc>(doc));
    minchar::FusionData data = minchar::link_fusion(std::get<FusionDoc>(doc));
    INFO(std::string(stem));
    CHECK(minchar::validate_fusion(data).ok());
    CHECK(minchar::corollary3_check(data).holds);
  }
}

TEST_CASE("the survey grid loads with the expected shape") {
  minchar::SurveyGrid grid = minchar::load_grid(kDataDir + "/survey_grid.json");
  CHECK(grid.cyclic.size() == 23);
  CHECK(grid.cyclic.front() == 2);
  CHECK(grid.cyclic.back() == 24);
  CHECK(grid.dihedral.size() == 10);
  CHECK(grid.frobenius.size() == 10);
  CHECK(grid.extraspecial == std::vector<long>{2, 3, 5});
  CHECK(grid.products.size() == 5);
  CHECK(grid.builtins.size() == 4);
  CHECK(minchar::standard_catalog(grid).size() == 55);
}

TEST_CASE("file errors carry the path") {
  CHECK_THROWS_WITH_AS(minchar::load_document("/nonexistent/nope.json"),
                       doctest::Contains("nope.json"), minchar::ParseError);
  const std::string path = "/tmp/minchar_io_roundtrip.json";
  minchar::write_file(path, minchar::table_to_json(minchar::builtin("a4")).dump(2));
  Document doc = minchar::load_document(path);
  CHECK(std::get<CharacterTable>(doc).group_order == 12);
  minchar::write_file(path, "{ not json");
  CHECK_THROWS_AS(minchar::load_document(path), minchar::ParseError);
}
