#include "minchar/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "minchar/errors.hpp"

namespace minchar {

namespace {

Int int_from_json(const Json& j, const char* field) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError(std::string("field '") + field + "' must be an integer");
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

long long_from_json(const Json& j, const char* field) { return to_long(int_from_json(j, field)); }

const Json& need(const Json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw ParseError(std::string("missing field '") + field + "'");
  return *it;
}

// A value is a bare integer or a list of [coefficient, exponent] pairs.
Cyclotomic value_from_json(const Json& j, long order) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(int_from_json(j, "value"));
  if (!j.is_array()) throw ParseError("character value must be an integer or a term list");
  std::vector<std::pair<Int, long>> terms;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw ParseError("cyclotomic term must be a [coefficient, exponent] pair");
    terms.emplace_back(int_from_json(term[0], "coefficient"), long_from_json(term[1], "exponent"));
  }
  return Cyclotomic::from_terms(order, terms);
}

Json value_to_json(const Cyclotomic& v) {
  if (v.is_rational()) return int_to_json(v.as_integer());
  Json terms = Json::array();
  for (size_t e = 0; e < v.coeffs().size(); ++e) {
    if (v.coeffs()[e] == 0) continue;
    terms.push_back(Json::array({int_to_json(v.coeffs()[e]), Json(static_cast<long>(e))}));
  }
  return terms;
}

Annotations flags_from_json(const Json& j) {
  Annotations notes;
  auto it = j.find("flags");
  if (it == j.end()) return notes;
  const Json& f = *it;
  if (f.contains("abelian")) notes.abelian = f.at("abelian").get<bool>();
  if (f.contains("nilpotent")) notes.nilpotent = f.at("nilpotent").get<bool>();
  if (f.contains("expected_m")) notes.expected_m = int_from_json(f.at("expected_m"), "expected_m");
  if (f.contains("provenance")) notes.provenance = f.at("provenance").get<std::string>();
  if (f.contains("frobenius_kernel_order"))
    notes.frobenius_kernel_order =
        int_from_json(f.at("frobenius_kernel_order"), "frobenius_kernel_order");
  return notes;
}

Json flags_to_json(const Annotations& notes) {
  Json f = Json::object();
  if (notes.abelian) f["abelian"] = *notes.abelian;
  if (notes.nilpotent) f["nilpotent"] = *notes.nilpotent;
  if (notes.expected_m) f["expected_m"] = int_to_json(*notes.expected_m);
  if (!notes.provenance.empty()) f["provenance"] = notes.provenance;
  if (notes.frobenius_kernel_order)
    f["frobenius_kernel_order"] = int_to_json(*notes.frobenius_kernel_order);
  return f;
}

CharacterTable table_from_json(const Json& j) {
  CharacterTable t;
  t.name = need(j, "name").get<std::string>();
  t.group_order = int_from_json(need(j, "group_order"), "group_order");
  t.cyclotomic_order = long_from_json(need(j, "cyclotomic_order"), "cyclotomic_order");
  if (t.cyclotomic_order < 1) throw ParseError("cyclotomic_order must be positive");
  for (const Json& cls : need(j, "classes")) {
    ClassInfo info;
    info.label = need(cls, "label").get<std::string>();
    info.size = int_from_json(need(cls, "size"), "size");
    t.classes.push_back(std::move(info));
  }
  const Json& rows = need(j, "values");
  if (!rows.is_array()) throw ParseError("field 'values' must be an array of rows");
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != t.classes.size())
      throw ParseError("each value row must list one entry per class");
    std::vector<Cyclotomic> out;
    for (const Json& v : row) out.push_back(value_from_json(v, t.cyclotomic_order));
    t.values.push_back(std::move(out));
  }
  t.notes = flags_from_json(j);

  // Rows are kept sorted by degree, stably, so callers can rely on the
  // trivial row being first and the top degree being last.
  std::stable_sort(t.values.begin(), t.values.end(),
                   [](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
                     if (a.empty() || b.empty() || !a[0].is_rational() || !b[0].is_rational())
                       return false;
                     return a[0].as_integer() < b[0].as_integer();
                   });
  return t;
}

DegreeProfile profile_from_json(const Json& j) {
  DegreeProfile p;
  p.name = need(j, "name").get<std::string>();
  p.group_order = int_from_json(need(j, "group_order"), "group_order");
  for (const Json& d : need(j, "degrees")) p.degrees.push_back(int_from_json(d, "degrees"));
  p.notes = flags_from_json(j);
  return p;
}

FusionDoc fusion_from_json(const Json& j) {
  FusionDoc doc;
  doc.name = need(j, "name").get<std::string>();
  doc.group = need(j, "group").get<std::string>();
  doc.subgroup = need(j, "subgroup").get<std::string>();
  for (const Json& pair : need(j, "class_map")) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("class_map entries must be [subgroup_class, group_class] pairs");
    doc.class_map.emplace_back(long_from_json(pair[0], "class_map"),
                               long_from_json(pair[1], "class_map"));
  }
  return doc;
}

}  // namespace

Document parse_document(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  const std::string kind = need(j, "kind").get<std::string>();
  if (kind == "character_table") return table_from_json(j);
  if (kind == "degree_profile") return profile_from_json(j);
  if (kind == "fusion") return fusion_from_json(j);
  throw ParseError("unknown document kind '" + kind + "'");
}

Document load_document(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return parse_document(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json table_to_json(const CharacterTable& table) {
  Json j;
  j["kind"] = "character_table";
  j["name"] = table.name;
  j["group_order"] = int_to_json(table.group_order);
  j["cyclotomic_order"] = table.cyclotomic_order;
  Json classes = Json::array();
  for (const ClassInfo& cls : table.classes)
    classes.push_back({{"label", cls.label}, {"size", int_to_json(cls.size)}});
  j["classes"] = std::move(classes);
  Json rows = Json::array();
  for (const auto& row : table.values) {
    Json out = Json::array();
    // Exponents are read back relative to the table's cyclotomic order, so
    // every value must be written in that basis.
    for (const Cyclotomic& v : row)
      out.push_back(value_to_json(v.embedded(table.cyclotomic_order)));
    rows.push_back(std::move(out));
  }
  j["values"] = std::move(rows);
  Json flags = flags_to_json(table.notes);
  if (!flags.empty()) j["flags"] = std::move(flags);
  return j;
}

Json profile_to_json(const DegreeProfile& profile) {
  Json j;
  j["kind"] = "degree_profile";
  j["name"] = profile.name;
  j["group_order"] = int_to_json(profile.group_order);
  Json degrees = Json::array();
  for (const Int& d : profile.degrees) degrees.push_back(int_to_json(d));
  j["degrees"] = std::move(degrees);
  Json flags = flags_to_json(profile.notes);
  if (!flags.empty()) j["flags"] = std::move(flags);
  return j;
}

Json fusion_to_json(const FusionDoc& doc) {
  Json j;
  j["kind"] = "fusion";
  j["name"] = doc.name;
  j["group"] = doc.group;
  j["subgroup"] = doc.subgroup;
  Json map = Json::array();
  for (auto [h, g] : doc.class_map)
    map.push_back(Json::array({Json(h), Json(g)}));
  j["class_map"] = std::move(map);
  return j;
}

Json entry_to_json(const CatalogEntry& entry) {
  if (entry.has_table()) return table_to_json(entry.table());
  return profile_to_json(entry.profile_only());
}

FusionData link_fusion(const FusionDoc& doc) {
  CatalogEntry group = resolve(doc.group);
  CatalogEntry subgroup = resolve(doc.subgroup);
  if (!group.has_table() || !subgroup.has_table())
    throw InvalidFusionError("fusion '" + doc.name + "' needs full tables on both sides");
  FusionData data;
  data.name = doc.name;
  data.group = group.table();
  data.subgroup = subgroup.table();
  for (auto [h, g] : doc.class_map) {
    if (h != data.class_map.size())
      throw InvalidFusionError("class_map must list subgroup classes 0,1,... in order");
    data.class_map.push_back(g);
  }
  return data;
}

SurveyGrid parse_grid(const Json& j) {
  SurveyGrid grid;
  if (j.contains("cyclic"))
    for (const Json& n : j.at("cyclic")) grid.cyclic.push_back(long_from_json(n, "cyclic"));
  if (j.contains("dihedral"))
    for (const Json& n : j.at("dihedral")) grid.dihedral.push_back(long_from_json(n, "dihedral"));
  if (j.contains("frobenius"))
    for (const Json& pq : j.at("frobenius")) {
      if (!pq.is_array() || pq.size() != 2)
        throw ParseError("frobenius grid entries must be [p, q] pairs");
      grid.frobenius.emplace_back(long_from_json(pq[0], "frobenius"),
                                  long_from_json(pq[1], "frobenius"));
    }
  if (j.contains("extraspecial"))
    for (const Json& p : j.at("extraspecial"))
      grid.extraspecial.push_back(long_from_json(p, "extraspecial"));
  if (j.contains("products"))
    for (const Json& name : j.at("products")) grid.products.push_back(name.get<std::string>());
  if (j.contains("builtins"))
    for (const Json& name : j.at("builtins")) grid.builtins.push_back(name.get<std::string>());
  return grid;
}

SurveyGrid load_grid(const std::string& path) {
  try {
    return parse_grid(Json::parse(read_file(path)));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace minchar
