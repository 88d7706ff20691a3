#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "simdiag/diagonal.hpp"
#include "simdiag/report.hpp"
#include "simdiag/verify.hpp"
#include "simdiag/widths.hpp"

using namespace simdiag;

namespace {

Json load_schema(const std::string& name) {
  std::ifstream f(std::string(SIMDIAG_SCHEMA_DIR) + "/" + name);
  REQUIRE(f.good());
  return Json::parse(f);
}

// minimal structural validation: required keys, primitive types, nested
// object/array item schemas -- the subset of draft-07 the shipped schemas use
bool conforms(const Json& schema, const Json& value);

bool type_matches(const Json& type_spec, const Json& value) {
  auto one = [&](const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (t == "number") return value.is_number();
    if (t == "boolean") return value.is_boolean();
    if (t == "null") return value.is_null();
    return false;
  };
  if (type_spec.is_string()) return one(type_spec.get<std::string>());
  for (const auto& t : type_spec)
    if (one(t.get<std::string>())) return true;
  return false;
}

bool conforms(const Json& schema, const Json& value) {
  if (schema.contains("type") && !type_matches(schema["type"], value)) return false;
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& e : schema["enum"]) hit = hit || e == value;
    if (!hit) return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties"))
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (value.contains(it.key()) && !conforms(it.value(), value[it.key()])) return false;
  }
  if (value.is_array() && schema.contains("items"))
    for (const auto& item : value)
      if (!conforms(schema["items"], item)) return false;
  return true;
}

ConstructedGroup& a5() {
  static ConstructedGroup cg = make_alternating(5);
  return cg;
}

}  // namespace

TEST_CASE("info report conforms to the shipped schema") {
  CHECK(conforms(load_schema("info.schema.json"), info_json(a5())));
}

TEST_CASE("widths report conforms and round-trips through CSV") {
  WidthReport w = group_widths(a5().group, a5().auts, "A5");
  Json j = widths_json(a5().group, w);
  CHECK(conforms(load_schema("widths.schema.json"), j));
  CHECK(j["maxima"]["c_a"] == 2);

  std::string csv = widths_csv(a5().group, w);
  CHECK(csv.find("group,order,rep_cycles") == 0);
  // one row per class plus header and maxima
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 4 + 1);

  CHECK(conforms(load_schema("covering.schema.json"), covering_json(a5().group, w)));
}

TEST_CASE("orbdiam report conforms") {
  WidthReport w = group_widths(a5().group, a5().auts, "A5");
  DiagonalGeometry geom(a5().group, 2, Variant::Tk, kDefaultPointCap);
  OrbdiamReport rep = orbdiam(geom);
  std::vector<BoundCertificate> certs;
  for (const auto& row : w.classes) certs.push_back(bound_certificate(geom, row.rep, row.c_i, w.c_i));
  Json j = orbdiam_json(geom, "A5", rep, certs);
  CHECK(conforms(load_schema("orbdiam.schema.json"), j));
  CHECK(j["orbdiam"] == 3);
  CHECK(j["rank"] == 5);
}

TEST_CASE("chartable report conforms") {
  CharacterTable t = dixon_table(a5().group);
  CHECK(conforms(load_schema("chartable.schema.json"), chartable_json("A5", t)));
}

TEST_CASE("verify report conforms") {
  VerifyOptions opt;
  auto results = run_verify_suite("covering", opt);
  Json j = verify_json("covering", results);
  CHECK(conforms(load_schema("verify.schema.json"), j));
  CHECK(j["failed"] == 0);
}
