#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"
#include "surfcoh/stacks.hpp"
#include "surfcoh/surfaces.hpp"

using namespace surfcoh;
using jsonio::Json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Minimal JSON Schema checker covering the keywords the shipped schema
// uses: type, enum, const, required, properties, items (schema or tuple),
// oneOf, $ref into $defs, pattern and the numeric/array bounds.
class SchemaChecker {
 public:
  explicit SchemaChecker(Json schema) : root_(std::move(schema)) {}

  bool valid(const Json& value) const { return valid(value, root_); }

 private:
  Json root_;

  const Json& resolve(const std::string& ref) const {
    const std::string prefix = "#/$defs/";
    REQUIRE(ref.rfind(prefix, 0) == 0);
    return root_.at("$defs").at(ref.substr(prefix.size()));
  }

  static bool matches_type(const Json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    return false;
  }

  bool valid(const Json& value, const Json& schema) const {
    if (schema.contains("$ref")) return valid(value, resolve(schema["$ref"]));
    if (schema.contains("oneOf")) {
      int hits = 0;
      for (const Json& alternative : schema["oneOf"])
        if (valid(value, alternative)) ++hits;
      return hits == 1;
    }
    if (schema.contains("const") && value != schema["const"]) return false;
    if (schema.contains("enum")) {
      bool found = false;
      for (const Json& candidate : schema["enum"]) found = found || value == candidate;
      if (!found) return false;
    }
    if (schema.contains("type") && !matches_type(value, schema["type"])) return false;
    if (schema.contains("pattern")) {
      if (!value.is_string()) return false;
      if (!std::regex_match(value.get<std::string>(), std::regex(schema["pattern"]))) return false;
    }
    if (schema.contains("minimum") &&
        (!value.is_number() || value.get<double>() < schema["minimum"].get<double>()))
      return false;
    if (schema.contains("maximum") &&
        (!value.is_number() || value.get<double>() > schema["maximum"].get<double>()))
      return false;
    if (schema.contains("required")) {
      if (!value.is_object()) return false;
      for (const Json& key : schema["required"])
        if (!value.contains(key.get<std::string>())) return false;
    }
    if (schema.contains("properties") && value.is_object()) {
      for (const auto& [key, sub] : schema["properties"].items())
        if (value.contains(key) && !valid(value.at(key), sub)) return false;
    }
    if (value.is_array()) {
      if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>())
        return false;
      if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>())
        return false;
      if (schema.contains("items")) {
        const Json& items = schema["items"];
        if (items.is_array()) {
          for (std::size_t i = 0; i < value.size() && i < items.size(); ++i)
            if (!valid(value.at(i), items.at(i))) return false;
        } else {
          for (const Json& element : value)
            if (!valid(element, items)) return false;
        }
      }
    }
    return true;
  }
};

const SchemaChecker& shipped_schema() {
  static const SchemaChecker checker = [] {
    std::ifstream in(std::string(SURFCOH_SOURCE_DIR) + "/schemas/output_record.schema.json");
    REQUIRE(in.good());
    return SchemaChecker(Json::parse(in));
  }();
  return checker;
}

}  // namespace

TEST_CASE("repvar prints the genus 2 polynomial") {
  const CliResult r = run_cli({"repvar", "--group", "su2", "--genus", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + t^2 + 4t^3 + t^4 + 4t^5 + 6t^6 + t^9\n");
}

TEST_CASE("repvar handles demigenus and twisted variants") {
  CHECK(run_cli({"repvar", "--group", "su2", "--demigenus", "1"}).out == "2\n");
  CHECK(run_cli({"repvar", "--group", "su2", "--genus", "1", "--twisted"}).out == "1 + t^3\n");
  const CliResult so3 = run_cli({"repvar", "--group", "so3", "--genus", "1"});
  CHECK(so3.out == "untwisted: 1 + t^2 + 2t^3\ntwisted: 1 + t^3\n");
}

TEST_CASE("repvar genus ranges emit labeled lines in order") {
  const CliResult r = run_cli({"repvar", "--group", "su2", "--genus", "0..2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "genus 0: 1\n"
        "genus 1: 1 + t^2 + 2t^3\n"
        "genus 2: 1 + t^2 + 4t^3 + t^4 + 4t^5 + 6t^6 + t^9\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({"repvar", "--group", "u2", "--genus", "1", "--twisted"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "so3", "--genus", "1", "--twisted"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "u2", "--demigenus", "2"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "su2", "--demigenus", "2", "--twisted"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "su2", "--demigenus", "0"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "su2"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "su2", "--genus", "1", "--demigenus", "1"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "su2", "--genus", "-3"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "su2", "--genus", "2..1"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "sp4", "--genus", "1"}).exit_code == 2);
  CHECK(run_cli({"repvar", "--group", "su2", "--genus", "0", "--twisted"}).exit_code == 2);
  CHECK(run_cli({"expand", "--object", "F", "--power", "-1"}).exit_code == 2);
  CHECK(run_cli({"nonsense"}).exit_code == 2);
}

TEST_CASE("charstack text output shows the finite part and the tail") {
  const CliResult g2 = run_cli({"charstack", "--genus", "2"});
  CHECK(g2.exit_code == 0);
  CHECK(g2.out ==
        "t^6 + (1 + t^2 + 4t^3 + t^4 + 4t^5 + 5t^6) * T, T = t^{-3} + t^{-7} + ...\n");

  const CliResult g1 = run_cli({"charstack", "--genus", "1"});
  CHECK(g1.out == "(1 + t^2 + 2t^3) * T, T = t^{-3} + t^{-7} + ...\n");

  const CliResult ordinary = run_cli({"charstack", "--genus", "1", "--cohomology", "ordinary"});
  CHECK(ordinary.out == "(1 + t^2 + 2t^3) * T, T = 1 + t^4 + t^8 + ...\n");

  const CliResult tw = run_cli({"charstack", "--genus", "2", "--twisted"});
  CHECK(tw.out == "1 + t^2 + 4t^3 + t^4 + t^6\n");

  const CliResult tw_note =
      run_cli({"charstack", "--genus", "2", "--twisted", "--cohomology", "ordinary"});
  CHECK(tw_note.out == "1 + t^2 + 4t^3 + t^4 + t^6\n");
  CHECK(tw_note.err.find("agree") != std::string::npos);
}

TEST_CASE("charstack rejects genus 4 with exit code 2") {
  const CliResult r = run_cli({"charstack", "--genus", "4"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("genus 3") != std::string::npos);
}

TEST_CASE("expand prints atom decompositions") {
  CHECK(run_cli({"expand", "--object", "F", "--power", "1"}).out ==
        "2·I[-3] + U1[-3] + E1\n");
  CHECK(run_cli({"expand", "--object", "F", "--power", "0"}).out == "I\n");
  CHECK(run_cli({"expand", "--object", "S", "--power", "2"}).out == "2·I[-3] + U2 + E2\n");
}

TEST_CASE("json output validates against the shipped schema and round-trips") {
  const CliResult r = run_cli({"repvar", "--group", "su2", "--genus", "2", "--format", "json"});
  const Json record = Json::parse(r.out);
  CHECK(shipped_schema().valid(record));
  CHECK(record["payload"]["type"] == "polynomial");
  CHECK(jsonio::poly_from_json(record["payload"]["terms"]) == rep_poincare(2));

  const CliResult so3 = run_cli({"repvar", "--group", "so3", "--genus", "1", "--format", "json"});
  const Json so3_record = Json::parse(so3.out);
  CHECK(shipped_schema().valid(so3_record));
  REQUIRE(so3_record["components"].size() == 2);
  CHECK(jsonio::poly_from_json(so3_record["components"][1]["payload"]["terms"]) ==
        twisted_rep_poincare(1));

  const CliResult range =
      run_cli({"repvar", "--group", "u2", "--genus", "0..3", "--format", "json"});
  const Json range_records = Json::parse(range.out);
  CHECK(range_records.is_array());
  CHECK(range_records.size() == 4);
  CHECK(shipped_schema().valid(range_records));

  const CliResult cs = run_cli({"charstack", "--genus", "2", "--format", "json"});
  const Json cs_record = Json::parse(cs.out);
  CHECK(shipped_schema().valid(cs_record));
  CHECK(cs_record["payload"]["type"] == "series");
  const PeriodicSeries round_tripped = jsonio::series_from_json(cs_record["payload"]);
  CHECK(round_tripped ==
        charstack_cohomology(2, false, CohomologyVariant::CompactSupport).series);

  const CliResult ex = run_cli({"expand", "--object", "F", "--power", "2", "--format", "json"});
  const Json ex_record = Json::parse(ex.out);
  CHECK(shipped_schema().valid(ex_record));
  CHECK(jsonio::object_from_json(ex_record["payload"]["terms"]) == commutator_power_closed(2));

  const CliResult vr = run_cli({"verify", "--suite", "k0", "--json"});
  CHECK(vr.exit_code == 0);
  const Json reports = Json::parse(vr.out);
  CHECK(reports.is_array());
  CHECK(shipped_schema().valid(reports));
}

TEST_CASE("text and json payloads encode the same polynomial") {
  const CliResult text = run_cli({"repvar", "--group", "su2", "--genus", "3"});
  const CliResult json = run_cli({"repvar", "--group", "su2", "--genus", "3", "--format", "json"});
  const LaurentPoly from_json =
      jsonio::poly_from_json(Json::parse(json.out)["payload"]["terms"]);
  CHECK(text.out == from_json.str() + "\n");
}

TEST_CASE("csv output is one row per degree, with a periodic block for series") {
  const CliResult r = run_cli({"repvar", "--group", "su2", "--genus", "1", "--format", "csv"});
  CHECK(r.out == "degree,coefficient\n0,1\n2,1\n3,2\n");

  const CliResult cs = run_cli({"charstack", "--genus", "1", "--format", "csv"});
  CHECK(cs.out.find("periodic\ndirection,-1\n") != std::string::npos);
  CHECK(cs.out.find("residue_1,1\n") != std::string::npos);
}

TEST_CASE("verify is deterministic and honors the seed flag") {
  const CliResult a = run_cli({"verify", "--suite", "rep", "--seed", "7"});
  const CliResult b = run_cli({"verify", "--suite", "rep", "--seed", "7"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed 7") != std::string::npos);

  const CliResult all = run_cli({"verify"});
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("seed 42") != std::string::npos);
  CHECK(all.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("--out writes the result to a file instead of stdout") {
  const std::string path = "cli_test_out.tmp";
  const CliResult r =
      run_cli({"repvar", "--group", "su2", "--genus", "1", "--out", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "1 + t^2 + 2t^3\n");
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("repvar") != std::string::npos);
}
