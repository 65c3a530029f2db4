#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "json_io.hpp"
#include "surfcoh/stacks.hpp"
#include "surfcoh/surfaces.hpp"
#include "surfcoh/verify.hpp"

namespace surfcoh::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsage = 2;

using jsonio::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "N" or "A..B".
std::vector<unsigned> parse_genus_range(const std::string& text, const std::string& flag) {
  const auto bad = [&] { return UsageError("invalid value for " + flag + ": '" + text + "'"); };
  const auto parse_one = [&](const std::string& part) -> unsigned {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (used != part.size() || v < 0) throw bad();
    return static_cast<unsigned>(v);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_one(text)};
  const unsigned lo = parse_one(text.substr(0, dots));
  const unsigned hi = parse_one(text.substr(dots + 2));
  if (hi < lo) throw bad();
  std::vector<unsigned> values;
  for (unsigned v = lo; v <= hi; ++v) values.push_back(v);
  return values;
}

// Routes output to stdout or, when --out is given, to that file.
class Sink {
 public:
  Sink(std::ostream& console, const std::string& path) : console_(console) {
    if (!path.empty()) {
      file_.emplace(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : console_; }

 private:
  std::ostream& console_;
  std::optional<std::ofstream> file_;
};

void emit_poly_csv(std::ostream& out, const LaurentPoly& p) {
  out << "degree,coefficient\n";
  for (const auto& [d, c] : p.terms()) out << d << "," << c.str() << "\n";
}

void emit_series_csv(std::ostream& out, const PeriodicSeries& s) {
  emit_poly_csv(out, s.transient());
  out << "periodic\n";
  out << "direction," << s.direction() << "\n";
  out << "tail_start," << s.tail_start() << "\n";
  for (int r = 0; r < 4; ++r) out << "residue_" << r << "," << s.pattern()[r].str() << "\n";
}

Json poly_payload(const LaurentPoly& p) {
  Json payload;
  payload["type"] = "polynomial";
  payload["terms"] = jsonio::poly_to_json(p);
  return payload;
}

Json series_payload(const PeriodicSeries& s) {
  if (s.is_polynomial()) return poly_payload(s.transient());
  const Json fields = jsonio::series_to_json(s);
  Json payload;
  payload["type"] = "series";
  for (const auto& [key, value] : fields.items()) payload[key] = value;
  return payload;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---------------- repvar ----------------

struct RepvarOptions {
  std::string group;
  std::string genus_text;
  std::string demigenus_text;
  bool twisted = false;
  std::string format = "text";
  std::string out_path;
};

int run_repvar(const RepvarOptions& opt, std::ostream& console) {
  if (opt.genus_text.empty() == opt.demigenus_text.empty())
    throw UsageError("exactly one of --genus and --demigenus is required");
  const bool nonorientable = !opt.demigenus_text.empty();

  SurfaceSpec spec;
  spec.family = nonorientable ? Family::NonOrientable : Family::Orientable;
  spec.group = opt.group == "su2" ? Group::SU2 : opt.group == "so3" ? Group::SO3 : Group::U2;
  spec.twisted = opt.twisted;
  const std::vector<unsigned> values = parse_genus_range(
      nonorientable ? opt.demigenus_text : opt.genus_text,
      nonorientable ? "--demigenus" : "--genus");
  spec.genus_or_demigenus = values.front();
  spec.validate();

  struct Record {
    unsigned value;
    std::optional<LaurentPoly> polynomial;
    std::optional<std::pair<LaurentPoly, LaurentPoly>> components;  // SO(3)
  };
  std::vector<Record> records;
  for (unsigned v : values) {
    Record rec{v, std::nullopt, std::nullopt};
    switch (spec.group) {
      case Group::SU2:
        if (nonorientable)
          rec.polynomial = nonorientable_rep_poincare(v);
        else if (opt.twisted)
          rec.polynomial = twisted_rep_poincare(v);
        else
          rec.polynomial = rep_poincare(v);
        break;
      case Group::SO3:
        rec.components = so3_rep_poincare(v);
        break;
      case Group::U2:
        rec.polynomial = u2_rep_poincare(v);
        break;
    }
    records.push_back(std::move(rec));
  }

  Sink sink(console, opt.out_path);
  std::ostream& out = sink.stream();
  const std::string value_label = nonorientable ? "demigenus" : "genus";

  if (opt.format == "text") {
    const bool single = records.size() == 1;
    for (const Record& rec : records) {
      if (rec.components) {
        if (!single) out << value_label << " " << rec.value << ":\n";
        const std::string indent = single ? "" : "  ";
        out << indent << "untwisted: " << rec.components->first.str() << "\n";
        out << indent << "twisted: " << rec.components->second.str() << "\n";
      } else if (single) {
        out << rec.polynomial->str() << "\n";
      } else {
        out << value_label << " " << rec.value << ": " << rec.polynomial->str() << "\n";
      }
    }
  } else if (opt.format == "json") {
    const auto record_json = [&](const Record& rec) {
      Json j;
      j["command"] = "repvar";
      j["group"] = opt.group;
      j["family"] = nonorientable ? "nonorientable" : "orientable";
      j[value_label] = rec.value;
      j["twisted"] = opt.twisted;
      if (rec.components) {
        Json components = Json::array();
        Json untwisted;
        untwisted["label"] = "untwisted";
        untwisted["payload"] = poly_payload(rec.components->first);
        Json twisted;
        twisted["label"] = "twisted";
        twisted["payload"] = poly_payload(rec.components->second);
        components.push_back(untwisted);
        components.push_back(twisted);
        j["components"] = components;
      } else {
        j["payload"] = poly_payload(*rec.polynomial);
      }
      return j;
    };
    if (records.size() == 1) {
      emit_json(out, record_json(records.front()));
    } else {
      Json list = Json::array();
      for (const Record& rec : records) list.push_back(record_json(rec));
      emit_json(out, list);
    }
  } else {  // csv
    for (const Record& rec : records) {
      if (records.size() > 1) out << value_label << "," << rec.value << "\n";
      if (rec.components) {
        out << "component,untwisted\n";
        emit_poly_csv(out, rec.components->first);
        out << "component,twisted\n";
        emit_poly_csv(out, rec.components->second);
      } else {
        emit_poly_csv(out, *rec.polynomial);
      }
    }
  }
  return kOk;
}

// ---------------- charstack ----------------

struct CharstackOptions {
  unsigned genus = 0;
  bool twisted = false;
  std::string cohomology = "compact";
  bool cohomology_given = false;
  std::string format = "text";
  std::string out_path;
};

std::string series_display(const CharStackCohomology& c) {
  if (c.tail_prefactor.is_zero()) return c.finite_part.str();
  std::string text;
  if (!c.finite_part.is_zero()) text += c.finite_part.str() + " + ";
  text += "(" + c.tail_prefactor.str() + ") * T, T = ";
  text += c.variant == CohomologyVariant::CompactSupport ? "t^{-3} + t^{-7} + ..."
                                                         : "1 + t^4 + t^8 + ...";
  return text;
}

int run_charstack(const CharstackOptions& opt, std::ostream& console, std::ostream& err) {
  const CohomologyVariant variant = opt.cohomology == "ordinary"
                                        ? CohomologyVariant::Ordinary
                                        : CohomologyVariant::CompactSupport;
  const CharStackCohomology result = charstack_cohomology(opt.genus, opt.twisted, variant);
  if (opt.twisted && opt.cohomology_given)
    err << "note: for twisted character stacks the compact-support and ordinary variants agree\n";

  Sink sink(console, opt.out_path);
  std::ostream& out = sink.stream();
  if (opt.format == "text") {
    out << series_display(result) << "\n";
  } else if (opt.format == "json") {
    Json j;
    j["command"] = "charstack";
    j["group"] = "su2";
    j["genus"] = opt.genus;
    j["twisted"] = opt.twisted;
    j["variant"] = opt.cohomology == "ordinary" ? "ordinary" : "compact";
    j["payload"] = series_payload(result.series);
    j["display"] = series_display(result);
    emit_json(out, j);
  } else {
    emit_series_csv(out, result.series);
  }
  return kOk;
}

// ---------------- expand ----------------

struct ExpandOptions {
  std::string object;  // "F" or "S"
  unsigned power = 0;
  std::string format = "text";
  std::string out_path;
};

int run_expand(const ExpandOptions& opt, std::ostream& console) {
  const SheafObject expansion = opt.object == "F" ? commutator_power_closed(opt.power)
                                                  : squaring_power_closed(opt.power);
  Sink sink(console, opt.out_path);
  std::ostream& out = sink.stream();
  if (opt.format == "text") {
    out << expansion.str() << "\n";
  } else if (opt.format == "json") {
    Json j;
    j["command"] = "expand";
    j["object"] = opt.object;
    j["power"] = opt.power;
    Json payload;
    payload["type"] = "atom_sum";
    payload["terms"] = jsonio::object_to_json(expansion);
    j["payload"] = payload;
    j["display"] = expansion.str();
    emit_json(out, j);
  } else {
    out << "atom,index,shift,multiplicity\n";
    for (const auto& [key, m] : expansion.terms())
      out << key.atom.str()[0] << "," << key.atom.index << "," << key.shift << "," << m.str()
          << "\n";
  }
  return kOk;
}

// ---------------- verify ----------------

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  std::string out_path;
};

int run_verify(const VerifyOptions& opt, std::ostream& console) {
  SuiteOptions suite;
  suite.selection = opt.suite == "rep"     ? Selection::Rep
                    : opt.suite == "stack" ? Selection::Stack
                    : opt.suite == "k0"    ? Selection::K0
                                           : Selection::All;
  suite.seed = opt.seed;
  const std::vector<CheckReport> reports = run_suite(suite);

  Sink sink(console, opt.out_path);
  std::ostream& out = sink.stream();
  if (opt.json) {
    Json list = Json::array();
    for (const CheckReport& r : reports) list.push_back(jsonio::report_to_json(r));
    emit_json(out, list);
  } else {
    std::size_t passed = 0;
    for (const CheckReport& r : reports) {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
      if (!r.detail.empty()) out << "       " << r.detail << "\n";
      if (r.passed) ++passed;
    }
    out << passed << " of " << reports.size() << " checks passed (suite "
        << selection_name(suite.selection) << ", seed " << opt.seed << ")\n";
  }
  return all_passed(reports) ? kOk : kVerifyFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cohomology of surface-group representation varieties and character stacks",
               "surfcoh"};
  app.require_subcommand(1);

  RepvarOptions repvar;
  CLI::App* repvar_cmd = app.add_subcommand(
      "repvar", "Poincaré polynomials of representation varieties of closed surfaces");
  repvar_cmd->add_option("--group", repvar.group, "structure group")
      ->required()
      ->check(CLI::IsMember({"su2", "so3", "u2"}));
  CLI::Option* genus_opt =
      repvar_cmd->add_option("--genus", repvar.genus_text, "genus N, or a range A..B");
  CLI::Option* demigenus_opt = repvar_cmd->add_option(
      "--demigenus", repvar.demigenus_text, "demigenus R of a non-orientable surface, or A..B");
  genus_opt->excludes(demigenus_opt);
  repvar_cmd->add_flag("--twisted", repvar.twisted, "twisted representation variety");
  repvar_cmd->add_option("--format", repvar.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  repvar_cmd->add_option("--out", repvar.out_path, "write output to a file");

  CharstackOptions charstack;
  CLI::App* charstack_cmd =
      app.add_subcommand("charstack", "cohomology series of SU(2)-character stacks (genus <= 3)");
  charstack_cmd->add_option("--genus", charstack.genus, "genus (0..3)")->required();
  charstack_cmd->add_flag("--twisted", charstack.twisted, "twisted character stack");
  CLI::Option* cohomology_opt =
      charstack_cmd->add_option("--cohomology", charstack.cohomology, "cohomology variant")
          ->check(CLI::IsMember({"compact", "ordinary"}));
  charstack_cmd->add_option("--format", charstack.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  charstack_cmd->add_option("--out", charstack.out_path, "write output to a file");

  ExpandOptions expand;
  CLI::App* expand_cmd =
      app.add_subcommand("expand", "atom decomposition of convolution powers");
  expand_cmd->add_option("--object", expand.object, "generator object")
      ->required()
      ->check(CLI::IsMember({"F", "S"}));
  expand_cmd->add_option("--power", expand.power, "convolution power (>= 0)")->required();
  expand_cmd->add_option("--format", expand.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  expand_cmd->add_option("--out", expand.out_path, "write output to a file");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the consistency suite");
  verify_cmd->add_option("--suite", verify.suite, "check selection")
      ->check(CLI::IsMember({"all", "rep", "stack", "k0"}));
  verify_cmd->add_option("--seed", verify.seed, "seed for the sampled property checks");
  verify_cmd->add_flag("--json", verify.json, "emit the report list as JSON");
  verify_cmd->add_option("--out", verify.out_path, "write output to a file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  charstack.cohomology_given = cohomology_opt->count() > 0;

  try {
    if (repvar_cmd->parsed()) return run_repvar(repvar, out);
    if (charstack_cmd->parsed()) return run_charstack(charstack, out, err);
    if (expand_cmd->parsed()) return run_expand(expand, out);
    return run_verify(verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedGenus& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace surfcoh::cli
