// tga: command-line front end.
//
// Exit codes: 0 success; 1 invalid factor system (validate) or a sweep
// disagreement; 2 parse/config error; 3 instance not admissible; 4 no witness.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tga/deciders.hpp"
#include "tga/error.hpp"
#include "tga/harness.hpp"
#include "tga/oracles.hpp"
#include "tga/serialize.hpp"
#include "tga/witness.hpp"

namespace {

using tga::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotAdmissible = 3;
constexpr int kExitNoWitness = 4;

struct Common {
  std::string config;
  std::string property;
  std::string kind;
  std::string element;
  std::uint32_t n = 2;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  unsigned parallelism = 1;
  std::string out_dir;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t effective_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("TGA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("TGA_SEED is not an integer: ") + env);
    }
  }
  return tga::kDefaultOracleSeed;
}

Json load_json(const std::string& path) {
  if (path.empty()) throw ConfigError("--config is required");
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

tga::Instance load_instance(const Common& c) {
  const auto specs = tga::parse_catalog(load_json(c.config));
  if (specs.size() != 1) throw ConfigError("expected a single instance in '" + c.config + "'");
  return tga::resolve(specs[0]);
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

void emit(const Common& c, const Json& report) {
  std::cout << report.dump(2) << "\n";
  if (c.out_dir.empty()) return;
  std::filesystem::create_directories(c.out_dir);
  write_file(std::filesystem::path(c.out_dir) / "report.json", report.dump(2) + "\n");
}

int cmd_validate(const Common& c) {
  const auto specs = tga::parse_catalog(load_json(c.config));
  if (specs.size() != 1) throw ConfigError("expected a single instance");
  const auto& spec = specs[0];
  const auto f = tga::field_from_json(spec.field);
  const auto g = tga::group_from_json(spec.group);
  const auto kind = tga::cocycle_kind_from_json(spec.cocycle, *g, *f);
  std::optional<tga::FactorSystem> rho;
  if (kind.kind == tga::CocycleKind::Kind::Explicit) {
    // Build the raw table so violations can be listed rather than rejected.
    const auto n = g->order();
    if (kind.table.size() != n) throw ConfigError("explicit table must have |G| rows");
    std::vector<tga::FieldElem> flat;
    for (const auto& row : kind.table) {
      if (row.size() != n) throw ConfigError("explicit table must have |G| columns");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    rho.emplace(f, g, std::move(flat));
  } else {
    rho.emplace(tga::make_factor_system(kind, g, f));
  }
  Json report;
  try {
    report = tga::validation_to_json(*g, tga::validate_factor_system(*rho));
  } catch (const tga::Error& e) {
    if (e.code() != tga::ErrorCode::ZeroEntry) throw;
    report = Json{{"schema", tga::kSchemaVersion}, {"valid", false}, {"error", e.what()}};
  }
  emit(c, report);
  return report.at("valid").get<bool>() ? kExitOk : kExitInvalid;
}

int cmd_decide(const Common& c) {
  const auto inst = load_instance(c);
  const auto prop = tga::parse_property(c.property);
  if (!prop) throw ConfigError("unknown property '" + c.property + "'");
  const auto& f = inst.algebra->field();
  try {
    tga::Decision d;
    switch (*prop) {
      case tga::Property::NoNilpotents: d = tga::decide_no_nilpotents(inst.algebra); break;
      case tga::Property::NWeaklyRegular: d = tga::decide_n_weakly_regular(inst.algebra, c.n); break;
      case tga::Property::StronglyRegular: d = tga::decide_strongly_regular(inst.algebra); break;
      case tga::Property::XiN: d = tga::decide_xi_N(inst.algebra); break;
      case tga::Property::GroupRingNWeak: d = tga::decide_group_ring_n_weak(inst.algebra); break;
    }
    emit(c, tga::decision_to_json(f, d));
    return kExitOk;
  } catch (const tga::NotAdmissibleError& e) {
    Json report{{"schema", tga::kSchemaVersion}, {"error", "NotAdmissible"}, {"message", e.what()}};
    report["closure"] = tga::closure_to_json(f, e.report());
    emit(c, report);
    return kExitNotAdmissible;
  }
}

int cmd_witness(const Common& c) {
  const auto inst = load_instance(c);
  const auto& a = inst.algebra;
  auto element = [&] {
    if (c.element.empty()) throw ConfigError("--element is required for kind '" + c.kind + "'");
    return tga::parse_element(a, c.element);
  };
  std::optional<tga::Witness> w;
  if (c.kind == "unit_commutation") {
    w = tga::witness_unit_commutation(a);
  } else if (c.kind == "char_p") {
    w = tga::witness_char_p(a);
  } else if (c.kind == "quaternion") {
    w = tga::witness_quaternion(a);
  } else if (c.kind == "nilpotent") {
    w = tga::find_nilpotent_witness(a);
  } else if (c.kind == "regularity") {
    w = tga::regularity_witness(element());
  } else if (c.kind == "strong_regularity") {
    w = tga::strong_regularity_witness(element());
  } else if (c.kind == "n_weak") {
    w = tga::n_weak_witness(element(), c.n);
  } else if (c.kind == "xi_N") {
    w = tga::xi_n_witness(element());
  } else {
    throw ConfigError("unknown witness kind '" + c.kind + "'");
  }
  Json report = tga::witness_to_json(w);
  report["schema"] = tga::kSchemaVersion;
  emit(c, report);
  return w ? kExitOk : kExitNoWitness;
}

int cmd_oracle(const Common& c) {
  const auto inst = load_instance(c);
  tga::OracleOptions oo;
  oo.seed = c.seed ? *c.seed : inst.seed.value_or(effective_seed(c));
  oo.budget = c.budget.value_or(inst.budget.value_or(oo.budget));
  oo.parallelism = c.parallelism;
  const std::string prop = c.property.empty() ? "nilpotent" : c.property;
  if (prop == "nilpotent" || prop == "no_nilpotents") {
    emit(c, tga::nilpotent_search_to_json(tga::oracle_nilpotent_search(inst.algebra, oo)));
    return kExitOk;
  }
  tga::ScanProperty sp;
  if (prop == "regular") {
    sp = tga::ScanProperty::Regular;
  } else if (prop == "strongly_regular") {
    sp = tga::ScanProperty::StronglyRegular;
  } else if (prop == "n_weak" || prop == "n_weakly_regular") {
    sp = tga::ScanProperty::NWeak;
  } else if (prop == "xi_N") {
    sp = tga::ScanProperty::XiN;
  } else {
    throw ConfigError("unknown oracle property '" + prop + "'");
  }
  emit(c, tga::scan_to_json(tga::oracle_property_scan(inst.algebra, sp, c.n, oo)));
  return kExitOk;
}

int cmd_sweep(const Common& c) {
  const auto catalog = c.config.empty() ? tga::default_catalog() : tga::parse_catalog(load_json(c.config));
  tga::SweepOptions so;
  so.seed = effective_seed(c);
  so.parallelism = c.parallelism;
  if (c.budget) {
    so.budget = *c.budget;
    so.scan_budget = *c.budget;
  }
  if (!c.property.empty()) {
    so.properties.clear();
    std::stringstream ss(c.property);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto p = tga::parse_property(item);
      if (!p) throw ConfigError("unknown property '" + item + "'");
      so.properties.push_back({*p, c.n});
    }
  }
  const auto rep = tga::run_sweep(catalog, so);
  const Json j = rep.to_json();
  std::cout << "rows: " << rep.rows.size() << ", disagreements: " << rep.disagreements() << "\n";
  if (!c.out_dir.empty()) {
    std::filesystem::create_directories(c.out_dir);
    const std::filesystem::path dir(c.out_dir);
    write_file(dir / "report.json", j.dump(2) + "\n");
    write_file(dir / "report.csv", rep.to_csv());
    write_file(dir / "report.md", rep.to_markdown());
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return rep.disagreements() == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tga: twisted group algebras over finite fields"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", c.config, "instance or catalog JSON");
    sub->add_option("--property", c.property, "property name");
    sub->add_option("--n", c.n, "exponent for n-weak regularity")->check(CLI::Range(2u, 1000u));
    sub->add_option("--seed", c.seed, "oracle seed (falls back to $TGA_SEED)");
    sub->add_option("--budget", c.budget, "sample budget beyond the exhaustive cap");
    sub->add_option("--parallelism", c.parallelism, "oracle worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--out-dir", c.out_dir, "directory for report files");
  };
  auto* validate = app.add_subcommand("validate", "check the factor system");
  auto* decide = app.add_subcommand("decide", "decide a property");
  auto* witness = app.add_subcommand("witness", "build a certificate");
  auto* oracle = app.add_subcommand("oracle", "brute-force check");
  auto* sweep = app.add_subcommand("sweep", "decider vs oracle over a catalog");
  for (auto* s : {validate, decide, witness, oracle, sweep}) add_common(s);
  witness->add_option("--kind", c.kind, "unit_commutation|char_p|quaternion|nilpotent|regularity|"
                                        "strong_regularity|n_weak|xi_N")
      ->required();
  witness->add_option("--element", c.element, "element expression, e.g. \"1+2*g\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (validate->parsed()) return cmd_validate(c);
    if (decide->parsed()) return cmd_decide(c);
    if (witness->parsed()) return cmd_witness(c);
    if (oracle->parsed()) return cmd_oracle(c);
    if (sweep->parsed()) return cmd_sweep(c);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const tga::Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
