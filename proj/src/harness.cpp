#include "tga/harness.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "tga/error.hpp"

namespace tga {

namespace {

Json cyclic_json(std::uint32_t m) { return Json{{"kind", "cyclic"}, {"params", {m}}}; }

Json product_json(const Json& a, const Json& b) { return Json{{"kind", "product"}, {"params", {a, b}}}; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Completed: return "completed";
    case RowStatus::NotAdmissible: return "not_admissible";
    case RowStatus::Error: return "error";
  }
  return "unknown";
}

std::string witness_summary(const std::optional<Witness>& w) {
  if (!w) return "none_found";
  std::string s = std::string(to_string(w->kind())) + "/" + w->source();
  for (const auto& [k, v] : w->labels()) s += " " + k + "=" + v;
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

InstanceSpec parse_instance(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "instance must be an object");
  for (const char* key : {"field", "group"}) {
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("instance is missing \"") + key + "\"");
  }
  InstanceSpec s;
  s.field = j.at("field");
  s.group = j.at("group");
  s.cocycle = j.value("cocycle", Json{{"kind", "trivial"}});
  try {
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("budget")) s.budget = j.at("budget").get<std::uint64_t>();
    s.id = j.value("id", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return s;
}

std::vector<InstanceSpec> parse_catalog(const Json& j) {
  std::vector<InstanceSpec> out;
  const Json* list = &j;
  if (j.is_object() && j.contains("instances")) list = &j.at("instances");
  if (list->is_array()) {
    for (const auto& e : *list) out.push_back(parse_instance(e));
  } else {
    out.push_back(parse_instance(*list));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].id.empty()) out[i].id = "instance-" + std::to_string(i);
  }
  return out;
}

Json instance_to_json(const InstanceSpec& s) {
  Json j{{"id", s.id}, {"field", s.field}, {"group", s.group}, {"cocycle", s.cocycle}};
  if (s.seed) j["seed"] = *s.seed;
  if (s.budget) j["budget"] = *s.budget;
  return j;
}

Instance resolve(const InstanceSpec& spec) {
  const FieldPtr f = field_from_json(spec.field);
  const GroupPtr g = group_from_json(spec.group);
  const CocycleKind kind = cocycle_kind_from_json(spec.cocycle, *g, *f);
  return {spec.id, TwistedGroupAlgebra::make(make_factor_system(kind, g, f)), spec.seed, spec.budget};
}

std::vector<InstanceSpec> default_catalog() {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                                    {7, 1}, {3, 2}, {5, 2}};
  std::vector<std::pair<std::string, Json>> groups;
  for (std::uint32_t m = 1; m <= 6; ++m) groups.emplace_back("C" + std::to_string(m), cyclic_json(m));
  groups.emplace_back("C2xC2", product_json(cyclic_json(2), cyclic_json(2)));
  groups.emplace_back("C2xC4", product_json(cyclic_json(2), cyclic_json(4)));
  groups.emplace_back("C3xC3", product_json(cyclic_json(3), cyclic_json(3)));
  groups.emplace_back("D3", Json{{"kind", "dihedral"}, {"params", {3}}});
  groups.emplace_back("D4", Json{{"kind", "dihedral"}, {"params", {4}}});
  groups.emplace_back("Q8", Json{{"kind", "quaternion8"}, {"params", Json::array()}});
  groups.emplace_back("Q8xC3", product_json(Json{{"kind", "quaternion8"}, {"params", Json::array()}}, cyclic_json(3)));

  std::vector<InstanceSpec> out;
  for (const auto& [p, k] : fields) {
    const Json fj{{"p", p}, {"k", k}};
    const FieldPtr f = field_from_json(fj);
    const std::string flabel = f->name();
    for (const auto& [glabel, gj] : groups) {
      const std::string base = flabel + "/" + glabel + "/";
      out.push_back({base + "trivial", fj, gj, Json{{"kind", "trivial"}}, {}, {}});
      for (std::uint64_t s = 1; s <= 3; ++s) {
        out.push_back({base + "coboundary" + std::to_string(s), fj, gj, Json{{"kind", "coboundary"}, {"seed", s}}, {}, {}});
      }
      const GroupPtr g = group_from_json(gj);
      if (const auto shape = g->cyclic_product_shape()) {
        const std::uint32_t d = std::gcd(shape->first, shape->second);
        for (std::uint32_t key = 0; key < f->order(); ++key) {
          const FieldElem lambda = f->from_lex_key(key);
          if (lambda.code == 0 || lambda == f->one() || f->pow(lambda, d) != f->one()) continue;
          out.push_back({base + "lambda" + format_field_elem(*f, lambda), fj, gj,
                         Json{{"kind", "lambda_pairing"}, {"lambda", elem_to_json(*f, lambda)}}, {}, {}});
        }
      }
    }
  }
  return out;
}

std::string property_label(const PropertyRequest& r) {
  if (r.property == Property::NWeaklyRegular) return "n_weakly_regular(" + std::to_string(r.n) + ")";
  return std::string(to_string(r.property));
}

std::size_t SweepReport::disagreements() const {
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.status == RowStatus::Completed && !r.agreement) ++n;
  }
  return n;
}

Json SweepReport::to_json() const {
  Json rows_json = Json::array();
  Json timings = Json::array();
  std::size_t completed = 0, not_admissible = 0, errors = 0;
  for (const auto& r : rows) {
    Json row{{"instance", r.instance}, {"property", r.property}, {"status", status_name(r.status)}};
    if (r.status == RowStatus::Completed) {
      ++completed;
      row["decider"] = r.decider;
      row["oracle"] = r.oracle;
      row["oracle_mode"] = r.oracle_exhaustive ? "exhaustive" : "sampled";
      row["oracle_conclusive"] = r.oracle_conclusive;
      row["oracle_checked"] = r.oracle_checked;
      if (r.oracle_seed) row["oracle_seed"] = *r.oracle_seed;
      row["agreement"] = r.agreement;
      row["witness"] = r.witness;
    } else {
      (r.status == RowStatus::NotAdmissible ? not_admissible : errors) += 1;
      row["detail"] = r.detail;
    }
    rows_json.push_back(std::move(row));
    timings.push_back(Json{{"instance", r.instance},
                           {"property", r.property},
                           {"decider_ms", r.decider_ms},
                           {"oracle_ms", r.oracle_ms}});
  }
  Json out{{"schema", kSchemaVersion}, {"seed", seed}};
  out["summary"] = Json{{"rows", rows.size()},
                        {"completed", completed},
                        {"not_admissible", not_admissible},
                        {"errors", errors},
                        {"disagreements", disagreements()}};
  out["rows"] = std::move(rows_json);
  out["timings"] = std::move(timings);
  return out;
}

std::string SweepReport::to_csv() const {
  std::ostringstream os;
  os << "csv_version,instance,property,status,decider,oracle,oracle_mode,oracle_conclusive,oracle_checked,agreement,"
        "witness,decider_ms,oracle_ms\n";
  for (const auto& r : rows) {
    const bool done = r.status == RowStatus::Completed;
    auto b = [&](bool v) { return done ? (v ? "true" : "false") : ""; };
    os << 1 << ',' << csv_escape(r.instance) << ',' << csv_escape(r.property) << ',' << status_name(r.status) << ','
       << b(r.decider) << ',' << b(r.oracle) << ',' << (done ? (r.oracle_exhaustive ? "exhaustive" : "sampled") : "")
       << ',' << b(r.oracle_conclusive) << ',' << (done ? std::to_string(r.oracle_checked) : "") << ','
       << b(r.agreement) << ',' << csv_escape(done ? r.witness : r.detail) << ',' << r.decider_ms << ','
       << r.oracle_ms << '\n';
  }
  return os.str();
}

std::string SweepReport::to_markdown() const {
  std::ostringstream os;
  std::size_t completed = 0, not_admissible = 0, errors = 0;
  for (const auto& r : rows) {
    if (r.status == RowStatus::Completed) ++completed;
    if (r.status == RowStatus::NotAdmissible) ++not_admissible;
    if (r.status == RowStatus::Error) ++errors;
  }
  os << "# tga sweep report\n\n";
  os << "- seed: " << seed << "\n- rows: " << rows.size() << "\n- completed: " << completed
     << "\n- not admissible: " << not_admissible << "\n- errors: " << errors
     << "\n- disagreements: " << disagreements() << "\n\n";
  os << "| instance | property | status | decider | oracle | mode | agree | witness |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    const bool done = r.status == RowStatus::Completed;
    auto b = [&](bool v) { return done ? (v ? "true" : "false") : "-"; };
    os << "| " << r.instance << " | " << r.property << " | " << status_name(r.status) << " | " << b(r.decider)
       << " | " << b(r.oracle) << " | " << (done ? (r.oracle_exhaustive ? "exhaustive" : "sampled") : "-") << " | "
       << (done ? (r.agreement ? "yes" : "**NO**") : "-") << " | " << (done ? r.witness : r.detail) << " |\n";
  }
  return os.str();
}

namespace {

SweepRow run_row(const Instance& inst, const PropertyRequest& req, const SweepOptions& opts) {
  SweepRow row;
  row.instance = inst.id;
  row.property = property_label(req);
  const AlgebraPtr& a = inst.algebra;
  OracleOptions oo;
  oo.seed = inst.seed.value_or(opts.seed);
  oo.parallelism = opts.parallelism;

  auto t0 = std::chrono::steady_clock::now();
  Decision d;
  try {
    switch (req.property) {
      case Property::NoNilpotents: d = decide_no_nilpotents(a); break;
      case Property::NWeaklyRegular: d = decide_n_weakly_regular(a, req.n); break;
      case Property::StronglyRegular: d = decide_strongly_regular(a); break;
      case Property::XiN: d = decide_xi_N(a); break;
      case Property::GroupRingNWeak: d = decide_group_ring_n_weak(a); break;
    }
  } catch (const NotAdmissibleError& e) {
    row.status = RowStatus::NotAdmissible;
    row.detail = e.what();
    row.decider_ms = ms_since(t0);
    return row;
  }
  row.decider_ms = ms_since(t0);
  row.decider = d.verdict;
  row.witness = witness_summary(d.witness);

  t0 = std::chrono::steady_clock::now();
  if (req.property == Property::NoNilpotents) {
    oo.exhaustive_cap = opts.nilpotent_cap;
    oo.budget = inst.budget.value_or(opts.budget);
    const auto r = oracle_nilpotent_search(a, oo);
    row.oracle = !r.found;
    row.oracle_exhaustive = r.exhaustive;
    row.oracle_conclusive = r.exhaustive || r.found.has_value();
    row.oracle_checked = r.checked;
    if (!r.exhaustive) row.oracle_seed = r.seed;
  } else {
    oo.exhaustive_cap = opts.scan_cap;
    oo.budget = inst.budget.value_or(opts.scan_budget);
    ScanProperty sp = ScanProperty::NWeak;
    if (req.property == Property::StronglyRegular) sp = ScanProperty::StronglyRegular;
    if (req.property == Property::XiN) sp = ScanProperty::XiN;
    const auto r = oracle_property_scan(a, sp, req.n, oo);
    row.oracle = r.pass;
    row.oracle_exhaustive = r.exhaustive;
    row.oracle_conclusive = r.conclusive;
    row.oracle_checked = r.checked;
    if (!r.exhaustive) row.oracle_seed = r.seed;
  }
  row.oracle_ms = ms_since(t0);
  row.agreement = row.decider == row.oracle;
  return row;
}

}  // namespace

SweepReport run_sweep(const std::vector<InstanceSpec>& catalog, const SweepOptions& opts) {
  SweepReport rep;
  rep.seed = opts.seed;
  for (const auto& spec : catalog) {
    std::optional<Instance> inst;
    std::string err;
    try {
      inst = resolve(spec);
    } catch (const std::exception& e) {
      err = e.what();
    }
    for (const auto& req : opts.properties) {
      if (!inst) {
        SweepRow row;
        row.instance = spec.id;
        row.property = property_label(req);
        row.status = RowStatus::Error;
        row.detail = err;
        rep.rows.push_back(std::move(row));
        continue;
      }
      try {
        rep.rows.push_back(run_row(*inst, req, opts));
      } catch (const std::exception& e) {
        SweepRow row;
        row.instance = spec.id;
        row.property = property_label(req);
        row.status = RowStatus::Error;
        row.detail = e.what();
        rep.rows.push_back(std::move(row));
      }
    }
  }
  return rep;
}

}  // namespace tga
