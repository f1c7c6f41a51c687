#include "tga/serialize.hpp"

#include <cctype>
#include <random>

#include "tga/error.hpp"

namespace tga {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::uint32_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint32_t>();
}

}  // namespace

Json field_to_json(const Field& f) {
  return Json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.spec().modulus}};
}

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p")) parse_error("field needs an object with \"p\"");
  const std::uint32_t p = as_uint(j.at("p"), "p");
  const std::uint32_t k = j.contains("k") ? as_uint(j.at("k"), "k") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    if (!j.at("modulus").is_array()) parse_error("modulus must be a list");
    modulus.emplace();
    for (const auto& c : j.at("modulus")) modulus->push_back(as_uint(c, "modulus coefficient"));
  }
  return Field::make(p, k, modulus);
}

Json elem_to_json(const Field& f, FieldElem a) { return Json(f.coeffs(a)); }

FieldElem elem_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) {
    if (f.degree() != 1) parse_error("extension-field elements must be coefficient lists");
    return f.from_int(j.get<std::int64_t>());
  }
  if (!j.is_array() || j.size() != f.degree()) {
    parse_error("field element must be a list of " + std::to_string(f.degree()) + " coefficients");
  }
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    const std::uint32_t v = as_uint(x, "coefficient");
    if (v >= f.characteristic()) parse_error("coefficient out of range");
    c.push_back(v);
  }
  return f.from_coeffs(c);
}

std::string format_field_elem(const Field& f, FieldElem a) {
  const auto c = f.coeffs(a);
  if (f.degree() == 1) return std::to_string(c[0]);
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

GroupPtr group_from_json(const Json& j) {
  if (!j.is_object()) parse_error("group descriptor must be an object");
  if (j.contains("table")) {
    std::vector<std::vector<std::uint32_t>> t;
    if (!j.at("table").is_array()) parse_error("group table must be a list of rows");
    for (const auto& row : j.at("table")) {
      if (!row.is_array()) parse_error("group table must be a list of rows");
      auto& r = t.emplace_back();
      for (const auto& x : row) r.push_back(as_uint(x, "group table entry"));
    }
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return Group::from_table(std::move(t), std::move(names), j.value("label", "G"));
  }
  if (!j.contains("kind")) parse_error("group descriptor needs \"kind\" or \"table\"");
  const auto kind = j.at("kind").get<std::string>();
  const Json params = j.value("params", Json::array());
  auto param = [&](std::size_t i) {
    if (params.size() <= i) parse_error("group kind '" + kind + "' is missing parameters");
    return as_uint(params[i], "group parameter");
  };
  if (kind == "cyclic") return Group::cyclic(param(0));
  if (kind == "trivial") return Group::cyclic(1);
  if (kind == "dihedral") return Group::dihedral(param(0));
  if (kind == "quaternion8") return Group::quaternion8();
  if (kind == "product") {
    if (params.size() != 2) parse_error("product needs two group descriptors");
    return Group::direct_product(*group_from_json(params[0]), *group_from_json(params[1]));
  }
  parse_error("unknown group kind '" + kind + "'");
}

CocycleKind cocycle_kind_from_json(const Json& j, const Group& g, const Field& f) {
  if (!j.is_object()) parse_error("cocycle descriptor must be an object");
  const auto kind = j.value("kind", std::string("trivial"));
  if (kind == "trivial") return CocycleKind::trivial();
  if (kind == "lambda_pairing") {
    if (!j.contains("lambda")) parse_error("lambda_pairing needs \"lambda\"");
    return CocycleKind::lambda_pairing(elem_from_json(f, j.at("lambda")));
  }
  if (kind == "coboundary") {
    std::vector<FieldElem> mu;
    if (j.contains("mu")) {
      for (const auto& e : j.at("mu")) mu.push_back(elem_from_json(f, e));
    } else if (j.contains("seed")) {
      std::mt19937_64 rng(j.at("seed").get<std::uint64_t>());
      mu.push_back(f.one());
      for (std::size_t i = 1; i < g.order(); ++i) mu.push_back(FieldElem{1 + static_cast<std::uint32_t>(rng() % (f.order() - 1))});
    } else {
      parse_error("coboundary needs \"mu\" or \"seed\"");
    }
    return CocycleKind::coboundary(std::move(mu));
  }
  if (kind == "explicit") {
    if (!j.contains("table") || !j.at("table").is_array()) parse_error("explicit cocycle needs \"table\"");
    std::vector<std::vector<FieldElem>> t;
    for (const auto& row : j.at("table")) {
      if (!row.is_array()) parse_error("cocycle table must be a list of rows");
      auto& r = t.emplace_back();
      for (const auto& e : row) r.push_back(elem_from_json(f, e));
    }
    return CocycleKind::explicit_table(std::move(t));
  }
  parse_error("unknown cocycle kind '" + kind + "'");
}

Json factor_system_to_json(const FactorSystem& rho) {
  const auto n = rho.group().order();
  Json t = Json::array();
  for (std::uint32_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::uint32_t b = 0; b < n; ++b) row.push_back(elem_to_json(rho.field(), rho.at(a, b)));
    t.push_back(std::move(row));
  }
  return Json{{"kind", "explicit"}, {"label", rho.label()}, {"table", std::move(t)}};
}

Json element_to_json(const AlgebraElement& a) {
  Json out = Json::array();
  for (auto c : a.coeffs()) out.push_back(elem_to_json(a.ambient()->field(), c));
  return out;
}

AlgebraElement element_from_json(const AlgebraPtr& ambient, const Json& j) {
  if (j.is_string()) return parse_element(ambient, j.get<std::string>());
  if (!j.is_array() || j.size() != ambient->dim()) parse_error("element must list one coefficient per group element");
  std::vector<FieldElem> c;
  for (const auto& e : j) c.push_back(elem_from_json(ambient->field(), e));
  return AlgebraElement(ambient, std::move(c));
}

std::string format_element(const AlgebraElement& a) {
  const Field& f = a.ambient()->field();
  const Group& g = a.ambient()->group();
  std::string out;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const FieldElem c = a.coeffs()[i];
    if (c.code == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += format_field_elem(f, c);
    } else if (c == f.one()) {
      out += g.name(GroupElem{i});
    } else {
      out += format_field_elem(f, c) + "*" + g.name(GroupElem{i});
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<FieldElem> parse_coef(const Field& f, const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '{') {
    if (s.back() != '}') parse_error("unterminated coefficient list '" + s + "'");
    std::vector<std::uint32_t> c;
    std::string inner = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      const std::size_t comma = inner.find(',', pos);
      const std::string tok = trim(inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        parse_error("bad coefficient list '" + s + "'");
      }
      const auto v = std::stoul(tok);
      if (v >= f.characteristic()) parse_error("coefficient out of range in '" + s + "'");
      c.push_back(static_cast<std::uint32_t>(v));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (c.size() != f.degree()) parse_error("coefficient list '" + s + "' has the wrong length");
    return f.from_coeffs(c);
  }
  if (s.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  if (s.size() > 9) parse_error("coefficient too large: " + s);
  return f.from_int(std::stoll(s));
}

GroupElem parse_name(const Group& g, const std::string& name) {
  if (const auto e = g.find_name(name)) return *e;
  if (name.size() > 2 && name[0] == 'g' && name[1] == '_' &&
      name.find_first_not_of("0123456789", 2) == std::string::npos) {
    const auto i = std::stoul(name.substr(2));
    if (i < g.order()) return GroupElem{static_cast<std::uint32_t>(i)};
  }
  parse_error("unknown group element '" + name + "'");
}

}  // namespace

AlgebraElement parse_element(const AlgebraPtr& ambient, std::string_view expr) {
  const Field& f = ambient->field();
  const Group& g = ambient->group();
  std::vector<FieldElem> coeffs(g.order(), f.zero());
  std::vector<std::pair<bool, std::string>> terms;  // (negated, text)
  {
    int depth = 0;
    bool neg = false;
    std::string cur;
    auto flush = [&](bool next_neg) {
      const std::string t = trim(cur);
      if (t.empty()) {
        if (!terms.empty() || neg) parse_error("empty term in '" + std::string(expr) + "'");
      } else {
        terms.emplace_back(neg, t);
      }
      cur.clear();
      neg = next_neg;
    };
    for (char ch : expr) {
      if (ch == '(' || ch == '{') ++depth;
      if (ch == ')' || ch == '}') --depth;
      if (depth < 0) parse_error("unbalanced brackets in '" + std::string(expr) + "'");
      if (depth == 0 && (ch == '+' || ch == '-')) {
        flush(ch == '-');
        continue;
      }
      cur += ch;
    }
    if (depth != 0) parse_error("unbalanced brackets in '" + std::string(expr) + "'");
    if (trim(cur).empty()) parse_error("expression ends with an operator or is empty");
    flush(false);
  }
  for (const auto& [negated, text] : terms) {
    FieldElem c = f.one();
    GroupElem e{0};
    const std::size_t star = text.find('*');
    if (star != std::string::npos) {
      const auto coef = parse_coef(f, trim(text.substr(0, star)));
      if (!coef) parse_error("bad coefficient in term '" + text + "'");
      c = *coef;
      e = parse_name(g, trim(text.substr(star + 1)));
    } else if (const auto coef = parse_coef(f, text)) {
      c = *coef;
    } else {
      e = parse_name(g, text);
    }
    if (negated) c = f.neg(c);
    coeffs[e.index] = f.add(coeffs[e.index], c);
  }
  return AlgebraElement(ambient, std::move(coeffs));
}

Json witness_to_json(const std::optional<Witness>& w) {
  if (!w) return Json{{"kind", "none_found"}};
  Json elems = Json::object();
  Json exprs = Json::object();
  for (const auto& [name, e] : w->elements()) {
    elems[name] = element_to_json(e);
    exprs[name] = format_element(e);
  }
  Json labels = Json::object();
  for (const auto& [k, v] : w->labels()) labels[k] = v;
  return Json{{"kind", to_string(w->kind())}, {"source", w->source()},     {"equation", w->equation()},
              {"holds", w->recheck()},         {"labels", std::move(labels)}, {"elements", std::move(elems)},
              {"expressions", std::move(exprs)}};
}

Json decision_to_json(const Field& f, const Decision& d) {
  Json out{{"schema", kSchemaVersion}, {"property", to_string(d.property)}};
  if (d.property == Property::NWeaklyRegular) out["n"] = d.n;
  out["verdict"] = d.verdict;
  Json conds = Json::array();
  for (const auto& c : d.conditions) conds.push_back(Json{{"name", c.name}, {"holds", c.holds}});
  out["conditions"] = std::move(conds);
  out["witness"] = witness_to_json(d.witness);
  if (d.isotropic_solution) {
    Json iso = Json::array();
    for (auto e : *d.isotropic_solution) iso.push_back(elem_to_json(f, e));
    out["isotropic_solution"] = std::move(iso);
  }
  return out;
}

Json closure_to_json(const Field& f, const ClosureReport& r) {
  Json missing = Json::array();
  for (const auto& m : r.missing_roots) {
    missing.push_back(Json{{"g", m.g.index}, {"order", m.order}, {"alpha", elem_to_json(f, m.alpha)}});
  }
  Json out{{"passes", r.passes},
           {"missing_roots", std::move(missing)},
           {"needs_isotropic", r.needs_isotropic},
           {"isotropic_ok", r.isotropic_ok}};
  out["suggested_degree"] = r.suggested_degree ? Json(*r.suggested_degree) : Json(nullptr);
  return out;
}

Json validation_to_json(const Group& g, const ValidationReport& r) {
  Json norm = Json::array();
  for (const auto& [a, b] : r.normalization_violations) norm.push_back(Json{g.name(a), g.name(b)});
  Json ident = Json::array();
  for (const auto& t : r.identity_violations) ident.push_back(Json{g.name(t[0]), g.name(t[1]), g.name(t[2])});
  return Json{{"schema", kSchemaVersion},
              {"valid", r.valid()},
              {"normalization_violations", std::move(norm)},
              {"identity_violations", std::move(ident)}};
}

Json nilpotent_search_to_json(const NilpotentSearchResult& r) {
  Json out{{"schema", kSchemaVersion}, {"exhaustive", r.exhaustive}, {"checked", r.checked}};
  if (!r.exhaustive) out["seed"] = r.seed;
  out["found"] = r.found.has_value();
  if (r.found) {
    out["element"] = element_to_json(*r.found);
    out["expression"] = format_element(*r.found);
  }
  return out;
}

Json scan_to_json(const ScanReport& r) {
  Json out{{"schema", kSchemaVersion}, {"property", to_string(r.property)}};
  if (r.property == ScanProperty::NWeak) out["n"] = r.n;
  out["exhaustive"] = r.exhaustive;
  if (!r.exhaustive) out["seed"] = r.seed;
  out["checked"] = r.checked;
  out["pass"] = r.pass;
  out["conclusive"] = r.conclusive;
  out["undetermined"] = r.undetermined;
  if (r.counterexample) {
    out["counterexample"] = element_to_json(*r.counterexample);
    out["counterexample_expression"] = format_element(*r.counterexample);
  }
  return out;
}

}  // namespace tga
