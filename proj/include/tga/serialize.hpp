#pragma once

// JSON encodings and the element expression language.
//
//   field     {"p": 5, "k": 1, "modulus": [..]?}
//   element   coefficient list, constant term first (a bare int is accepted for prime fields)
//   group     {"kind": "cyclic"|"dihedral"|"quaternion8"|"product", "params": [...]} or {"table": [[..]]}
//   cocycle   {"kind": "trivial"|"lambda_pairing"|"coboundary"|"explicit",
//              "lambda": elem?, "mu": [elem..]?, "seed": int?, "table": [[elem..]]?}
//
// Expressions: terms joined by + or -, each `coef*name`, `name` or `coef`.
// coef is an integer (reduced into the prime field) or a brace list {c0,c1,..};
// name is a display name ("g^2h", "(g,1)") or a canonical index name g_i.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tga/algebra.hpp"
#include "tga/cocycle.hpp"
#include "tga/deciders.hpp"
#include "tga/finite_field.hpp"
#include "tga/group.hpp"
#include "tga/oracles.hpp"
#include "tga/witness.hpp"

namespace tga {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json elem_to_json(const Field& f, FieldElem a);
FieldElem elem_from_json(const Field& f, const Json& j);
/// Human form: an integer for prime fields, {c0,c1,..} otherwise.
std::string format_field_elem(const Field& f, FieldElem a);

GroupPtr group_from_json(const Json& j);

/// Coboundaries given by "seed" draw mu(g) for g != 1 uniformly from the units.
CocycleKind cocycle_kind_from_json(const Json& j, const Group& g, const Field& f);
Json factor_system_to_json(const FactorSystem& rho);

Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const AlgebraPtr& ambient, const Json& j);
std::string format_element(const AlgebraElement& a);
/// Throws ParseError.
AlgebraElement parse_element(const AlgebraPtr& ambient, std::string_view expr);

Json witness_to_json(const std::optional<Witness>& w);
Json decision_to_json(const Field& f, const Decision& d);
Json closure_to_json(const Field& f, const ClosureReport& r);
Json validation_to_json(const Group& g, const ValidationReport& r);
Json nilpotent_search_to_json(const NilpotentSearchResult& r);
Json scan_to_json(const ScanReport& r);

}  // namespace tga
