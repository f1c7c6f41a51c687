#pragma once

// Instance catalogs and decider-vs-oracle sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tga/deciders.hpp"
#include "tga/oracles.hpp"
#include "tga/serialize.hpp"

namespace tga {

struct InstanceSpec {
  std::string id;
  Json field;
  Json group;
  Json cocycle;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
};

struct Instance {
  std::string id;
  AlgebraPtr algebra;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
};

/// Throws ParseError on malformed descriptors; construction errors propagate.
InstanceSpec parse_instance(const Json& j);
/// Accepts a single instance, an array, or {"instances": [...]}.
std::vector<InstanceSpec> parse_catalog(const Json& j);
Json instance_to_json(const InstanceSpec& s);
Instance resolve(const InstanceSpec& spec);

/// Fields GF(2,3,4,5,7,9,25) x groups C1..C6, C2xC2, C2xC4, C3xC3, D3, D4, Q8, Q8xC3,
/// each with the trivial system, three seeded coboundaries and every nontrivial
/// lambda pairing the group admits.
std::vector<InstanceSpec> default_catalog();

struct PropertyRequest {
  Property property = Property::NoNilpotents;
  std::uint32_t n = 2;
};

std::string property_label(const PropertyRequest& r);

struct SweepOptions {
  std::vector<PropertyRequest> properties{{Property::NoNilpotents, 2}, {Property::NWeaklyRegular, 2}, {Property::XiN, 2}};
  std::uint64_t seed = kDefaultOracleSeed;
  std::uint64_t budget = 100000;
  unsigned parallelism = 1;
  std::uint64_t nilpotent_cap = std::uint64_t{1} << 20;
  /// Property scans solve a linear system per element, so they get a lower cap and budget.
  std::uint64_t scan_cap = std::uint64_t{1} << 16;
  std::uint64_t scan_budget = 10000;
};

enum class RowStatus { Completed, NotAdmissible, Error };

struct SweepRow {
  std::string instance;
  std::string property;
  RowStatus status = RowStatus::Completed;
  bool decider = false;
  bool oracle = false;
  bool oracle_exhaustive = false;
  bool oracle_conclusive = false;
  std::uint64_t oracle_checked = 0;
  std::optional<std::uint64_t> oracle_seed;
  bool agreement = true;
  std::string witness;  // "kind/source" or "none_found"
  std::string detail;   // error message or closure summary
  double decider_ms = 0;
  double oracle_ms = 0;
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::vector<SweepRow> rows;

  std::size_t disagreements() const;
  /// Deterministic content first; wall-clock timings only under "timings".
  Json to_json() const;
  std::string to_csv() const;
  std::string to_markdown() const;
};

SweepReport run_sweep(const std::vector<InstanceSpec>& catalog, const SweepOptions& opts);

}  // namespace tga
