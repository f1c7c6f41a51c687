#pragma once

// Brute-force checks that the deciders are tested against.  Element spaces up
// to the exhaustive cap are enumerated in index order (element t has
// coefficient codes = base-q digits of t, least significant at u_1); beyond it
// the oracles sample with a seeded mt19937_64.

#include <cstdint>
#include <optional>
#include <string>

#include "tga/algebra.hpp"

namespace tga {

inline constexpr std::uint64_t kDefaultOracleSeed = 20240601;

struct OracleOptions {
  std::uint64_t budget = 100000;
  std::uint64_t seed = kDefaultOracleSeed;
  unsigned parallelism = 1;
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 20;
};

/// q^{|G|}, saturating at UINT64_MAX.
std::uint64_t element_space_size(const AlgebraPtr& ambient);
AlgebraElement element_from_index(const AlgebraPtr& ambient, std::uint64_t index);

struct NilpotentSearchResult {
  std::optional<AlgebraElement> found;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
};

/// First nonzero nilpotent in index order (exhaustive), else constructor
/// candidates followed by `budget` samples.  Past the cap "nothing found" is not a proof.
NilpotentSearchResult oracle_nilpotent_search(const AlgebraPtr& ambient, const OracleOptions& opts = {});

enum class ScanProperty { Regular, StronglyRegular, NWeak, XiN };

std::string_view to_string(ScanProperty p);

struct ScanReport {
  ScanProperty property = ScanProperty::Regular;
  std::uint32_t n = 0;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::uint64_t seed = 0;
  /// Every checked element had a verified certificate.
  bool pass = true;
  /// The verdict is settled: either a refuted element was found or every element
  /// of the space was certified.
  bool conclusive = false;
  std::optional<AlgebraElement> counterexample;
  /// Elements with neither certificate nor refutation (noncommutative n-weak only).
  std::uint64_t undetermined = 0;
};

/// Per-element check.  Certificates come from the linear solvers; regular,
/// strongly regular and xi_N are decided exactly for every element.  n-weak on a
/// noncommutative ambient is certified via b = 1 and refuted by a^2 = 0, a != 0.
ScanReport oracle_property_scan(const AlgebraPtr& ambient, ScanProperty property, std::uint32_t n = 2,
                                const OracleOptions& opts = {});

}  // namespace tga
