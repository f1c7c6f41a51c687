#pragma once

// Self-verifying certificates.  A Witness only exists if its recorded equation
// evaluated true when it was built; every factory returns nullopt otherwise.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/algebra.hpp"

namespace tga {

enum class WitnessKind { NilpotentElement, RegularityPair, StrongRegularityPair, NWeakPair, XiNPair };

std::string_view to_string(WitnessKind k);

class Witness {
 public:
  /// x != 0 and x^exponent = 0.
  static std::optional<Witness> nilpotent(std::string source, AlgebraElement x, std::uint64_t exponent);
  /// a b a = a.
  static std::optional<Witness> regularity(AlgebraElement a, AlgebraElement b);
  /// b a^2 = a.
  static std::optional<Witness> strong_regularity(AlgebraElement a, AlgebraElement b);
  /// a b a^n c = a.
  static std::optional<Witness> n_weak(AlgebraElement a, AlgebraElement b, AlgebraElement c, std::uint32_t n);
  /// z = a^2 b - a, z central and nilpotent.
  static std::optional<Witness> xi_n(AlgebraElement a, AlgebraElement b);

  WitnessKind kind() const { return kind_; }
  const std::string& source() const { return source_; }
  const std::string& equation() const { return equation_; }
  bool holds() const { return holds_; }
  const std::vector<std::pair<std::string, AlgebraElement>>& elements() const { return elements_; }
  const AlgebraElement& get(const std::string& name) const;
  /// Free-form labels (e.g. the group elements g, h a constructor used).
  const std::vector<std::pair<std::string, std::string>>& labels() const { return labels_; }
  Witness& label(std::string key, std::string value);

  /// Re-evaluates the equation from the stored elements.
  bool recheck() const;

 private:
  Witness() = default;

  WitnessKind kind_ = WitnessKind::NilpotentElement;
  std::string source_;
  std::string equation_;
  bool holds_ = false;
  std::uint64_t exponent_ = 0;
  std::vector<std::pair<std::string, AlgebraElement>> elements_;
  std::vector<std::pair<std::string, std::string>> labels_;
};

/// Solves a b a = a for b (linear in b).
std::optional<Witness> regularity_witness(const AlgebraElement& a);
/// Solves b a^2 = a for b.
std::optional<Witness> strong_regularity_witness(const AlgebraElement& a);
/// Commutative ambients: solves a^2 b = a, sets c = b^{n-1}.  Throws NotCommutative.
std::optional<Witness> n_weak_witness(const AlgebraElement& a, std::uint32_t n);
/// Solves a^2 b - a in N, N the central nilradical (the nilradical when commutative).
std::optional<Witness> xi_n_witness(const AlgebraElement& a);
std::optional<Witness> xi_n_witness(const AlgebraElement& a, const std::vector<AlgebraElement>& central_nil);

}  // namespace tga
