#pragma once

// Normalized factor systems rho: G x G -> U(K) for twisted group algebras
// (trivial action of G on K).  The basis multiplication is u_g u_h = rho(g,h) u_{gh};
// associativity of that rule is the cocycle identity
//   rho(g,h) rho(gh,f) = rho(h,f) rho(g,hf).

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/finite_field.hpp"
#include "tga/group.hpp"

namespace tga {

class FactorSystem {
 public:
  /// Stores the table as given (row-major, entry g * |G| + h).  Dimensions are
  /// checked; validity is not -- see validate_factor_system.
  FactorSystem(FieldPtr field, GroupPtr group, std::vector<FieldElem> table, std::string label = "explicit");

  const Field& field() const { return *field_; }
  const Group& group() const { return *group_; }
  const FieldPtr& field_ptr() const { return field_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::string& label() const { return label_; }

  FieldElem operator()(GroupElem g, GroupElem h) const { return table_[g.index * group_->order() + h.index]; }
  FieldElem at(std::uint32_t g, std::uint32_t h) const { return table_[g * group_->order() + h]; }
  const std::vector<FieldElem>& entries() const { return table_; }

  bool operator==(const FactorSystem& other) const;

 private:
  FieldPtr field_;
  GroupPtr group_;
  std::vector<FieldElem> table_;
  std::string label_;
};

struct ValidationReport {
  std::vector<std::pair<GroupElem, GroupElem>> normalization_violations;
  std::vector<std::array<GroupElem, 3>> identity_violations;
  bool valid() const { return normalization_violations.empty() && identity_violations.empty(); }
};

/// Throws ZeroEntry if an entry is 0 (not a unit).
ValidationReport validate_factor_system(const FactorSystem& rho);

struct SymmetryReport {
  bool symmetric = true;
  std::optional<std::pair<GroupElem, GroupElem>> counterexample;
};

/// rho(g,h) = rho(h,g) for every commuting pair; first violating pair in index order.
SymmetryReport is_symmetric(const FactorSystem& rho);

/// alpha_g = prod_{i=1}^{n-1} rho(g, g^i), so that u_g^n = alpha_g u_1 with n = ord(g).
FieldElem power_scalar(const FactorSystem& rho, GroupElem g);

/// Diagonal change of basis u_g -> u_g mu(g).
struct Rescaling {
  std::vector<FieldElem> mu;

  /// Checks mu(1) = 1 and all values nonzero; throws PreconditionFailed otherwise.
  static Rescaling make(const Field& field, std::vector<FieldElem> mu);
  static Rescaling identity(std::size_t n) { return {std::vector<FieldElem>(n, FieldElem{1})}; }
};

Rescaling compose(const Field& field, const Rescaling& a, const Rescaling& b);
Rescaling pointwise_inverse(const Field& field, const Rescaling& a);

/// rho'(g,h) = rho(g,h) mu(g) mu(h) mu(gh)^{-1}.
FactorSystem apply_rescaling(const FactorSystem& rho, const Rescaling& mu);

struct RootFailure {
  GroupElem g;
  std::uint32_t order = 1;
  FieldElem alpha;
};

struct UnitPowerRescaling {
  std::optional<Rescaling> mu;
  std::optional<FactorSystem> rescaled;
  std::vector<RootFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// mu(g) = nth_root(alpha_g^{-1}, ord g) for every g; on success every power
/// scalar of the rescaled system is 1, i.e. v_g^{ord g} = 1 for v_g = u_g mu(g).
UnitPowerRescaling unit_power_rescaling(const FactorSystem& rho);

struct CocycleKind {
  enum class Kind { Trivial, LambdaPairing, Coboundary, Explicit } kind = Kind::Trivial;
  FieldElem lambda{};
  std::vector<FieldElem> mu;
  std::vector<std::vector<FieldElem>> table;

  static CocycleKind trivial() { return {}; }
  static CocycleKind lambda_pairing(FieldElem l) { return {Kind::LambdaPairing, l, {}, {}}; }
  static CocycleKind coboundary(std::vector<FieldElem> m) { return {Kind::Coboundary, {}, std::move(m), {}}; }
  static CocycleKind explicit_table(std::vector<std::vector<FieldElem>> t) {
    return {Kind::Explicit, {}, {}, std::move(t)};
  }
};

/// lambda_pairing needs G = C_m x C_n and lambda^{gcd(m,n)} = 1 (IncompatibleLambda
/// otherwise); rho((a1,a2),(b1,b2)) = lambda^{a2 b1}.  Explicit tables that fail
/// validation throw InvalidTable.
FactorSystem make_factor_system(const CocycleKind& kind, GroupPtr group, FieldPtr field);

}  // namespace tga
