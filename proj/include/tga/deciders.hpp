#pragma once

// Decision procedures for the ring properties of K_rho G, with the nilpotent
// constructions that certify negative answers.
//
// Constructions work in the v-basis v_g = mu(g) u_g obtained from
// unit_power_rescaling, where v_g^{ord g} = 1.  All returned elements live in
// the original algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tga/algebra.hpp"
#include "tga/error.hpp"
#include "tga/witness.hpp"

namespace tga {

struct VBasis {
  AlgebraPtr ambient;
  Rescaling mu;
  std::vector<AlgebraElement> v;  // v[g] = mu(g) u_g
};

/// nullopt when some mu(g) does not exist in K.
std::optional<VBasis> make_v_basis(const AlgebraPtr& ambient);

/// True iff u_h = v_g u_h v_g^i for some 0 <= i < ord g (checked with v_h).
bool unit_commutation_holds(const VBasis& vb, GroupElem g, GroupElem h);

/// First pair (g,h) in index order with x = (v_g - 1) v_h (1 + v_g + ... + v_g^{n-1}) != 0.
std::optional<Witness> witness_unit_commutation(const AlgebraPtr& ambient);
/// s = 1 + v_g + ... + v_g^{p-1} for the first g of order p.
std::optional<Witness> witness_char_p(const AlgebraPtr& ambient);
/// w = alpha (v_g^2 v_h - v_h) + beta (v_g^3 v_h - v_g v_h) on the first quaternion pair
/// (g of order 4, h^2 = g^2, h^{-1} g h = g^{-1}) with v_h = v_g v_h v_g.
std::optional<Witness> witness_quaternion(const AlgebraPtr& ambient);
std::optional<Witness> witness_quaternion(const AlgebraPtr& ambient, FieldElem alpha, FieldElem beta);
/// Tries char_p, unit_commutation, quaternion in that order.
std::optional<Witness> find_nilpotent_witness(const AlgebraPtr& ambient);

struct ClosureReport {
  bool passes = true;
  std::vector<RootFailure> missing_roots;
  bool needs_isotropic = false;
  bool isotropic_ok = true;
  /// Smallest multiple k' of k for which GF(p^k') supplies everything missing.
  std::optional<std::uint32_t> suggested_degree;
};

ClosureReport sufficiently_closed(const AlgebraPtr& ambient);

class NotAdmissibleError : public Error {
 public:
  explicit NotAdmissibleError(ClosureReport report);
  const ClosureReport& report() const { return report_; }

 private:
  ClosureReport report_;
};

enum class Property { NoNilpotents, NWeaklyRegular, StronglyRegular, XiN, GroupRingNWeak };

std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view s);

struct Condition {
  std::string name;
  bool holds = false;
};

struct Decision {
  Property property = Property::NoNilpotents;
  std::uint32_t n = 0;  // only for NWeaklyRegular
  bool verdict = false;
  std::vector<Condition> conditions;
  std::optional<Witness> witness;
  /// Group-ring decider on hamiltonian G: nontrivial solution of x^2 + y^2 + z^2 = 0.
  std::optional<std::vector<FieldElem>> isotropic_solution;

  const Condition* condition(std::string_view name) const;
};

Decision decide_no_nilpotents(const AlgebraPtr& ambient);
Decision decide_n_weakly_regular(const AlgebraPtr& ambient, std::uint32_t n);
Decision decide_strongly_regular(const AlgebraPtr& ambient);
Decision decide_xi_N(const AlgebraPtr& ambient);
/// Trivial rho only; no closure hypothesis.
Decision decide_group_ring_n_weak(const AlgebraPtr& ambient);

struct EquivalenceReport {
  std::vector<Decision> n_weak;  // n = 2..n_max
  Decision strongly_regular;
  bool conditions_hold = false;
  bool all_equal = false;
  std::size_t samples = 0;
  std::size_t sample_witnesses = 0;  // sampled elements with a strong-regularity witness
};

EquivalenceReport decide_equivalences(const AlgebraPtr& ambient, std::uint32_t n_max, std::uint64_t seed = 1,
                                      std::size_t samples = 32);

}  // namespace tga
