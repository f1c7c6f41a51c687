#pragma once

// Twisted group algebras K_rho G: elements sum_g u_g alpha_g, stored densely
// in canonical group order, with u_g u_h = rho(g,h) u_{gh}.
//
// Linear-algebra views work over the prime field: an element is the
// GF(p)-vector of length k|G| whose entry g*k + i is coefficient i of alpha_g.

#include <memory>
#include <span>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/finite_field.hpp"
#include "tga/group.hpp"
#include "tga/linalg.hpp"

namespace tga {

class TwistedGroupAlgebra {
 public:
  /// Throws InvalidTable if rho fails validation.
  static std::shared_ptr<const TwistedGroupAlgebra> make(FactorSystem rho);

  const Field& field() const { return rho_.field(); }
  const Group& group() const { return rho_.group(); }
  const FieldPtr& field_ptr() const { return rho_.field_ptr(); }
  const GroupPtr& group_ptr() const { return rho_.group_ptr(); }
  const FactorSystem& factor_system() const { return rho_; }

  std::size_t dim() const { return n_; }
  std::size_t prime_dim() const { return n_ * field().degree(); }
  /// G abelian and rho symmetric.
  bool is_commutative() const { return commutative_; }

  /// out = a * b on raw coefficient arrays of length dim(); out must not alias a or b.
  void mul_into(const FieldElem* a, const FieldElem* b, FieldElem* out) const;

 private:
  explicit TwistedGroupAlgebra(FactorSystem rho);

  FactorSystem rho_;
  std::size_t n_ = 0;
  bool commutative_ = false;
  std::vector<std::uint32_t> prod_;     // gh
  std::vector<std::uint32_t> log_rho_;  // log rho(g,h)
};

using AlgebraPtr = std::shared_ptr<const TwistedGroupAlgebra>;

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr ambient, std::vector<FieldElem> coeffs);

  static AlgebraElement zero(AlgebraPtr ambient);
  static AlgebraElement one(AlgebraPtr ambient);
  /// c u_g
  static AlgebraElement basis(AlgebraPtr ambient, GroupElem g, std::optional<FieldElem> c = {});
  static AlgebraElement from_prime_vector(AlgebraPtr ambient, std::span<const std::uint32_t> v);

  const AlgebraPtr& ambient() const { return ambient_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  FieldElem coeff(GroupElem g) const { return coeffs_[g.index]; }
  PrimeVector to_prime_vector() const;

  bool is_zero() const;
  std::vector<GroupElem> support() const;

  AlgebraElement operator+(const AlgebraElement& b) const;
  AlgebraElement operator-(const AlgebraElement& b) const;
  AlgebraElement operator*(const AlgebraElement& b) const;
  AlgebraElement operator-() const;
  AlgebraElement scaled(FieldElem c) const;
  AlgebraElement pow(std::uint64_t e) const;

  bool operator==(const AlgebraElement& b) const;

 private:
  void check_same(const AlgebraElement& b) const;

  AlgebraPtr ambient_;
  std::vector<FieldElem> coeffs_;
};

enum class AlgebraOp { Add, Sub, Mul, ScalarMul, Neg };

/// alg_arith: ScalarMul uses `scalar`, Neg ignores b.  Throws AmbientMismatch.
AlgebraElement alg_arith(AlgebraOp op, const AlgebraElement& a, const AlgebraElement& b, FieldElem scalar = {1});

std::vector<GroupElem> support(const AlgebraElement& a);

enum class Side { Left, Right };

/// Matrix of x -> a x (Left) or x -> x a (Right) on the k|G|-dimensional GF(p)-space.
PrimeMatrix left_right_rep(const AlgebraElement& a, Side side);

/// a^{2^t} = 0 for the least 2^t >= |G|.
bool is_nilpotent(const AlgebraElement& a);
bool is_central(const AlgebraElement& a);
/// GF(p)-basis of the center.
std::vector<AlgebraElement> center_basis(const AlgebraPtr& ambient);

/// GF(p)-basis of the nilradical of a commutative ambient: the kernel of the
/// e-th Frobenius iterate x -> x^{p^e}, p^e >= k|G|.  Throws NotCommutative.
std::vector<AlgebraElement> nilradical_commutative(const AlgebraPtr& ambient);
/// GF(p)-basis of the central nilpotent elements (the nilradical of the center).
/// Equals nilradical_commutative on commutative ambients.
std::vector<AlgebraElement> central_nilradical(const AlgebraPtr& ambient);

/// True iff v lies in the GF(p)-span of `basis`.
bool in_span(const std::vector<AlgebraElement>& basis, const AlgebraElement& v);

struct Restriction {
  AlgebraElement y;
  Subgroup subgroup;
};

/// Given a x b = c, truncates x to H = <Supp a, Supp b, Supp c>.  The truncation
/// y satisfies a y b = c.  Throws PreconditionFailed if a x b != c.
Restriction restrict_equation(const AlgebraElement& a, const AlgebraElement& x, const AlgebraElement& b,
                              const AlgebraElement& c);

}  // namespace tga
