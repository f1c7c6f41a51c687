#pragma once

// Exact arithmetic in GF(p^k), q = p^k <= 2^16.
//
// Elements are stored as a compact code: the coefficient sequence
// (c_0, ..., c_{k-1}) of the residue polynomial, read as the base-p integer
// c_0 + c_1 p + ... + c_{k-1} p^{k-1}.  Multiplication goes through log/exp
// tables built from a primitive element; addition is a residue add (k = 1),
// xor (p = 2) or a Zech-logarithm lookup otherwise.
//
// "Lexicographic" order on elements always means the order of the coefficient
// sequence with the constant term compared first.  It is used for every
// deterministic tie-break (roots, isotropic vectors, modulus selection).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tga {

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct FieldElem {
  std::uint32_t code = 0;
  auto operator<=>(const FieldElem&) const = default;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Monic irreducible of degree k, constant term first (length k + 1).
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

enum class ArithOp { Add, Sub, Mul, Neg, Inv, Pow };

class Field {
 public:
  /// Builds GF(p^k).  With no modulus, the lexicographically smallest monic
  /// irreducible of degree k is chosen.  Throws InvalidField when p is not
  /// prime, the modulus is not monic irreducible of degree k, or q > 2^16.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t k,
                                           std::optional<std::vector<std::uint32_t>> modulus = {});
  static std::shared_ptr<const Field> make(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.k; }
  std::uint32_t order() const { return q_; }
  std::string name() const;

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;
  bool contains(FieldElem a) const { return a.code < q_; }
  /// x^i for i < k: the power basis of K over GF(p).
  FieldElem basis_elem(std::uint32_t i) const { return {pow_p_[i]}; }

  FieldElem add(FieldElem a, FieldElem b) const {
    switch (add_mode_) {
      case AddMode::Prime: {
        const std::uint32_t s = a.code + b.code;
        return {s >= spec_.p ? s - spec_.p : s};
      }
      case AddMode::Xor:
        return {a.code ^ b.code};
      case AddMode::Zech:
        break;
    }
    return add_zech(a, b);
  }
  FieldElem neg(FieldElem a) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.code == 0 || b.code == 0) return {0};
    return {exp_[log_[a.code] + log_[b.code]]};
  }
  /// Throws DivisionByZero for a = 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  /// Any integer exponent; negative exponents invert first.
  FieldElem pow(FieldElem a, std::int64_t e) const;

  /// Log/exp access for hot loops.  log(0) is undefined.
  std::uint32_t log(FieldElem a) const { return log_[a.code]; }
  FieldElem exp(std::uint32_t i) const { return {exp_[i % (q_ - 1)]}; }
  /// exp table extended to indices < 3 (q - 1) so sums of three logs need no reduction.
  const std::uint32_t* exp_table() const { return exp_.data(); }
  const std::uint32_t* log_table() const { return log_.data(); }

  std::uint64_t multiplicative_order(FieldElem a) const;

  /// Lexicographic position of a coefficient sequence read from the leading
  /// coefficient down; this coincides with the code.
  std::uint32_t lex_key(FieldElem a) const;
  FieldElem from_lex_key(std::uint32_t key) const;
  bool lex_less(FieldElem a, FieldElem b) const { return lex_key(a) < lex_key(b); }

  /// Some mu with mu^n = a, the lexicographically smallest one, if any.
  /// Throws ZeroArgument for a = 0.
  std::optional<FieldElem> nth_root(FieldElem a, std::uint64_t n) const;
  /// Root existence test a^{(q-1)/gcd(n,q-1)} = 1, for nonzero a.
  bool has_nth_root(FieldElem a, std::uint64_t n) const;

  /// Lexicographically smallest nonzero (x, y) with x^2 + y^2 = 0 (dim 2) or
  /// (x, y, z) with x^2 + y^2 + z^2 = 0 (dim 3).
  std::optional<std::vector<FieldElem>> isotropic(int dim) const;

  /// True iff the integer n is a unit in K, i.e. p does not divide n.
  bool integer_invertible(std::uint64_t n) const { return n % spec_.p != 0; }

  FieldElem arith(ArithOp op, FieldElem a, FieldElem b) const;
  FieldElem arith(ArithOp op, FieldElem a, std::int64_t exponent) const;

  bool operator==(const Field& other) const { return spec_ == other.spec_; }

 private:
  enum class AddMode { Prime, Xor, Zech };

  Field() = default;
  FieldElem add_zech(FieldElem a, FieldElem b) const;
  FieldElem add_digits(FieldElem a, FieldElem b) const;
  FieldElem mul_poly(FieldElem a, FieldElem b) const;
  std::optional<FieldElem> nth_root_bruteforce(FieldElem a, std::uint64_t n) const;
  std::optional<FieldElem> nth_root_logs(FieldElem a, std::uint64_t n) const;

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  AddMode add_mode_ = AddMode::Prime;
  FieldElem minus_one_{};
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;  // zech_[i] = log(1 + g^i), kNoLog when zero
  std::vector<std::uint32_t> pow_p_;  // p^i
};

using FieldPtr = std::shared_ptr<const Field>;

/// Field element bound to its field; arithmetic across different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar(FieldPtr field, FieldElem value);

  const FieldPtr& field() const { return field_; }
  FieldElem value() const { return value_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(std::int64_t e) const;
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldPtr field_;
  FieldElem value_;
};

/// ff_arith entry point: binary ops take a second Scalar, Neg/Inv ignore it.
Scalar ff_arith(ArithOp op, const Scalar& a, const Scalar& b);
Scalar ff_arith(ArithOp op, const Scalar& a, std::int64_t exponent);

bool is_prime(std::uint64_t n);
/// Monic polynomial (constant term first) irreducible over GF(p); degree <= 16.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k);

}  // namespace tga
