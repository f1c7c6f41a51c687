#include "tga/witness.hpp"

#include "tga/error.hpp"

namespace tga {

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::NilpotentElement: return "nilpotent_element";
    case WitnessKind::RegularityPair: return "regularity_pair";
    case WitnessKind::StrongRegularityPair: return "strong_regularity_pair";
    case WitnessKind::NWeakPair: return "n_weak_pair";
    case WitnessKind::XiNPair: return "xiN_pair";
  }
  return "unknown";
}

const AlgebraElement& Witness::get(const std::string& name) const {
  for (const auto& [k, v] : elements_) {
    if (k == name) return v;
  }
  throw Error(ErrorCode::PreconditionFailed, "witness has no element '" + name + "'");
}

Witness& Witness::label(std::string key, std::string value) {
  labels_.emplace_back(std::move(key), std::move(value));
  return *this;
}

bool Witness::recheck() const {
  switch (kind_) {
    case WitnessKind::NilpotentElement: {
      const auto& x = get("x");
      return !x.is_zero() && x.pow(exponent_).is_zero();
    }
    case WitnessKind::RegularityPair: {
      const auto& a = get("a");
      return a * get("b") * a == a;
    }
    case WitnessKind::StrongRegularityPair: {
      const auto& a = get("a");
      return get("b") * a * a == a;
    }
    case WitnessKind::NWeakPair: {
      const auto& a = get("a");
      return a * get("b") * a.pow(exponent_) * get("c") == a;
    }
    case WitnessKind::XiNPair: {
      const auto& a = get("a");
      const auto z = a * a * get("b") - a;
      return z == get("z") && is_central(z) && is_nilpotent(z);
    }
  }
  return false;
}

std::optional<Witness> Witness::nilpotent(std::string source, AlgebraElement x, std::uint64_t exponent) {
  Witness w;
  w.kind_ = WitnessKind::NilpotentElement;
  w.source_ = std::move(source);
  w.exponent_ = exponent;
  w.equation_ = "x != 0 and x^" + std::to_string(exponent) + " = 0";
  w.elements_.emplace_back("x", std::move(x));
  w.holds_ = w.recheck();
  if (!w.holds_) return std::nullopt;
  return w;
}

std::optional<Witness> Witness::regularity(AlgebraElement a, AlgebraElement b) {
  Witness w;
  w.kind_ = WitnessKind::RegularityPair;
  w.source_ = "regularity_solver";
  w.equation_ = "a*b*a = a";
  w.elements_.emplace_back("a", std::move(a));
  w.elements_.emplace_back("b", std::move(b));
  w.holds_ = w.recheck();
  if (!w.holds_) return std::nullopt;
  return w;
}

std::optional<Witness> Witness::strong_regularity(AlgebraElement a, AlgebraElement b) {
  Witness w;
  w.kind_ = WitnessKind::StrongRegularityPair;
  w.source_ = "strong_regularity_solver";
  w.equation_ = "b*a^2 = a";
  w.elements_.emplace_back("a", std::move(a));
  w.elements_.emplace_back("b", std::move(b));
  w.holds_ = w.recheck();
  if (!w.holds_) return std::nullopt;
  return w;
}

std::optional<Witness> Witness::n_weak(AlgebraElement a, AlgebraElement b, AlgebraElement c, std::uint32_t n) {
  Witness w;
  w.kind_ = WitnessKind::NWeakPair;
  w.source_ = "n_weak_solver";
  w.exponent_ = n;
  w.equation_ = "a*b*a^" + std::to_string(n) + "*c = a";
  w.elements_.emplace_back("a", std::move(a));
  w.elements_.emplace_back("b", std::move(b));
  w.elements_.emplace_back("c", std::move(c));
  w.holds_ = w.recheck();
  if (!w.holds_) return std::nullopt;
  return w;
}

std::optional<Witness> Witness::xi_n(AlgebraElement a, AlgebraElement b) {
  Witness w;
  w.kind_ = WitnessKind::XiNPair;
  w.source_ = "xiN_solver";
  w.equation_ = "z = a^2*b - a, z central and nilpotent";
  auto z = a * a * b - a;
  w.elements_.emplace_back("a", std::move(a));
  w.elements_.emplace_back("b", std::move(b));
  w.elements_.emplace_back("z", std::move(z));
  w.holds_ = w.recheck();
  if (!w.holds_) return std::nullopt;
  return w;
}

std::optional<Witness> regularity_witness(const AlgebraElement& a) {
  const PrimeMatrix m = left_right_rep(a, Side::Left) * left_right_rep(a, Side::Right);
  const auto b = solve(m, a.to_prime_vector());
  if (!b) return std::nullopt;
  return Witness::regularity(a, AlgebraElement::from_prime_vector(a.ambient(), *b));
}

std::optional<Witness> strong_regularity_witness(const AlgebraElement& a) {
  const auto b = solve(left_right_rep(a * a, Side::Right), a.to_prime_vector());
  if (!b) return std::nullopt;
  return Witness::strong_regularity(a, AlgebraElement::from_prime_vector(a.ambient(), *b));
}

std::optional<Witness> n_weak_witness(const AlgebraElement& a, std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::PreconditionFailed, "n-weak regularity needs n >= 2");
  if (!a.ambient()->is_commutative()) throw Error(ErrorCode::NotCommutative, "n_weak_witness needs a commutative algebra");
  const auto bv = solve(left_right_rep(a * a, Side::Left), a.to_prime_vector());
  if (!bv) return std::nullopt;
  auto b = AlgebraElement::from_prime_vector(a.ambient(), *bv);
  auto c = b.pow(n - 1);
  return Witness::n_weak(a, std::move(b), std::move(c), n);
}

std::optional<Witness> xi_n_witness(const AlgebraElement& a) { return xi_n_witness(a, central_nilradical(a.ambient())); }

std::optional<Witness> xi_n_witness(const AlgebraElement& a, const std::vector<AlgebraElement>& central_nil) {
  const auto& amb = a.ambient();
  const std::size_t d = amb->prime_dim();
  const std::uint32_t p = amb->field().characteristic();
  // [L_{a^2} | -N] (b, t) = a  <=>  a^2 b - a = sum t_j n_j.
  const PrimeMatrix l = left_right_rep(a * a, Side::Left);
  PrimeMatrix m(d, d + central_nil.size(), p);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = l(r, c);
  }
  for (std::size_t j = 0; j < central_nil.size(); ++j) {
    const auto v = central_nil[j].to_prime_vector();
    for (std::size_t r = 0; r < d; ++r) m(r, d + j) = v[r] == 0 ? 0 : p - v[r];
  }
  const auto sol = solve(m, a.to_prime_vector());
  if (!sol) return std::nullopt;
  const std::span<const std::uint32_t> bpart(sol->data(), d);
  return Witness::xi_n(a, AlgebraElement::from_prime_vector(amb, bpart));
}

}  // namespace tga
