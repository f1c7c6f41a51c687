#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tga/algebra.hpp"
#include "tga/cocycle.hpp"
#include "tga/finite_field.hpp"
#include "tga/group.hpp"

namespace tga::test {

inline GroupPtr klein() { return Group::direct_product(*Group::cyclic(2), *Group::cyclic(2)); }
inline GroupPtr c2xc4() { return Group::direct_product(*Group::cyclic(2), *Group::cyclic(4)); }
inline GroupPtr c3xc3() { return Group::direct_product(*Group::cyclic(3), *Group::cyclic(3)); }
inline GroupPtr q8xc3() { return Group::direct_product(*Group::quaternion8(), *Group::cyclic(3)); }

inline std::vector<std::pair<std::string, GroupPtr>> catalog_groups() {
  std::vector<std::pair<std::string, GroupPtr>> out;
  for (std::uint32_t m = 1; m <= 6; ++m) out.emplace_back("C" + std::to_string(m), Group::cyclic(m));
  out.emplace_back("C2xC2", klein());
  out.emplace_back("C2xC4", c2xc4());
  out.emplace_back("C3xC3", c3xc3());
  out.emplace_back("D3", Group::dihedral(3));
  out.emplace_back("D4", Group::dihedral(4));
  out.emplace_back("Q8", Group::quaternion8());
  out.emplace_back("Q8xC3", q8xc3());
  return out;
}

inline std::vector<FieldPtr> catalog_fields() {
  return {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2), Field::make(5, 1),
          Field::make(7, 1), Field::make(3, 2), Field::make(5, 2)};
}

inline AlgebraPtr algebra(std::uint32_t p, std::uint32_t k, GroupPtr g, const CocycleKind& kind = CocycleKind::trivial()) {
  const FieldPtr f = Field::make(p, k);
  return TwistedGroupAlgebra::make(make_factor_system(kind, std::move(g), f));
}

inline FieldElem random_unit(const Field& f, std::mt19937_64& rng) {
  return FieldElem{1 + static_cast<std::uint32_t>(rng() % (f.order() - 1))};
}

inline Rescaling random_rescaling(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<FieldElem> mu(n, f.one());
  for (std::size_t i = 1; i < n; ++i) mu[i] = random_unit(f, rng);
  return Rescaling::make(f, std::move(mu));
}

/// Dense random element; with `sparsity` > 0 each coefficient is zero with that probability.
inline AlgebraElement random_element(const AlgebraPtr& a, std::mt19937_64& rng, double sparsity = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<FieldElem> c(a->dim());
  for (auto& x : c) {
    if (sparsity > 0 && u(rng) < sparsity) continue;
    x = FieldElem{static_cast<std::uint32_t>(rng() % a->field().order())};
  }
  return AlgebraElement(a, std::move(c));
}

/// Instances used by the property tests: every catalog group over a few fields,
/// with the trivial system and one random coboundary.
inline std::vector<AlgebraPtr> property_instances(std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::vector<AlgebraPtr> out;
  for (const auto& f : {Field::make(2, 1), Field::make(3, 1), Field::make(5, 1), Field::make(3, 2)}) {
    for (const auto& [name, g] : catalog_groups()) {
      out.push_back(TwistedGroupAlgebra::make(make_factor_system(CocycleKind::trivial(), g, f)));
      auto mu = random_rescaling(*f, g->order(), rng);
      out.push_back(TwistedGroupAlgebra::make(make_factor_system(CocycleKind::coboundary(mu.mu), g, f)));
    }
  }
  out.push_back(algebra(5, 1, klein(), CocycleKind::lambda_pairing(FieldElem{4})));
  out.push_back(algebra(7, 1, c3xc3(), CocycleKind::lambda_pairing(FieldElem{2})));
  return out;
}

}  // namespace tga::test
