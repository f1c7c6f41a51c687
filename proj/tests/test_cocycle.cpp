#include "tga/cocycle.hpp"

#include <gtest/gtest.h>

#include "support.hpp"
#include "tga/error.hpp"

namespace tga {
namespace {

using test::catalog_groups;
using test::klein;

FactorSystem lambda4() {
  return make_factor_system(CocycleKind::lambda_pairing(FieldElem{4}), klein(), Field::make(5, 1));
}

// Dense product under an arbitrary table, written out directly from u_g u_h = rho(g,h) u_{gh}.
std::vector<FieldElem> convolve(const FactorSystem& rho, const std::vector<FieldElem>& a,
                                const std::vector<FieldElem>& b) {
  const Field& f = rho.field();
  const Group& g = rho.group();
  std::vector<FieldElem> out(g.order(), f.zero());
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = 0; y < g.order(); ++y) {
      const auto xy = g.mul(x, y);
      out[xy] = f.add(out[xy], f.mul(f.mul(a[x], b[y]), rho.at(x, y)));
    }
  return out;
}

bool random_triples_associate(const FactorSystem& rho, std::mt19937_64& rng, int trials) {
  const auto q = rho.field().order();
  auto r = [&] {
    std::vector<FieldElem> v(rho.group().order());
    for (auto& c : v) c = FieldElem{static_cast<std::uint32_t>(rng() % q)};
    return v;
  };
  for (int t = 0; t < trials; ++t) {
    const auto a = r(), b = r(), c = r();
    if (convolve(rho, convolve(rho, a, b), c) != convolve(rho, a, convolve(rho, b, c))) return false;
  }
  return true;
}

TEST(Cocycle, TrivialIsValidAndSymmetric) {
  for (const auto& [name, g] : catalog_groups()) {
    const auto rho = make_factor_system(CocycleKind::trivial(), g, Field::make(5, 1));
    EXPECT_TRUE(validate_factor_system(rho).valid()) << name;
    EXPECT_TRUE(is_symmetric(rho).symmetric) << name;
    for (std::uint32_t x = 0; x < g->order(); ++x) EXPECT_EQ(power_scalar(rho, GroupElem{x}), FieldElem{1});
  }
}

TEST(Cocycle, LambdaPairing) {
  const auto rho = lambda4();
  EXPECT_TRUE(validate_factor_system(rho).valid());
  const auto sym = is_symmetric(rho);
  EXPECT_FALSE(sym.symmetric);
  ASSERT_TRUE(sym.counterexample.has_value());
  const auto& g = rho.group();
  EXPECT_EQ(g.name(sym.counterexample->first), "(1,g)");
  EXPECT_EQ(g.name(sym.counterexample->second), "(g,1)");
  EXPECT_EQ(rho.at(1, 2), FieldElem{4});
  EXPECT_EQ(rho.at(2, 1), FieldElem{1});
  EXPECT_EQ(power_scalar(rho, GroupElem{3}), FieldElem{4});
  EXPECT_EQ(power_scalar(rho, g.identity()), FieldElem{1});
}

TEST(Cocycle, LambdaPairingRequiresCompatibleOrder) {
  const auto f7 = Field::make(7, 1);
  try {
    make_factor_system(CocycleKind::lambda_pairing(FieldElem{3}), klein(), f7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleLambda);
  }
  EXPECT_THROW(make_factor_system(CocycleKind::lambda_pairing(FieldElem{4}), Group::dihedral(3), Field::make(5, 1)),
               Error);
  // 2 has order 3 in GF(7): compatible with C3 x C3.
  const auto rho = make_factor_system(CocycleKind::lambda_pairing(FieldElem{2}), test::c3xc3(), f7);
  EXPECT_TRUE(validate_factor_system(rho).valid());
}

TEST(Cocycle, EditedEntryIsReported) {
  const auto f = Field::make(5, 1);
  const auto g = klein();
  std::vector<FieldElem> t(16, FieldElem{1});
  t[1 * 4 + 2] = FieldElem{2};
  const FactorSystem rho(f, g, t);
  const auto rep = validate_factor_system(rho);
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(rep.normalization_violations.empty());
  ASSERT_FALSE(rep.identity_violations.empty());
  for (const auto& [x, y, z] : rep.identity_violations) {
    const bool touches = (x.index == 1 && y.index == 2) || (g->mul(x, y).index == 1 && z.index == 2) ||
                         (y.index == 1 && z.index == 2) || (x.index == 1 && g->mul(y, z).index == 2);
    EXPECT_TRUE(touches);
  }
  std::vector<FieldElem> z = t;
  z[5] = FieldElem{0};
  try {
    validate_factor_system(FactorSystem(f, g, z));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroEntry);
  }
  std::vector<FieldElem> denorm(16, FieldElem{1});
  denorm[0 * 4 + 3] = FieldElem{3};
  EXPECT_FALSE(validate_factor_system(FactorSystem(f, g, denorm)).normalization_violations.empty());
  EXPECT_THROW(make_factor_system(CocycleKind::explicit_table({{FieldElem{1}, FieldElem{2}}, {FieldElem{1}, FieldElem{1}}}),
                                  Group::cyclic(2), Field::make(3, 1)),
               Error);
}

TEST(Cocycle, ValidationMatchesAssociativity) {
  std::mt19937_64 rng(21);
  const auto f = Field::make(5, 1);
  for (const auto& [name, g] : catalog_groups()) {
    if (g->order() > 12) continue;
    for (int t = 0; t < 12; ++t) {
      // Start from a coboundary (valid) and perturb some entries off the identity row/column.
      auto mu = test::random_rescaling(*f, g->order(), rng);
      auto entries = make_factor_system(CocycleKind::coboundary(mu.mu), g, f).entries();
      const int edits = t % 3;
      for (int e = 0; e < edits && g->order() > 1; ++e) {
        const auto x = 1 + rng() % (g->order() - 1), y = 1 + rng() % (g->order() - 1);
        entries[x * g->order() + y] = test::random_unit(*f, rng);
      }
      const FactorSystem rho(f, g, entries);
      const bool valid = validate_factor_system(rho).valid();
      EXPECT_EQ(valid, random_triples_associate(rho, rng, 40)) << name;
    }
  }
}

TEST(Cocycle, PowerScalarMatchesRepeatedProduct) {
  std::mt19937_64 rng(22);
  for (const auto& f : {Field::make(5, 1), Field::make(2, 2), Field::make(7, 1)}) {
    for (const auto& [name, g] : catalog_groups()) {
      const auto rho = make_factor_system(CocycleKind::coboundary(test::random_rescaling(*f, g->order(), rng).mu), g, f);
      for (std::uint32_t x = 0; x < g->order(); ++x) {
        // u_x^n = alpha u_1, computed by convolving the basis vector with itself.
        std::vector<FieldElem> u(g->order(), f->zero()), acc(g->order(), f->zero());
        u[x] = f->one();
        acc = u;
        for (std::uint32_t i = 1; i < g->element_order(GroupElem{x}); ++i) acc = convolve(rho, acc, u);
        EXPECT_EQ(acc[0], power_scalar(rho, GroupElem{x})) << name;
      }
    }
  }
}

TEST(Cocycle, CoboundaryOnC3OverGF4) {
  const auto f = Field::make(2, 2);
  const auto g = Group::cyclic(3);
  const std::vector<FieldElem> mu{FieldElem{1}, FieldElem{2}, FieldElem{3}};
  const auto rho = make_factor_system(CocycleKind::coboundary(mu), g, f);
  EXPECT_TRUE(validate_factor_system(rho).valid());
  EXPECT_TRUE(is_symmetric(rho).symmetric);
  for (std::uint32_t x = 0; x < 3; ++x) EXPECT_EQ(power_scalar(rho, GroupElem{x}), f->pow(mu[x], 3));
}

TEST(Cocycle, RescalingIsAGroupAction) {
  std::mt19937_64 rng(23);
  const auto f = Field::make(7, 1);
  for (const auto& [name, g] : catalog_groups()) {
    const auto rho = make_factor_system(CocycleKind::trivial(), g, f);
    EXPECT_EQ(apply_rescaling(rho, Rescaling::identity(g->order())), rho);
    const auto m1 = test::random_rescaling(*f, g->order(), rng);
    const auto m2 = test::random_rescaling(*f, g->order(), rng);
    const auto r1 = apply_rescaling(rho, m1);
    EXPECT_TRUE(validate_factor_system(r1).valid()) << name;
    EXPECT_EQ(apply_rescaling(r1, m2), apply_rescaling(rho, compose(*f, m1, m2))) << name;
    EXPECT_EQ(apply_rescaling(r1, pointwise_inverse(*f, m1)), rho) << name;
    // Power scalar of a coboundary of the trivial system is mu(g)^{ord g}.
    for (std::uint32_t x = 0; x < g->order(); ++x) {
      EXPECT_EQ(power_scalar(r1, GroupElem{x}), f->pow(m1.mu[x], g->element_order(GroupElem{x})));
    }
  }
  EXPECT_THROW(Rescaling::make(*f, {FieldElem{2}, FieldElem{1}}), Error);
  EXPECT_THROW(Rescaling::make(*f, {FieldElem{1}, FieldElem{0}}), Error);
}

TEST(Cocycle, SymmetryInvariantUnderCoboundaryOnAbelianGroups) {
  std::mt19937_64 rng(24);
  std::vector<FactorSystem> systems;
  systems.push_back(lambda4());
  systems.push_back(make_factor_system(CocycleKind::lambda_pairing(FieldElem{2}), test::c3xc3(), Field::make(7, 1)));
  for (const auto& [name, g] : catalog_groups()) {
    if (g->is_abelian()) systems.push_back(make_factor_system(CocycleKind::trivial(), g, Field::make(5, 1)));
  }
  for (const auto& rho : systems) {
    for (int t = 0; t < 5; ++t) {
      const auto mu = test::random_rescaling(rho.field(), rho.group().order(), rng);
      EXPECT_EQ(is_symmetric(apply_rescaling(rho, mu)).symmetric, is_symmetric(rho).symmetric);
    }
  }
  // Coboundaries of the trivial system on a cyclic group are symmetric.
  const auto f = Field::make(5, 1);
  for (std::uint32_t m = 1; m <= 6; ++m) {
    const auto rho = make_factor_system(CocycleKind::coboundary(test::random_rescaling(*f, m, rng).mu), Group::cyclic(m), f);
    EXPECT_TRUE(is_symmetric(rho).symmetric);
  }
}

TEST(Cocycle, UnitPowerRescalingExamples) {
  const auto triv = make_factor_system(CocycleKind::trivial(), Group::quaternion8(), Field::make(5, 1));
  const auto t = unit_power_rescaling(triv);
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(t.mu->mu, Rescaling::identity(8).mu);
  EXPECT_EQ(*t.rescaled, triv);

  const auto l = unit_power_rescaling(lambda4());
  ASSERT_TRUE(l.ok());
  EXPECT_EQ(l.mu->mu[3], FieldElem{2});
  EXPECT_EQ(power_scalar(*l.rescaled, GroupElem{3}), FieldElem{1});

  const auto f7 = Field::make(7, 1);
  const FactorSystem bad(f7, Group::cyclic(2), {FieldElem{1}, FieldElem{1}, FieldElem{1}, FieldElem{3}});
  const auto b = unit_power_rescaling(bad);
  EXPECT_FALSE(b.ok());
  EXPECT_FALSE(b.mu.has_value());
  ASSERT_EQ(b.failures.size(), 1u);
  EXPECT_EQ(b.failures[0].g, GroupElem{1});
  EXPECT_EQ(b.failures[0].order, 2u);
  EXPECT_EQ(b.failures[0].alpha, FieldElem{3});
}

TEST(Cocycle, UnitPowerRescalingGivesUnitPowers) {
  std::mt19937_64 rng(25);
  for (const auto& f : test::catalog_fields()) {
    for (const auto& [name, g] : catalog_groups()) {
      const auto rho = make_factor_system(CocycleKind::coboundary(test::random_rescaling(*f, g->order(), rng).mu), g, f);
      const auto r = unit_power_rescaling(rho);
      // Failures exactly where alpha_g^{-1} has no ord(g)-th root.
      for (std::uint32_t x = 0; x < g->order(); ++x) {
        const auto n = g->element_order(GroupElem{x});
        const auto alpha = power_scalar(rho, GroupElem{x});
        const bool has = f->has_nth_root(f->inv(alpha), n);
        const bool failed = std::any_of(r.failures.begin(), r.failures.end(),
                                        [&](const RootFailure& rf) { return rf.g.index == x; });
        EXPECT_EQ(failed, !has) << name;
      }
      if (!r.ok()) continue;
      EXPECT_EQ(*r.rescaled, apply_rescaling(rho, *r.mu));
      for (std::uint32_t x = 0; x < g->order(); ++x) EXPECT_EQ(power_scalar(*r.rescaled, GroupElem{x}), f->one());
    }
  }
}

}  // namespace
}  // namespace tga
