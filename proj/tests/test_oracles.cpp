#include "tga/oracles.hpp"

#include <gtest/gtest.h>

#include "support.hpp"
#include "tga/deciders.hpp"

namespace tga {
namespace {

using test::algebra;
using test::klein;

AlgebraElement u(const AlgebraPtr& a, std::uint32_t g, std::uint32_t c = 1) {
  return AlgebraElement::basis(a, GroupElem{g}, FieldElem{c});
}

OracleOptions sampled(std::uint64_t budget, unsigned parallelism = 1, std::uint64_t seed = 5) {
  OracleOptions o;
  o.budget = budget;
  o.parallelism = parallelism;
  o.seed = seed;
  o.exhaustive_cap = 0;
  return o;
}

TEST(Oracles, IndexEncoding) {
  const auto a = algebra(3, 1, Group::cyclic(3));
  EXPECT_EQ(element_space_size(a), 27u);
  EXPECT_EQ(element_from_index(a, 0), AlgebraElement::zero(a));
  EXPECT_EQ(element_from_index(a, 1), AlgebraElement::one(a));
  EXPECT_EQ(element_from_index(a, 2 + 3), AlgebraElement::one(a).scaled(FieldElem{2}) + u(a, 1));
  EXPECT_EQ(element_space_size(algebra(65521, 1, Group::cyclic(8))), UINT64_MAX);
}

TEST(Oracles, NilpotentSearchExamples) {
  const auto c2 = algebra(2, 1, Group::cyclic(2));
  const auto r = oracle_nilpotent_search(c2);
  EXPECT_TRUE(r.exhaustive);
  ASSERT_TRUE(r.found.has_value());
  EXPECT_EQ(*r.found, AlgebraElement::one(c2) + u(c2, 1));

  const auto k = oracle_nilpotent_search(algebra(5, 1, klein()));
  EXPECT_TRUE(k.exhaustive);
  EXPECT_FALSE(k.found.has_value());
  EXPECT_EQ(k.checked, 625u);

  const auto l = algebra(5, 1, klein(), CocycleKind::lambda_pairing(FieldElem{4}));
  const auto lr = oracle_nilpotent_search(l);
  ASSERT_TRUE(lr.found.has_value());
  EXPECT_FALSE(lr.found->is_zero());
  EXPECT_TRUE((*lr.found * *lr.found).is_zero());
}

TEST(Oracles, ExhaustiveSearchFindsSmallestIndex) {
  for (const auto& a : test::property_instances()) {
    if (element_space_size(a) > 4096) continue;
    std::optional<AlgebraElement> first;
    for (std::uint64_t i = 1; i < element_space_size(a) && !first; ++i) {
      const auto x = element_from_index(a, i);
      if (is_nilpotent(x)) first = x;
    }
    OracleOptions o;
    o.parallelism = 3;
    EXPECT_EQ(oracle_nilpotent_search(a, o).found, first);
  }
}

TEST(Oracles, PropertyScanExamples) {
  const auto c2 = algebra(3, 1, Group::cyclic(2));
  const auto reg = oracle_property_scan(c2, ScanProperty::Regular);
  EXPECT_TRUE(reg.pass);
  EXPECT_TRUE(reg.conclusive);
  EXPECT_EQ(reg.checked, 9u);

  const auto c3 = algebra(3, 1, Group::cyclic(3));
  const auto nw = oracle_property_scan(c3, ScanProperty::NWeak, 2);
  EXPECT_FALSE(nw.pass);
  EXPECT_TRUE(nw.conclusive);
  ASSERT_TRUE(nw.counterexample.has_value());
  EXPECT_EQ(*nw.counterexample, u(c3, 1) - AlgebraElement::one(c3));

  const auto xi = oracle_property_scan(c3, ScanProperty::XiN);
  EXPECT_TRUE(xi.pass);
  EXPECT_TRUE(xi.conclusive);
  EXPECT_EQ(xi.checked, 27u);

  EXPECT_THROW(oracle_property_scan(c3, ScanProperty::NWeak, 1), Error);
}

TEST(Oracles, ParallelismDoesNotChangeResults) {
  std::vector<AlgebraPtr> cases{algebra(3, 1, Group::cyclic(3)), algebra(2, 1, Group::dihedral(4)),
                                algebra(5, 1, klein(), CocycleKind::lambda_pairing(FieldElem{4})),
                                algebra(7, 1, Group::cyclic(6)), algebra(3, 1, Group::dihedral(3))};
  for (const auto& a : cases) {
    for (auto make : {+[](unsigned p) { OracleOptions o; o.parallelism = p; return o; },
                      +[](unsigned p) { return sampled(5000, p); }}) {
      const auto base = oracle_nilpotent_search(a, make(1));
      for (unsigned p : {2u, 4u}) {
        const auto other = oracle_nilpotent_search(a, make(p));
        EXPECT_EQ(other.found, base.found);
        EXPECT_EQ(other.exhaustive, base.exhaustive);
      }
      for (auto prop : {ScanProperty::Regular, ScanProperty::NWeak, ScanProperty::XiN}) {
        const auto s1 = oracle_property_scan(a, prop, 2, make(1));
        for (unsigned p : {2u, 4u}) {
          const auto sp = oracle_property_scan(a, prop, 2, make(p));
          EXPECT_EQ(sp.counterexample, s1.counterexample) << to_string(prop);
          EXPECT_EQ(sp.pass, s1.pass);
        }
      }
    }
  }
}

TEST(Oracles, SampledModeIsSeededAndSound) {
  // Q8 x C3 over GF(5) has 5^24 elements: sampling only.
  const auto a = algebra(5, 1, test::q8xc3());
  OracleOptions o;
  o.budget = 2000;
  const auto r = oracle_nilpotent_search(a, o);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.seed, kDefaultOracleSeed);
  ASSERT_TRUE(r.found.has_value());
  EXPECT_TRUE(is_nilpotent(*r.found));
  EXPECT_FALSE(r.found->is_zero());

  // Semisimple commutative instance: nothing is found, and the full budget is spent.
  const auto s = algebra(7, 1, test::c3xc3());
  const auto rs = oracle_nilpotent_search(s, sampled(3000));
  EXPECT_FALSE(rs.found.has_value());
  EXPECT_EQ(rs.checked, 3000u);
  EXPECT_EQ(oracle_nilpotent_search(s, sampled(3000)).checked, rs.checked);

  // Same seed, same answer; the scan on a sampled non-regular ambient refutes.
  const auto c9 = algebra(3, 1, test::c3xc3());
  const auto s1 = oracle_property_scan(c9, ScanProperty::NWeak, 2, sampled(500, 1, 9));
  const auto s2 = oracle_property_scan(c9, ScanProperty::NWeak, 2, sampled(500, 1, 9));
  EXPECT_EQ(s1.counterexample, s2.counterexample);
  EXPECT_FALSE(s1.pass);
  EXPECT_TRUE(s1.conclusive);
  EXPECT_FALSE(s1.exhaustive);
}

TEST(Oracles, NoncommutativeNWeakScan) {
  // Q8 over GF(5): nilpotents exist, so some element is refuted.
  const auto q = algebra(5, 1, Group::quaternion8());
  const auto r = oracle_property_scan(q, ScanProperty::NWeak, 2, sampled(2000));
  ASSERT_TRUE(r.counterexample.has_value());
  const auto& x = *r.counterexample;
  EXPECT_FALSE(x.is_zero());
  EXPECT_TRUE((x * x).is_zero());
  EXPECT_FALSE(r.pass);
}

// Decider verdicts agree with the exhaustive oracles on small admissible instances.
TEST(Oracles, AgreeWithDecidersOnSmallInstances) {
  OracleOptions o;
  o.exhaustive_cap = 1u << 12;
  o.parallelism = 2;
  for (const auto& a : test::property_instances()) {
    if (element_space_size(a) > o.exhaustive_cap || !sufficiently_closed(a).passes) continue;
    const auto label = a->group().label() + " over " + a->field().name();
    EXPECT_EQ(decide_no_nilpotents(a).verdict, !oracle_nilpotent_search(a, o).found.has_value()) << label;
    const auto nw = oracle_property_scan(a, ScanProperty::NWeak, 2, o);
    if (nw.conclusive) EXPECT_EQ(decide_n_weakly_regular(a, 2).verdict, nw.pass) << label;
    const auto xi = oracle_property_scan(a, ScanProperty::XiN, 2, o);
    EXPECT_TRUE(xi.conclusive);
    EXPECT_EQ(decide_xi_N(a).verdict, xi.pass) << label;
    const auto sr = oracle_property_scan(a, ScanProperty::StronglyRegular, 2, o);
    EXPECT_EQ(decide_strongly_regular(a).verdict, sr.pass) << label;
  }
}

}  // namespace
}  // namespace tga
