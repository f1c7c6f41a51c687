#include "tga/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

namespace tga {
namespace {

PrimeMatrix random_matrix(std::size_t r, std::size_t c, std::uint32_t p, std::mt19937_64& rng, int zero_bias = 2) {
  PrimeMatrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rng() % zero_bias == 0 ? 0 : static_cast<std::uint32_t>(rng() % p);
  return m;
}

TEST(Linalg, InverseModP) {
  for (std::uint32_t p : {2u, 3u, 7u, 65521u}) {
    for (std::uint32_t a = 1; a < std::min(p, 500u); ++a) EXPECT_EQ(std::uint64_t{a} * inv_mod(a, p) % p, 1u);
  }
}

TEST(Linalg, SmallRref) {
  PrimeMatrix m(2, 3, 5);
  m(0, 0) = 2; m(0, 1) = 4; m(0, 2) = 1;
  m(1, 0) = 1; m(1, 1) = 2; m(1, 2) = 4;
  const auto e = rref(m);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(e.reduced(0, 0), 1u);
  EXPECT_EQ(e.reduced(0, 1), 2u);
  EXPECT_EQ(e.reduced(0, 2), 0u);
  EXPECT_EQ(e.reduced(1, 2), 1u);
  const auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (PrimeVector{3, 1, 0}));
}

TEST(Linalg, RankNullity) {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 3u, 5u, 251u}) {
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
      const auto m = random_matrix(r, c, p, rng, 1 + t % 4);
      const auto ker = kernel_basis(m);
      EXPECT_EQ(rank(m) + ker.size(), c);
      for (const auto& v : ker) {
        const auto mv = m.apply(v);
        EXPECT_TRUE(std::all_of(mv.begin(), mv.end(), [](auto x) { return x == 0; }));
      }
      // Kernel vectors are independent.
      if (!ker.empty()) {
        PrimeMatrix kmat(ker.size(), c, p);
        for (std::size_t i = 0; i < ker.size(); ++i)
          for (std::size_t j = 0; j < c; ++j) kmat(i, j) = ker[i][j];
        EXPECT_EQ(rank(kmat), ker.size());
      }
    }
  }
}

TEST(Linalg, SolveConsistentSystems) {
  std::mt19937_64 rng(42);
  for (std::uint32_t p : {2u, 3u, 7u, 65521u}) {
    for (int t = 0; t < 50; ++t) {
      const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
      const auto a = random_matrix(r, c, p, rng, 1 + t % 3);
      PrimeVector x(c);
      for (auto& v : x) v = static_cast<std::uint32_t>(rng() % p);
      const auto b = a.apply(x);
      const auto s = solve(a, b);
      ASSERT_TRUE(s.has_value());
      EXPECT_EQ(a.apply(*s), b);
    }
  }
  // Inconsistent: x = 0 and x = 1.
  PrimeMatrix a(2, 1, 3);
  a(0, 0) = 1;
  a(1, 0) = 1;
  EXPECT_FALSE(solve(a, PrimeVector{0, 1}).has_value());
}

TEST(Linalg, MatrixProductAndPower) {
  std::mt19937_64 rng(43);
  for (std::uint32_t p : {2u, 5u, 65521u}) {
    const auto a = random_matrix(6, 6, p, rng);
    const auto b = random_matrix(6, 6, p, rng);
    const auto c = random_matrix(6, 6, p, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * PrimeMatrix::identity(6, p), a);
    EXPECT_EQ(matrix_power(a, 0), PrimeMatrix::identity(6, p));
    EXPECT_EQ(matrix_power(a, 5), a * a * a * a * a);
    PrimeVector v(6);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
    EXPECT_EQ((a * b).apply(v), a.apply(b.apply(v)));
  }
  // Strictly upper triangular matrices are nilpotent.
  PrimeMatrix n(4, 4, 7);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) n(i, j) = 1 + static_cast<std::uint32_t>(i + j) % 6;
  EXPECT_FALSE(matrix_power(n, 3).is_zero());
  EXPECT_TRUE(matrix_power(n, 4).is_zero());
}

}  // namespace
}  // namespace tga
