#include "tga/kernels.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tga/linalg.hpp"

namespace tga {
namespace {

using kernels::Backend;

std::vector<std::uint32_t> random_row(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

const std::vector<std::uint32_t> kPrimes{2, 3, 5, 7, 251, 257, 4093, 32749, 65521};

// Restores the dispatch choice when a test changes it.
class BackendGuard {
 public:
  BackendGuard() : saved_(kernels::active_backend()) {}
  ~BackendGuard() { kernels::set_backend(saved_); }

 private:
  Backend saved_;
};

TEST(Kernels, ScalarReference) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : kPrimes) {
    for (std::size_t n : {0u, 1u, 7u, 64u}) {
      auto y = random_row(n, p, rng);
      const auto x = random_row(n, p, rng);
      const auto c = static_cast<std::uint32_t>(rng() % p);
      auto expected = y;
      for (std::size_t i = 0; i < n; ++i) expected[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{c} * x[i]) % p);
      kernels::axpy_mod(Backend::Scalar, y, x, c, p);
      EXPECT_EQ(y, expected);
      for (std::size_t i = 0; i < n; ++i) expected[i] = static_cast<std::uint32_t>(std::uint64_t{c} * y[i] % p);
      kernels::scale_mod(Backend::Scalar, y, c, p);
      EXPECT_EQ(y, expected);
    }
  }
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(32);
  for (std::uint32_t p : kPrimes) {
    for (std::size_t n = 0; n <= 80; ++n) {
      for (int t = 0; t < 4; ++t) {
        const auto y = random_row(n, p, rng);
        const auto x = random_row(n, p, rng);
        // Include the extreme multipliers.
        const std::uint32_t c = t == 0 ? p - 1 : (t == 1 ? 0 : static_cast<std::uint32_t>(rng() % p));
        auto ys = y, yv = y;
        kernels::axpy_mod(Backend::Scalar, ys, x, c, p);
        kernels::axpy_mod(Backend::Avx2, yv, x, c, p);
        ASSERT_EQ(ys, yv) << "p=" << p << " n=" << n << " c=" << c;
        kernels::scale_mod(Backend::Scalar, ys, c, p);
        kernels::scale_mod(Backend::Avx2, yv, c, p);
        ASSERT_EQ(ys, yv) << "p=" << p << " n=" << n << " c=" << c;
      }
    }
  }
  // All-maximal inputs.
  for (std::uint32_t p : kPrimes) {
    std::vector<std::uint32_t> y(37, p - 1), x(37, p - 1);
    auto ys = y, yv = y;
    kernels::axpy_mod(Backend::Scalar, ys, x, p - 1, p);
    kernels::axpy_mod(Backend::Avx2, yv, x, p - 1, p);
    EXPECT_EQ(ys, yv);
  }
}

TEST(Kernels, RrefIdenticalUnderBothBackends) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available";
  BackendGuard guard;
  std::mt19937_64 rng(33);
  for (std::uint32_t p : {2u, 3u, 5u, 65521u}) {
    for (int t = 0; t < 20; ++t) {
      const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
      PrimeMatrix m(r, c, p);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % 3 == 0 ? 0 : static_cast<std::uint32_t>(rng() % p);
      kernels::set_backend(Backend::Scalar);
      const auto a = rref(m);
      kernels::set_backend(Backend::Avx2);
      const auto b = rref(m);
      EXPECT_EQ(a.reduced, b.reduced);
      EXPECT_EQ(a.pivots, b.pivots);
    }
  }
}

TEST(Kernels, SetBackendRejectsUnavailable) {
  BackendGuard guard;
  kernels::set_backend(Backend::Scalar);
  EXPECT_EQ(kernels::active_backend(), Backend::Scalar);
  if (!kernels::avx2_available()) EXPECT_ANY_THROW(kernels::set_backend(Backend::Avx2));
}

}  // namespace
}  // namespace tga
