#pragma once

// Row kernels for dense linear algebra over GF(p), p < 2^16.
//
// Each kernel has a scalar reference version and, on x86-64 builds, an AVX2
// version.  The variant is picked once at startup from CPUID; setting the
// environment variable TGA_KERNELS=scalar forces the reference path.  Both
// variants must produce bit-identical output (checked in tests/test_kernels.cpp).

#include <cstdint>
#include <span>
#include <string_view>

namespace tga::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available();
Backend active_backend();
/// Overrides the dispatch choice; throws PreconditionFailed if `b` is unavailable.
void set_backend(Backend b);

/// y[i] = (y[i] + c * x[i]) mod p.  Entries of x, y and c must lie in [0, p).
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c, std::uint32_t p);
/// y[i] = (c * y[i]) mod p.
void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p);

// Explicit variants, used by the equivalence tests and benchmarks.
void axpy_mod(Backend b, std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p);
void scale_mod(Backend b, std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

}  // namespace tga::kernels
