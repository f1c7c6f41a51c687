#include <atomic>
#include <cstdlib>
#include <cstring>

#include "tga/error.hpp"
#include "tga/kernels.hpp"

namespace tga::kernels {
namespace {

#ifdef TGA_HAVE_AVX2
bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#else
bool cpu_has_avx2() { return false; }
#endif

Backend initial_backend() {
  const char* env = std::getenv("TGA_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

}  // namespace

#ifndef TGA_HAVE_AVX2
namespace avx2 {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  scalar::axpy_mod(y, x, n, c, p);
}
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) { scalar::scale_mod(y, n, c, p); }
}  // namespace avx2
#endif

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() { return cpu_has_avx2(); }

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available()) throw Error(ErrorCode::PreconditionFailed, "AVX2 kernels unavailable");
  backend_slot().store(b, std::memory_order_relaxed);
}

void axpy_mod(Backend b, std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c,
              std::uint32_t p) {
  const std::size_t n = y.size() < x.size() ? y.size() : x.size();
  if (b == Backend::Avx2) {
    avx2::axpy_mod(y.data(), x.data(), n, c, p);
  } else {
    scalar::axpy_mod(y.data(), x.data(), n, c, p);
  }
}

void scale_mod(Backend b, std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p) {
  if (b == Backend::Avx2) {
    avx2::scale_mod(y.data(), y.size(), c, p);
  } else {
    scalar::scale_mod(y.data(), y.size(), c, p);
  }
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x, std::uint32_t c, std::uint32_t p) {
  axpy_mod(active_backend(), y, x, c, p);
}

void scale_mod(std::span<std::uint32_t> y, std::uint32_t c, std::uint32_t p) {
  scale_mod(active_backend(), y, c, p);
}

}  // namespace tga::kernels
