#include "tga/kernels.hpp"

namespace tga::kernels::scalar {

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
  }
}

void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * y[i]) % p);
  }
}

}  // namespace tga::kernels::scalar
