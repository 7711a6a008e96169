#include "torelli/simd/kernels.hpp"

namespace torelli::simd::scalar {

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
          std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(dst[i]) + static_cast<std::uint64_t>(c) * src[i]) % p);
  }
}

void scale(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * dst[i]) % p);
  }
}

std::uint32_t dot(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                  std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace torelli::simd::scalar
