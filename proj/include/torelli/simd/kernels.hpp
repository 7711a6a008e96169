#pragma once

// Modular vector kernels used by the dense elimination code. Every kernel has
// a portable scalar reference and, where the CPU supports it, an AVX2 variant.
// The variant is picked once at startup; both produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace torelli::simd {

enum class Isa { Scalar, Avx2 };

// The AVX2 kernels reduce through double precision and need p^2 + p < 2^53.
inline constexpr std::uint32_t kMaxVectorPrime = (1u << 26);

struct KernelTable {
  Isa isa;
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
               std::size_t n, std::uint32_t p);
  // dst[i] = (c * dst[i]) mod p
  void (*scale)(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
  // sum a[i] * b[i] mod p
  std::uint32_t (*dot)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                       std::uint32_t p);
};

namespace scalar {
void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
          std::uint32_t p);
void scale(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
std::uint32_t dot(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                  std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TORELLI_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
          std::uint32_t p);
void scale(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
std::uint32_t dot(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                  std::uint32_t p);
}  // namespace avx2
#endif

bool cpu_has_avx2();

const KernelTable& table(Isa isa);

// Kernel table for the running CPU. Honors TORELLI_FORCE_SCALAR=1.
const KernelTable& active();

std::string_view isa_name(Isa isa);

// Span helpers over the active table. Fall back to scalar when p is too large
// for the vector reduction.
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
          std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
std::uint32_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::uint32_t p);

}  // namespace torelli::simd
