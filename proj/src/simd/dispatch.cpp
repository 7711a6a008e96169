#include <cstdlib>
#include <cstring>

#include "torelli/simd/kernels.hpp"

namespace torelli::simd {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::axpy, &scalar::scale, &scalar::dot};
#if defined(TORELLI_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::axpy, &avx2::scale, &avx2::dot};
#endif

const KernelTable& select() {
  const char* force = std::getenv("TORELLI_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "1") == 0) return kScalar;
  if (cpu_has_avx2()) return table(Isa::Avx2);
  return kScalar;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(TORELLI_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& table(Isa isa) {
#if defined(TORELLI_HAVE_AVX2_KERNELS)
  if (isa == Isa::Avx2) return kAvx2;
#else
  (void)isa;
#endif
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
          std::uint32_t p) {
  const KernelTable& k = p < kMaxVectorPrime ? active() : kScalar;
  k.axpy(dst.data(), src.data(), c, dst.size(), p);
}

void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  const KernelTable& k = p < kMaxVectorPrime ? active() : kScalar;
  k.scale(dst.data(), c, dst.size(), p);
}

std::uint32_t dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::uint32_t p) {
  const KernelTable& k = p < kMaxVectorPrime ? active() : kScalar;
  return k.dot(a.data(), b.data(), a.size(), p);
}

}  // namespace torelli::simd
