#include <cstdlib>
#include <cstring>

#include "prab/error.hpp"
#include "prab/simd/kernels.hpp"

namespace prab::simd {

namespace {

constexpr Dispatch kScalar{Isa::Scalar, detail::horner_batch_scalar,
                           detail::weighted_row_sum_scalar};
#if defined(PRAB_HAVE_AVX2)
constexpr Dispatch kAvx2{Isa::Avx2, detail::horner_batch_avx2, detail::weighted_row_sum_avx2};
#endif
#if defined(PRAB_HAVE_NEON)
constexpr Dispatch kNeon{Isa::Neon, detail::horner_batch_neon, detail::weighted_row_sum_neon};
#endif

const Dispatch& select() {
  const char* env = std::getenv("PRAB_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return kScalar;
#if defined(PRAB_HAVE_AVX2)
  if (isa_supported(Isa::Avx2)) return kAvx2;
#endif
#if defined(PRAB_HAVE_NEON)
  if (isa_supported(Isa::Neon)) return kNeon;
#endif
  return kScalar;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(PRAB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(PRAB_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const Dispatch& kernels() {
  static const Dispatch& chosen = select();
  return chosen;
}

const Dispatch& kernels(Isa isa) {
  if (!isa_supported(isa))
    throw Error(ErrorKind::DomainError, std::string("SIMD variant not available: ") + isa_name(isa));
  switch (isa) {
#if defined(PRAB_HAVE_AVX2)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(PRAB_HAVE_NEON)
    case Isa::Neon: return kNeon;
#endif
    default: return kScalar;
  }
}

}  // namespace prab::simd
