#include <atomic>

#include "nbihom/simd/fp_kernels.hpp"

namespace nbihom::simd {

namespace {

const FpKernels kScalar{KernelIsa::Scalar, "scalar", &detail::submul_scalar, &detail::scale_scalar};

#if defined(NBIHOM_HAVE_AVX2)
const FpKernels kAvx2{KernelIsa::Avx2, "avx2", &detail::submul_avx2, &detail::scale_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const FpKernels* detect() {
  const FpKernels* avx2 = avx2_fp_kernels();
  return avx2 != nullptr ? avx2 : &kScalar;
}

std::atomic<const FpKernels*>& active() {
  static std::atomic<const FpKernels*> kernels{detect()};
  return kernels;
}

}  // namespace

const FpKernels& scalar_fp_kernels() { return kScalar; }

const FpKernels* avx2_fp_kernels() {
#if defined(NBIHOM_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const FpKernels& fp_kernels() { return *active().load(std::memory_order_relaxed); }

bool select_fp_kernels(KernelIsa isa) {
  const FpKernels* chosen = isa == KernelIsa::Scalar ? &kScalar : avx2_fp_kernels();
  if (chosen == nullptr) return false;
  active().store(chosen, std::memory_order_relaxed);
  return true;
}

}  // namespace nbihom::simd
