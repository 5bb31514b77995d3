#pragma once

#include <cstddef>
#include <cstdint>

namespace nbihom::simd {

enum class KernelIsa { Scalar, Avx2 };

/// Row kernels for dense elimination over F_p. All inputs are residues in
/// [0, p) and outputs stay in [0, p).
struct FpKernels {
  KernelIsa isa;
  const char* name;
  /// y[i] = y[i] - a*x[i]  (mod p)
  void (*submul)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p, std::size_t n);
  /// y[i] = a*y[i]  (mod p)
  void (*scale)(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n);
};

const FpKernels& scalar_fp_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const FpKernels* avx2_fp_kernels();

/// The kernels used by elimination: AVX2 when available, scalar otherwise.
const FpKernels& fp_kernels();

/// Pins the kernel variant (tests and benchmarks). Returns false when the
/// requested variant is unavailable on this machine.
bool select_fp_kernels(KernelIsa isa);

namespace detail {
void submul_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p, std::size_t n);
void scale_scalar(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n);
#if defined(NBIHOM_HAVE_AVX2)
void submul_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p, std::size_t n);
void scale_avx2(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n);
#endif
}  // namespace detail

}  // namespace nbihom::simd
