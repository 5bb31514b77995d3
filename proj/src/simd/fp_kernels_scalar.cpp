#include "nbihom/simd/fp_kernels.hpp"

namespace nbihom::simd::detail {

void submul_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p, std::size_t n) {
  if (a == 0) return;
  const std::uint64_t neg_a = p - a;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    y[i] = static_cast<std::uint32_t>((y[i] + neg_a * x[i]) % p);
  }
}

void scale_scalar(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * y[i] % p);
}

}  // namespace nbihom::simd::detail
