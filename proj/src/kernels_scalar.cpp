#include "soergel/kernels.hpp"

namespace soergel::kernels::scalar {

bool add_into(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  bool overflow = false;
  for (std::size_t i = 0; i < n; ++i) overflow |= __builtin_add_overflow(dst[i], src[i], &dst[i]);
  return overflow;
}

bool sub_scaled_into(std::int64_t* dst, const std::int64_t* src, std::int64_t c, std::size_t n) {
  bool overflow = false;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t p;
    overflow |= __builtin_mul_overflow(c, src[i], &p);
    overflow |= __builtin_sub_overflow(dst[i], p, &dst[i]);
  }
  return overflow;
}

}  // namespace soergel::kernels::scalar
