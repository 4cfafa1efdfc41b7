#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Fixed-width coefficient kernels for the dense KL engine. Each polynomial is
// a row of int64 coefficients; the kernels report signed overflow instead of
// wrapping so the caller can fall back to exact arithmetic.
namespace soergel::kernels {

enum class Isa { scalar, avx2 };

/// dst[i] += src[i] for i < n. Returns true on overflow.
using AddFn = bool (*)(std::int64_t* dst, const std::int64_t* src, std::size_t n);
/// dst[i] -= c * src[i] for i < n. Returns true on overflow.
using SubScaledFn = bool (*)(std::int64_t* dst, const std::int64_t* src, std::int64_t c, std::size_t n);

struct Table {
  Isa isa;
  AddFn add_into;
  SubScaledFn sub_scaled_into;
};

/// Best kernels the running CPU supports, chosen once.
const Table& active();
/// A specific variant; throws InvalidArgument if the CPU or build lacks it.
const Table& get(Isa isa);
bool available(Isa isa);
std::string_view isa_name(Isa isa);

namespace scalar {
bool add_into(std::int64_t* dst, const std::int64_t* src, std::size_t n);
bool sub_scaled_into(std::int64_t* dst, const std::int64_t* src, std::int64_t c, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool add_into(std::int64_t* dst, const std::int64_t* src, std::size_t n);
bool sub_scaled_into(std::int64_t* dst, const std::int64_t* src, std::int64_t c, std::size_t n);
}  // namespace avx2

}  // namespace soergel::kernels
