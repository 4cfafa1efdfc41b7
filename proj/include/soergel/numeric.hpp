#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace soergel {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& z) { return z.get_str(); }
std::string to_string(const Rational& q);

/// Value as int64 if it fits.
std::optional<std::int64_t> to_int64(const BigInt& z);

std::size_t hash_value(const BigInt& z);
std::size_t hash_value(const Rational& q);

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace soergel
