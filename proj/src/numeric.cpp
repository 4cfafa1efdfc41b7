#include "soergel/numeric.hpp"

#include <functional>

namespace soergel {

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<std::int64_t> to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(z.get_si());
}

std::size_t hash_value(const BigInt& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(p) + 1);
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i)
    hash_combine(seed, std::hash<mp_limb_t>{}(mpz_getlimbn(p, static_cast<mp_size_t>(i))));
  return seed;
}

std::size_t hash_value(const Rational& q) {
  std::size_t seed = hash_value(BigInt(q.get_num()));
  hash_combine(seed, hash_value(BigInt(q.get_den())));
  return seed;
}

}  // namespace soergel
