#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "soergel/numeric.hpp"

namespace soergel {

/// Sparse Laurent polynomial in one variable v with arbitrary-precision
/// integer coefficients. Terms are kept sorted by exponent with no zero
/// coefficients, so equality is structural and the zero polynomial has no
/// terms.
class LaurentPoly {
 public:
  struct Term {
    int exponent;
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;

  static LaurentPoly constant(const BigInt& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const BigInt& c, int exponent);
  /// v^k
  static LaurentPoly v_pow(int k) { return monomial(1, k); }
  static LaurentPoly one() { return monomial(1, 0); }
  /// Builds from arbitrary (exponent, coeff) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coeff(int exponent) const;
  /// Lowest and highest stored exponent. Precondition: nonzero.
  int min_exponent() const { return terms_.front().exponent; }
  int max_exponent() const { return terms_.back().exponent; }

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// *this += c * v^shift * other. The hot path of every table builder.
  void add_scaled(const LaurentPoly& other, const BigInt& c, int shift = 0);

  LaurentPoly& operator+=(const LaurentPoly& o) { add_scaled(o, 1); return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { add_scaled(o, -1); return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& c) { return a *= c; }
  friend LaurentPoly operator*(const BigInt& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human readable form, e.g. "v^-2 - 2 + v^2". Zero prints as "0".
  std::string to_string(std::string_view var = "v") const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
/// v -> v^-1.
LaurentPoly lp_bar(const LaurentPoly& a);
/// Value at v = 1: the sum of all coefficients.
BigInt lp_eval_one(const LaurentPoly& a);
/// True iff every exponent is >= 1 (the zero polynomial qualifies).
bool lp_in_vZv(const LaurentPoly& a);
/// True iff every coefficient is >= 0.
bool lp_nonnegative(const LaurentPoly& a);

/// Parses "1 + v^2", "-3v^-1 + 2*v", "v". Whitespace is ignored.
LaurentPoly parse_laurent(std::string_view text, char var = 'v');

}  // namespace soergel
