#pragma once

#include <string>
#include <vector>

#include "soergel/numeric.hpp"

namespace soergel {

class AlgNum;

/// The cyclotomic field Q(z) with z = exp(i*pi/N), a primitive 2N-th root of
/// unity. Every value 2cos(k*pi/N) = z^k + z^-k lives here, so this is the
/// coefficient field of the geometric representation whenever N is a common
/// multiple of the finite bond orders. Elements are polynomials in z of degree
/// below phi(2N), reduced modulo the cyclotomic polynomial, which makes the
/// representation canonical.
class CyclotomicField {
 public:
  /// Interned instance; lives for the whole program.
  static const CyclotomicField& get(int n);

  int n() const { return n_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Coefficients of the cyclotomic polynomial, lowest degree first.
  const std::vector<BigInt>& modulus() const { return modulus_; }

  AlgNum zero() const;
  AlgNum rational(const Rational& q) const;
  /// z^k for any integer k.
  AlgNum zeta_pow(int k) const;
  /// 2cos(k*pi/N).
  AlgNum two_cos(int k) const;
  /// cos(pi/m) for a divisor m of 2N (m == 1 allowed).
  AlgNum cos_pi_over(int m) const;

  /// Reduces a coefficient vector of arbitrary length modulo the cyclotomic
  /// polynomial, in place; the result has exactly degree() entries.
  void reduce(std::vector<Rational>& coeffs) const;

 private:
  explicit CyclotomicField(int n);
  friend class AlgNum;

  struct RealBasis {
    std::vector<int> ks;                      // cos(k*pi/N) for k in ks
    std::vector<std::vector<Rational>> rows;  // z-coordinates of each
  };
  const RealBasis& real_basis() const { return real_basis_; }

  int n_;
  std::vector<BigInt> modulus_;
  RealBasis real_basis_;
};

/// An exact element of a CyclotomicField.
class AlgNum {
 public:
  AlgNum(const CyclotomicField& field, std::vector<Rational> coeffs);

  const CyclotomicField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(AlgNum a, const Rational& q);
  AlgNum operator-() const;

  friend bool operator==(const AlgNum& a, const AlgNum& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Real part as floating point (elements used here are real).
  double to_double() const;
  /// Exact form as a rational combination of cos(k*pi/N), e.g.
  /// "-1/2" or "-cos(pi/5)". Falls back to powers of z for non-real values.
  std::string to_string() const;

  std::size_t hash() const;

 private:
  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

}  // namespace soergel
