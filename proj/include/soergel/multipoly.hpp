#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/numeric.hpp"

namespace soergel {

using Exponents = std::vector<int>;

/// Polynomial in x_1..x_n over Q. deg(x_i) = 2 when used as a grading.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : n_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  /// x_i, 0-based.
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponents& e, const Rational& c = 1);

  int nvars() const { return n_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  /// Polynomial degree (sum of exponents) of each term, or -1 for zero.
  bool is_homogeneous() const;
  int poly_degree() const;
  Rational constant_term() const;

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Monomials in increasing exponent-vector order, e.g. "1/2*x1 + x1^2*x2".
  std::string to_string() const;

 private:
  int n_;
  std::map<Exponents, Rational> terms_;
};

/// All exponent vectors of n variables with total degree k, sorted.
std::vector<Exponents> monomials_of_degree(int nvars, int k);

/// s_i swaps x_i and x_{i+1} (0-based i).
MultiPoly act_generator(Generator i, const MultiPoly& p);
/// w acts through its normal word: s_{i_1}(s_{i_2}(...s_{i_k}(p))). The
/// system must be of type A with rank nvars - 1.
MultiPoly act(const CoxeterSystem& sys, ElementRef w, const MultiPoly& p);

/// alpha_i = x_i - x_{i+1}.
MultiPoly simple_root(int nvars, Generator i);
/// (p - s_i p) / alpha_i, exact.
MultiPoly demazure(Generator i, const MultiPoly& p);
/// p = a + b alpha_i with a, b s_i-invariant.
std::pair<MultiPoly, MultiPoly> invariant_split(Generator i, const MultiPoly& p);

}  // namespace soergel
