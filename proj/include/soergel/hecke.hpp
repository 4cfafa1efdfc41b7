#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

/// Element of the Hecke algebra in the standard basis {delta_x}.
class HeckeElt {
 public:
  using Support = std::map<ElementRef, LaurentPoly>;

  explicit HeckeElt(const CoxeterSystem& sys) : sys_(&sys) {}
  HeckeElt(const CoxeterSystem& sys, Support support);

  const CoxeterSystem& system() const { return *sys_; }
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  /// Coefficient of delta_x (zero when absent).
  LaurentPoly coeff(ElementRef x) const;

  /// *this += c * delta_x
  void add_term(ElementRef x, const LaurentPoly& c);
  /// *this += c * other
  void add_scaled(const HeckeElt& other, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a);
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.support_ == b.support_; }

  /// e.g. "delta_{1,2} + (v) delta_{e}"
  std::string to_string() const;

 private:
  const CoxeterSystem* sys_;
  Support support_;
};

HeckeElt delta(const CoxeterSystem& sys, ElementRef x);
HeckeElt hk_mul(const HeckeElt& a, const HeckeElt& b);
/// a * delta_s, with delta_x delta_s = delta_xs if xs > x, else
/// delta_xs + (v^-1 - v) delta_x.
HeckeElt right_mul_delta(const HeckeElt& a, Generator s);
/// a * b_s = a * (delta_s + v)
HeckeElt right_mul_b(const HeckeElt& a, Generator s);

/// The bar involution with memoized images of the standard basis.
/// Thread-safe.
class BarInvolution {
 public:
  explicit BarInvolution(const CoxeterSystem& sys);

  /// bar(delta_x), built as the product of bar(delta_s) = delta_s + (v - v^-1)
  /// along the normal word.
  const HeckeElt& of_delta(ElementRef x) const;
  HeckeElt operator()(const HeckeElt& a) const;

 private:
  const CoxeterSystem* sys_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<HeckeElt>> cache_;
};

HeckeElt hk_bar(const HeckeElt& a);

/// Solves for b_x directly: descending over z <= x, the coefficient of
/// delta_z in bar(b_x) = b_x forces h_z - bar(h_z) = sum_{z<y<=x}
/// bar(h_y) r_{z,y}, with r_{z,y} the delta_z coefficient of bar(delta_y).
/// h_z is the positive-degree half. Throws DegreeViolation if the right side
/// is not antisymmetric under bar.
class DirectKLSolver {
 public:
  explicit DirectKLSolver(const CoxeterSystem& sys) : sys_(&sys), bar_(sys) {}
  HeckeElt solve(ElementRef x) const;

 private:
  const CoxeterSystem* sys_;
  BarInvolution bar_;
};

HeckeElt kl_basis_direct(const CoxeterSystem& sys, ElementRef x);

/// b_x = b_w b_s - sum_{z<w, zs<z} mu(z,w) b_z for x = ws > w. Memoizes every
/// b it computes. Not thread-safe.
class MuRecursion {
 public:
  explicit MuRecursion(const CoxeterSystem& sys) : sys_(&sys) {}
  /// Uses the last letter of the normal word of x as s.
  const HeckeElt& basis(ElementRef x);
  /// Uses a given right descent s of x; the result does not depend on s.
  HeckeElt basis_via(ElementRef x, Generator s);

 private:
  const CoxeterSystem* sys_;
  std::map<ElementRef, HeckeElt> memo_;
};

HeckeElt kl_basis_mu_recursion(const CoxeterSystem& sys, ElementRef x);
HeckeElt kl_basis_mu_recursion(const CoxeterSystem& sys, ElementRef x, Generator s);

/// (delta_x, delta_y) = Kronecker delta, bilinear over Z[v, v^-1].
LaurentPoly pairing(const HeckeElt& a, const HeckeElt& b);

/// Sign choice in the inversion formula. `paper` uses (-1)^{l(y)+l(x)} for
/// every z; `corrected` uses (-1)^{l(z)+l(x)}.
enum class Convention { paper, corrected };

const char* convention_name(Convention c);
Convention parse_convention(std::string_view text);

/// Group algebra element: coefficient of each group element.
using GroupAlgebraElt = std::map<ElementRef, BigInt>;

/// Applies v = 1 to every coefficient.
GroupAlgebraElt specialize_v1(const HeckeElt& a);
GroupAlgebraElt group_algebra_mul(const CoxeterSystem& sys, const GroupAlgebraElt& a, const GroupAlgebraElt& b);

}  // namespace soergel
