#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/hecke.hpp"
#include "soergel/kernels.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

enum class KLEngine {
  /// Fixed-width int64 rows with SIMD kernels, exact fallback on overflow.
  automatic,
  /// Fixed-width only; KernelOverflow escapes.
  dense,
  /// Arbitrary precision throughout.
  exact,
};

struct KLTableOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  KLEngine engine = KLEngine::automatic;
  /// Kernel variant for the dense engine; the best available when unset.
  std::optional<kernels::Isa> isa;
};

/// All KL polynomials h_{y,x} of a finite Coxeter group. Built stratum by
/// stratum with the mu-recursion b_x = b_w b_s - sum mu(z,w) b_z, in parallel
/// within each length stratum. The result does not depend on the thread count.
class KLTable {
 public:
  using Column = std::vector<std::pair<ElementRef, LaurentPoly>>;

  static KLTable build(const CoxeterSystem& sys, const KLTableOptions& options = {});

  const CoxeterSystem& system() const { return *sys_; }
  /// h_{y,x}; zero unless y <= x.
  LaurentPoly poly(ElementRef y, ElementRef x) const;
  /// Coefficient of v in h_{y,x}.
  BigInt mu(ElementRef y, ElementRef x) const;
  /// The support of b_x with its coefficients, sorted by index of y.
  const Column& column(ElementRef x) const { return columns_[x.index()]; }
  HeckeElt basis_element(ElementRef x) const;
  /// Number of pairs y <= x.
  std::size_t pair_count() const;

  /// Engine that produced the table (dense or exact, never automatic).
  KLEngine engine_used() const { return engine_used_; }
  /// Set when the dense engine overflowed and the exact engine took over.
  bool fell_back() const { return fell_back_; }
  kernels::Isa isa_used() const { return isa_used_; }
  unsigned threads_used() const { return threads_used_; }

 private:
  const CoxeterSystem* sys_ = nullptr;
  std::vector<Column> columns_;
  KLEngine engine_used_ = KLEngine::exact;
  bool fell_back_ = false;
  kernels::Isa isa_used_ = kernels::Isa::scalar;
  unsigned threads_used_ = 1;
};

LaurentPoly kl_polynomial(const KLTable& table, ElementRef y, ElementRef x);
BigInt mu(const KLTable& table, ElementRef y, ElementRef x);

/// sum_z sign * h_{z,x} h_{zw0,yw0} - [x == y]; zero when the inversion
/// identity holds for (x, y) under the given sign convention.
LaurentPoly inversion_defect(const KLTable& table, ElementRef x, ElementRef y, Convention convention);

/// Coordinates in the KL basis {b_x}.
using KLCoords = std::map<ElementRef, LaurentPoly>;

/// Rewrites h in the KL basis by peeling off the longest element of the
/// support.
KLCoords kl_expand(const KLTable& table, const HeckeElt& h);
/// sum c_x b_x in the standard basis.
HeckeElt kl_evaluate(const KLTable& table, const KLCoords& c);
/// (sum c_u b_u) * b_s, computed in KL coordinates:
/// b_u b_s = (v + v^-1) b_u if us < u, else b_us + sum_{z<u, zs<z} mu(z,u) b_z.
KLCoords kl_right_mul_bs(const KLTable& table, const KLCoords& c, Generator s);
/// b_x b_y in the KL basis for every y, indexed by y.
std::vector<KLCoords> structure_constants_row(const KLTable& table, ElementRef x);
/// b_x b_y in the KL basis.
KLCoords structure_constants(const KLTable& table, ElementRef x, ElementRef y);

}  // namespace soergel
