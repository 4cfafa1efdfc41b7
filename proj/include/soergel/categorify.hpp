#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/hecke.hpp"
#include "soergel/kl_table.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

/// A class in the split Grothendieck group of Soergel bimodules: a sum of
/// shifted indecomposables B_w(k) with non-negative multiplicities. Stored
/// folded, as w -> sum_k mult * v^k.
class SBimClass {
 public:
  struct Summand {
    ElementRef w;
    int shift;
    BigInt mult;
    friend bool operator==(const Summand&, const Summand&) = default;
  };

  SBimClass() = default;
  /// Throws NotEffective if a coefficient is negative.
  explicit SBimClass(KLCoords folded);
  static SBimClass indecomposable(ElementRef w, int shift = 0);

  const KLCoords& folded() const { return folded_; }
  /// Shift-multiset view, sorted by (w index, shift).
  std::vector<Summand> summands() const;
  bool is_zero() const { return folded_.empty(); }

  SBimClass& operator+=(const SBimClass& o);
  friend SBimClass operator+(SBimClass a, const SBimClass& b) { return a += b; }
  /// B(k) for every summand B.
  SBimClass shifted(int k) const;

  friend bool operator==(const SBimClass&, const SBimClass&) = default;

 private:
  KLCoords folded_;
};

/// Decomposition of BS(s_1 ... s_n): the product b_{s_1} ... b_{s_n} in the
/// Hecke algebra, re-expanded in the KL basis.
SBimClass bs_class(const KLTable& table, const Word& word);

/// [B_w](k) -> v^k b_w.
HeckeElt chi(const KLTable& table, const SBimClass& c);
/// Inverse of chi on effective elements; NotEffective otherwise.
SBimClass phi(const KLTable& table, const HeckeElt& h);

/// Graded rank of Hom(B, B') as (chi B, chi B').
LaurentPoly hom_graded_rank(const KLTable& table, const SBimClass& b, const SBimClass& b2);

struct PositivityViolation {
  enum class Kind { kl_polynomial, structure_constant };
  Kind kind;
  /// kl_polynomial: h_{a,b}. structure_constant: coefficient of b_c in b_a b_b.
  ElementRef a, b, c;
  LaurentPoly value;
};

struct ScanOptions {
  bool structure_constants = true;
};

struct PositivityReport {
  std::size_t polynomials_checked = 0;
  std::size_t products_checked = 0;
  bool structure_constants_scanned = false;
  std::vector<PositivityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every h_{y,x} and, if enabled, every coefficient of every b_x b_y
/// in the KL basis for non-negativity. Violations are in index order.
PositivityReport positivity_scan(const KLTable& table, const ScanOptions& options = {});

struct PoloWitness {
  int m;
  int n;  // the witness lives in S_n
  Word y;
  Word x;
};

struct PoloSearchResult {
  std::optional<PoloWitness> witness;
  /// Largest S_n scanned.
  int searched_up_to = 0;
};

/// Finds the smallest n <= max_n admitting v^m q(v^2) = h_{y,x} in S_n, and
/// there the smallest m, ties broken by (x, y) index order. q is given in the variable q = v^2 and must be
/// monic with non-negative coefficients and exponents (InvalidTarget).
PoloSearchResult polo_search(const LaurentPoly& q, int max_n, const KLTableOptions& options = {});

}  // namespace soergel
