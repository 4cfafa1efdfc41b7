#pragma once

#include <map>
#include <optional>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/hecke.hpp"
#include "soergel/kl_table.hpp"

namespace soergel {

/// A class in the Grothendieck group of the principal block, in the basis of
/// Verma classes [M_w]. The same data as an element of Z[W].
using GrothOElt = std::map<ElementRef, BigInt>;

GrothOElt verma_class(ElementRef w);
/// [M_w] -> [M_w] + [M_ws], extended linearly.
GrothOElt theta_action(const CoxeterSystem& sys, const GrothOElt& a, Generator s);

/// Classes of the indecomposable projectives by the recursion
/// [Pr_e] = [M_e], [Pr_x] = [Theta_s Pr_w] - sum_{z<w, zs<z} mu(z,w) [Pr_z]
/// for x = ws > w. Memoized.
class ProjectiveClasses {
 public:
  explicit ProjectiveClasses(const KLTable& table);
  const GrothOElt& of(ElementRef x);

 private:
  const KLTable* table_;
  std::vector<std::optional<GrothOElt>> memo_;
};

GrothOElt proj_class(const KLTable& table, ElementRef x);

/// [L_y] as sum over x >= y of sign * h_{xw0,yw0}(1) [M_x]. `corrected` uses
/// the sign (-1)^{l(y)+l(x)}; `paper` drops it, as the z-independent sign of
/// the printed inversion formula would give.
GrothOElt simple_class(const KLTable& table, ElementRef y, Convention convention);

/// (Pr_x : M_y) == h_{y,x}(1).
bool bgg_check(const KLTable& table, ProjectiveClasses& proj, ElementRef x, ElementRef y);
bool bgg_check(const KLTable& table, ElementRef x, ElementRef y);

/// Row x holds the Verma coordinates of [Pr_x]: entry [x][y] = (Pr_x : M_y).
std::vector<std::vector<BigInt>> projective_transition_matrix(const KLTable& table);
/// Row y holds the Verma coordinates of [L_y].
std::vector<std::vector<BigInt>> simple_transition_matrix(const KLTable& table, Convention convention);

}  // namespace soergel
