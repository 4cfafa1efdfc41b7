#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "soergel/coxeter_matrix.hpp"
#include "soergel/laurent.hpp"
#include "soergel/multipoly.hpp"

// Bott-Samelson bimodules BS(s_1...s_m) = R (x)_{R^{s_1}} R ... (x)_{R^{s_m}} R (m)
// over R = Q[x_1..x_n] with s_i swapping x_i and x_{i+1}. Elements are kept
// in the free left-module basis 1 (x) c_1 (x) ... (x) c_m, c_k in {1, alpha_k}.
namespace soergel {

/// Bit k-1 set means alpha sits in right slot k.
using Label = std::uint32_t;

class BSBimodule {
 public:
  /// shift k gives BS(word)(k).
  BSBimodule(int nvars, Word word, int shift = 0);

  int nvars() const { return n_; }
  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  int shift() const { return shift_; }
  std::size_t basis_size() const { return std::size_t{1} << word_.size(); }
  /// -m + 2|label| - shift.
  int basis_degree(Label e) const;
  /// sum over the basis of v^degree; (v + v^-1)^m up to the shift.
  LaurentPoly graded_left_rank() const;

  friend bool operator==(const BSBimodule&, const BSBimodule&) = default;

 private:
  int n_;
  Word word_;
  int shift_;
};

/// Graded left rank of BS(word) with the variable count irrelevant.
LaurentPoly graded_left_rank(const Word& word);

/// f_0 (x) f_1 (x) ... (x) f_m, not yet normalized.
struct PureTensor {
  std::vector<MultiPoly> slots;
};

class TensorElt {
 public:
  explicit TensorElt(const BSBimodule& module) : module_(module) {}
  static TensorElt basis(const BSBimodule& module, Label e);
  /// Normal form of a pure tensor: each right slot, right to left, is split
  /// as a + b alpha with a, b invariant, and a, b move one slot left.
  static TensorElt from_pure(const BSBimodule& module, const PureTensor& t);

  const BSBimodule& module() const { return module_; }
  const std::map<Label, MultiPoly>& coords() const { return coords_; }
  MultiPoly coeff(Label e) const;
  bool is_zero() const { return coords_.empty(); }

  void add_term(Label e, const MultiPoly& f);
  TensorElt& operator+=(const TensorElt& o);
  TensorElt& operator-=(const TensorElt& o);
  friend TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }
  friend TensorElt operator-(TensorElt a, const TensorElt& b) { return a -= b; }
  TensorElt scaled(const Rational& c) const;

  /// f * t
  TensorElt left_mul(const MultiPoly& f) const;
  /// t * f, renormalized.
  TensorElt right_mul(const MultiPoly& f) const;

  /// Degree if homogeneous (zero counts as homogeneous of any degree, and
  /// returns nullopt).
  std::optional<int> degree() const;

  friend bool operator==(const TensorElt& a, const TensorElt& b) {
    return a.module_ == b.module_ && a.coords_ == b.coords_;
  }

  /// "(x1 + x2) [1|a] + 1/2 [a|1]" with labels in increasing order; slot k
  /// shows 'a' for alpha and '1' otherwise.
  std::string to_string() const;

 private:
  BSBimodule module_;
  std::map<Label, MultiPoly> coords_;
};

/// Rebuilds t from pure tensors f_e (x) c_1 (x) ... and normalizes again.
/// Idempotent on normal forms.
TensorElt normalize(const TensorElt& t);

/// Coordinates of 1 (x)_R t in k (x)_R BS(word): the constant terms of the
/// left coefficients.
std::map<Label, Rational> module_coordinates(const TensorElt& t);

/// A degree-homogeneous left-linear map between Bott-Samelson bimodules,
/// given by the images of the domain basis.
class BimoduleMap {
 public:
  /// Validates that every image lies in `codomain` with degree
  /// basis_degree(e) + degree.
  BimoduleMap(BSBimodule domain, BSBimodule codomain, int degree, std::vector<TensorElt> images);
  static BimoduleMap identity(const BSBimodule& m);

  const BSBimodule& domain() const { return domain_; }
  const BSBimodule& codomain() const { return codomain_; }
  int degree() const { return degree_; }
  const std::vector<TensorElt>& images() const { return images_; }

  TensorElt apply(const TensorElt& t) const;
  /// f(b x_j) == f(b) x_j for every basis element b and variable x_j.
  bool is_right_linear() const;
  bool is_zero() const;

  BimoduleMap& operator+=(const BimoduleMap& o);
  BimoduleMap& operator-=(const BimoduleMap& o);
  friend BimoduleMap operator+(BimoduleMap a, const BimoduleMap& b) { return a += b; }
  friend BimoduleMap operator-(BimoduleMap a, const BimoduleMap& b) { return a -= b; }
  /// (r f)(b) = r f(b)
  BimoduleMap left_scaled(const MultiPoly& r) const;

  friend bool operator==(const BimoduleMap& a, const BimoduleMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.images_ == b.images_;
  }

  /// One line per domain basis element: "[1|a] -> ...".
  std::string to_string() const;

 private:
  BSBimodule domain_;
  BSBimodule codomain_;
  int degree_;
  std::vector<TensorElt> images_;
};

/// f o g. ShapeMismatch unless g lands in the domain of f.
BimoduleMap compose(const BimoduleMap& f, const BimoduleMap& g);

/// The decomposition B_s B_s = B_s(1) + B_s(-1) in two variables.
struct SplitReport {
  BimoduleMap e1, e2;
  /// mult: f (x) g (x) h -> fg (x) h, and unit: f (x) h -> f (x) 1 (x) h.
  BimoduleMap mult, unit;
  /// proj: f (x) g (x) h -> f d(g) (x) h, and incl: f (x) h -> f (x) alpha/2 (x) h.
  BimoduleMap proj, incl;
  bool idempotent = false;   // e1 e1 = e1, e2 e2 = e2
  bool orthogonal = false;   // e1 e2 = e2 e1 = 0
  bool complete = false;     // e1 + e2 = id
  bool image1_iso = false;   // (mult e1)(e1 unit) = id, (e1 unit)(mult e1) = e1
  bool image2_iso = false;   // (proj e2)(e2 incl) = id, (e2 incl)(proj e2) = e2
  /// Shifts k of the images B_s(k), read off the degrees of mult and proj.
  int shift1 = 0, shift2 = 0;
  LaurentPoly rank1, rank2;
  bool ok() const { return idempotent && orthogonal && complete && image1_iso && image2_iso; }
};

/// Throws SplitFailed if an identity does not hold.
SplitReport split_BsBs();

struct HomGenerator {
  BimoduleMap map;
  int degree;
};

struct HomBasisResult {
  /// Free left-module generators, by degree.
  std::vector<HomGenerator> generators;
  /// (degree, dimension over Q of the degree part of Hom).
  std::vector<std::pair<int, std::size_t>> dims;
  int min_degree = 0, max_degree = 0;
};

/// Solves for bimodule maps degree by degree in [lowest possible, max_degree]
/// and keeps those not in the left R-span of earlier ones.
HomBasisResult hom_basis(const BSBimodule& domain, const BSBimodule& codomain, int max_degree);
/// End(B_s) in two variables, up to degree 4 unless told otherwise.
HomBasisResult hom_basis_Bs_Bs(int max_degree = 4);

struct CyclicReport {
  bool generated = false;
  /// (degree, dim of the sub-bimodule generated by 1 (x) ... (x) 1, full dim)
  std::vector<std::tuple<int, std::size_t, std::size_t>> per_degree;
};

/// Whether 1 (x) 1 (x) ... (x) 1 generates BS(word) as a bimodule. Checked
/// in degrees up to the top basis degree, which suffices because the free
/// basis lives there.
CyclicReport cyclic_generation_check(const Word& word, int nvars);

}  // namespace soergel
