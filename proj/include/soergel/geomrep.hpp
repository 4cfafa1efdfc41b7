#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "soergel/algnum.hpp"
#include "soergel/coxeter_matrix.hpp"

namespace soergel {

class CoxeterSystem;

/// Square matrix over a cyclotomic field.
class AlgMatrix {
 public:
  AlgMatrix(const CyclotomicField& field, int dim);
  static AlgMatrix identity(const CyclotomicField& field, int dim);

  int dim() const { return dim_; }
  const CyclotomicField& field() const { return *field_; }
  AlgNum& operator()(int i, int j) { return cells_[static_cast<std::size_t>(i * dim_ + j)]; }
  const AlgNum& operator()(int i, int j) const { return cells_[static_cast<std::size_t>(i * dim_ + j)]; }

  friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b);
  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) { return a.cells_ == b.cells_; }
  AlgMatrix transposed() const;

  std::size_t hash() const;
  /// One row per line, entries as exact cos expressions.
  std::string to_string() const;
  /// Same layout with floating approximations.
  std::string to_string_approx(int precision = 9) const;

 private:
  const CyclotomicField* field_;
  int dim_;
  std::vector<AlgNum> cells_;
};

struct AlgMatrixHash {
  std::size_t operator()(const AlgMatrix& m) const { return m.hash(); }
};

/// The form (a_s, a_t) = -cos(pi/m_st) on the span of the simple roots.
struct BilinearForm {
  AlgMatrix gram;
  /// Set when some bond is infinite; those entries hold -1.
  bool infinite_bond = false;
};

BilinearForm build_form(const CoxeterMatrix& matrix);

/// Reflection matrices of the geometric representation, acting on the basis
/// of simple roots: s(a) = a - 2 (a, a_s) a_s.
struct GeometricRep {
  CoxeterMatrix matrix;  // the bond orders the relations are checked against
  BilinearForm form;
  std::vector<AlgMatrix> reflections;

  const CyclotomicField& field() const { return form.gram.field(); }
  int rank() const { return matrix.rank(); }
};

GeometricRep build_geometric_rep(const CoxeterMatrix& matrix);

const AlgMatrix& reflection_matrix(const GeometricRep& rep, Generator s);

/// m * s where s is a simple reflection; a column update instead of a full
/// matrix product.
AlgMatrix right_multiply_reflection(const GeometricRep& rep, const AlgMatrix& m, Generator s);
/// s * m, a single-row update.
AlgMatrix left_multiply_reflection(const GeometricRep& rep, const AlgMatrix& m, Generator s);

/// Matrix of the product of the word's simple reflections, left to right.
AlgMatrix word_matrix(const GeometricRep& rep, const Word& word);

struct RelationViolation {
  Generator s;
  Generator t;
  int order;  // the m that (st)^m = 1 was checked for
};

struct RelationReport {
  std::vector<RelationViolation> violations;
  int pairs_checked = 0;
  int pairs_skipped_infinite = 0;
  bool ok() const { return violations.empty(); }
};

/// Checks s^2 = 1 for every generator and (st)^m_st = 1 for every finite bond
/// recorded in rep.matrix. Infinite bonds are skipped.
RelationReport verify_relations(const GeometricRep& rep);

struct FaithfulnessReport {
  bool faithful = false;
  std::size_t elements = 0;
  std::size_t distinct_matrices = 0;
};

/// Computes the matrix of every enumerated element from its normal word and
/// checks they are pairwise distinct.
FaithfulnessReport faithfulness_check(const CoxeterSystem& sys);

/// Number of distinct matrices generated by the reflections, by closure.
/// Returns cap + 1 when the closure exceeds cap.
std::size_t generated_group_size(const GeometricRep& rep, std::size_t cap);

/// Checks B^T G B == G for every reflection B.
bool reflections_preserve_form(const GeometricRep& rep);

}  // namespace soergel
