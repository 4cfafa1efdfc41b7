#pragma once

#include <optional>
#include <vector>

#include "soergel/numeric.hpp"

// Exact dense linear algebra over Q, sized for the small systems that show up
// in the bimodule lab and in field-basis conversions.
namespace soergel::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, every row has the same width

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row; zero rows are removed.
std::vector<int> rref(Matrix& rows, int ncols);

int rank(Matrix rows, int ncols);

/// Basis of {x : A x = 0} for an A with `ncols` columns.
std::vector<Vector> nullspace(Matrix a, int ncols);

/// Some x with sum_i x_i * cols[i] == target, or nullopt when target is not in
/// the span. Columns all have the same length as target.
std::optional<Vector> solve_in_span(const std::vector<Vector>& cols, const Vector& target);

}  // namespace soergel::linalg
