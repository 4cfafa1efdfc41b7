#include "soergel/linalg.hpp"

#include <utility>

namespace soergel::linalg {

std::vector<int> rref(Matrix& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

int rank(Matrix rows, int ncols) { return static_cast<int>(rref(rows, ncols).size()); }

std::vector<Vector> nullspace(Matrix a, int ncols) {
  const auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector x(static_cast<std::size_t>(ncols), Rational(0));
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[static_cast<std::size_t>(pivots[i])] = -a[i][static_cast<std::size_t>(f)];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& cols, const Vector& target) {
  const int k = static_cast<int>(cols.size());
  Matrix aug;
  aug.reserve(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    Vector row;
    row.reserve(static_cast<std::size_t>(k) + 1);
    for (const auto& c : cols) row.push_back(c[i]);
    row.push_back(target[i]);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug, k + 1);
  Vector x(static_cast<std::size_t>(k), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == k) return std::nullopt;  // inconsistent row
    x[static_cast<std::size_t>(pivots[i])] = aug[i][static_cast<std::size_t>(k)];
  }
  return x;
}

}  // namespace soergel::linalg
