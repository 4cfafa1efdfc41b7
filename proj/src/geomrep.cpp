#include "soergel/geomrep.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "soergel/coxeter.hpp"
#include "soergel/errors.hpp"

namespace soergel {

AlgMatrix::AlgMatrix(const CyclotomicField& field, int dim)
    : field_(&field), dim_(dim), cells_(static_cast<std::size_t>(dim * dim), field.zero()) {}

AlgMatrix AlgMatrix::identity(const CyclotomicField& field, int dim) {
  AlgMatrix m(field, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = field.rational(1);
  return m;
}

AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
  AlgMatrix c(*a.field_, a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const AlgNum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

AlgMatrix AlgMatrix::transposed() const {
  AlgMatrix t(*field_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t AlgMatrix::hash() const {
  std::size_t seed = static_cast<std::size_t>(dim_);
  for (const auto& c : cells_) hash_combine(seed, c.hash());
  return seed;
}

std::string AlgMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    os << "[";
    for (int j = 0; j < dim_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

std::string AlgMatrix::to_string_approx(int precision) const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision);
  for (int i = 0; i < dim_; ++i) {
    os << "[";
    for (int j = 0; j < dim_; ++j) {
      double x = (*this)(i, j).to_double();
      if (x == 0.0) x = 0.0;  // no "-0.000"
      os << (j ? ", " : "") << x;
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

// Bond orders 1, 2, 3 give rational cosines; only the others need roots of
// unity, so the field is Q(exp(i pi / N)) with N the lcm of those.
int field_order(const CoxeterMatrix& m) {
  int n = 1;
  for (int x : m.entries())
    if (x != CoxeterMatrix::kInfinity && x > 3) n = std::lcm(n, x);
  return n;
}

AlgNum minus_cos_pi_over(const CyclotomicField& f, int m) {
  switch (m) {
    case 1:
      return f.rational(1);
    case 2:
      return f.rational(0);
    case 3:
      return f.rational(Rational(-1, 2));
    default:
      return -f.cos_pi_over(m);
  }
}

}  // namespace

BilinearForm build_form(const CoxeterMatrix& matrix) {
  const auto& field = CyclotomicField::get(field_order(matrix));
  BilinearForm form{AlgMatrix(field, matrix.rank()), false};
  for (int s = 0; s < matrix.rank(); ++s)
    for (int t = 0; t < matrix.rank(); ++t) {
      if (matrix.is_infinite(s, t)) {
        form.gram(s, t) = field.rational(-1);
        form.infinite_bond = true;
      } else {
        form.gram(s, t) = minus_cos_pi_over(field, matrix(s, t));
      }
    }
  return form;
}

GeometricRep build_geometric_rep(const CoxeterMatrix& matrix) {
  GeometricRep rep{matrix, build_form(matrix), {}};
  const int n = matrix.rank();
  const auto& field = rep.field();
  for (int s = 0; s < n; ++s) {
    // Column t holds s(a_t) = a_t - 2 (a_t, a_s) a_s.
    AlgMatrix r = AlgMatrix::identity(field, n);
    for (int t = 0; t < n; ++t) r(s, t) -= rep.form.gram(s, t) * Rational(2);
    rep.reflections.push_back(std::move(r));
  }
  return rep;
}

const AlgMatrix& reflection_matrix(const GeometricRep& rep, Generator s) {
  if (s < 0 || s >= rep.rank()) throw InvalidArgument("generator out of range");
  return rep.reflections[static_cast<std::size_t>(s)];
}

AlgMatrix right_multiply_reflection(const GeometricRep& rep, const AlgMatrix& m, Generator s) {
  // (M S)_{., t} = M_{., t} - 2 (a_s, a_t) M_{., s}
  const int n = m.dim();
  AlgMatrix out = m;
  for (int t = 0; t < n; ++t) {
    const AlgNum& g = rep.form.gram(s, t);
    if (g.is_zero()) continue;
    const AlgNum f = g * Rational(2);
    for (int i = 0; i < n; ++i)
      if (!m(i, s).is_zero()) out(i, t) -= f * m(i, s);
  }
  return out;
}

AlgMatrix left_multiply_reflection(const GeometricRep& rep, const AlgMatrix& m, Generator s) {
  // Only row s changes: row_s -= 2 sum_t (a_s, a_t) row_t.
  const int n = m.dim();
  AlgMatrix out = m;
  for (int t = 0; t < n; ++t) {
    const AlgNum& g = rep.form.gram(s, t);
    if (g.is_zero()) continue;
    const AlgNum f = g * Rational(2);
    for (int j = 0; j < n; ++j)
      if (!m(t, j).is_zero()) out(s, j) -= f * m(t, j);
  }
  return out;
}

AlgMatrix word_matrix(const GeometricRep& rep, const Word& word) {
  AlgMatrix m = AlgMatrix::identity(rep.field(), rep.rank());
  for (Generator s : word) m = right_multiply_reflection(rep, m, s);
  return m;
}

RelationReport verify_relations(const GeometricRep& rep) {
  RelationReport report;
  const int n = rep.rank();
  const AlgMatrix id = AlgMatrix::identity(rep.field(), n);
  for (int s = 0; s < n; ++s) {
    ++report.pairs_checked;
    const auto& r = reflection_matrix(rep, s);
    if (!(r * r == id)) report.violations.push_back({s, s, 1});
  }
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      if (rep.matrix.is_infinite(s, t)) {
        ++report.pairs_skipped_infinite;
        continue;
      }
      ++report.pairs_checked;
      const int m = rep.matrix(s, t);
      const AlgMatrix st = reflection_matrix(rep, s) * reflection_matrix(rep, t);
      AlgMatrix p = id;
      for (int k = 0; k < m; ++k) p = p * st;
      if (!(p == id)) report.violations.push_back({s, t, m});
    }
  return report;
}

FaithfulnessReport faithfulness_check(const CoxeterSystem& sys) {
  const GeometricRep rep = build_geometric_rep(sys.matrix());
  std::unordered_set<AlgMatrix, AlgMatrixHash> seen;
  for (std::size_t i = 0; i < sys.size(); ++i)
    seen.insert(word_matrix(rep, sys.normal_word(ElementRef(static_cast<std::uint32_t>(i)))));
  FaithfulnessReport r;
  r.elements = sys.size();
  r.distinct_matrices = seen.size();
  r.faithful = r.elements == r.distinct_matrices;
  return r;
}

std::size_t generated_group_size(const GeometricRep& rep, std::size_t cap) {
  std::unordered_set<AlgMatrix, AlgMatrixHash> seen;
  std::vector<AlgMatrix> frontier{AlgMatrix::identity(rep.field(), rep.rank())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<AlgMatrix> next;
    for (const auto& m : frontier)
      for (int s = 0; s < rep.rank(); ++s) {
        AlgMatrix sm = left_multiply_reflection(rep, m, s);
        if (seen.insert(sm).second) {
          if (seen.size() > cap) return cap + 1;
          next.push_back(std::move(sm));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

bool reflections_preserve_form(const GeometricRep& rep) {
  for (const auto& b : rep.reflections)
    if (!(b.transposed() * rep.form.gram * b == rep.form.gram)) return false;
  return true;
}

}  // namespace soergel
