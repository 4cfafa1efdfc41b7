#include "soergel/coxeter.hpp"

#include <algorithm>
#include <unordered_map>

#include "soergel/errors.hpp"
#include "soergel/geomrep.hpp"

namespace soergel {

CoxeterSystem CoxeterSystem::build(const CoxeterMatrix& matrix, std::size_t max_elements) {
  if (matrix.rank() > 64) throw InvalidMatrix("rank above 64 is not supported");
  const GeometricRep rep = build_geometric_rep(matrix);
  const auto r = static_cast<std::size_t>(matrix.rank());

  CoxeterSystem sys;
  sys.matrix_ = matrix;
  std::vector<AlgMatrix> mats;
  std::unordered_map<AlgMatrix, std::uint32_t, AlgMatrixHash> index;

  mats.push_back(AlgMatrix::identity(rep.field(), matrix.rank()));
  index.emplace(mats.front(), 0);
  sys.words_.push_back({});
  sys.lengths_.push_back(0);

  // Elements are appended in discovery order. Processing them in that order
  // with generators ascending discovers each length stratum in lexicographic
  // order of normal words, so indices come out sorted by (length, lex).
  for (std::size_t i = 0; i < mats.size(); ++i) {
    sys.right_.resize(mats.size() * r);
    for (std::size_t s = 0; s < r; ++s) {
      AlgMatrix ws = right_multiply_reflection(rep, mats[i], static_cast<Generator>(s));
      auto it = index.find(ws);
      std::uint32_t j;
      if (it != index.end()) {
        j = it->second;
      } else {
        if (mats.size() >= max_elements)
          throw GroupTooLarge("enumeration exceeded " + std::to_string(max_elements) +
                              " elements without closing");
        j = static_cast<std::uint32_t>(mats.size());
        Word w = sys.words_[i];
        w.push_back(static_cast<Generator>(s));
        sys.words_.push_back(std::move(w));
        sys.lengths_.push_back(sys.lengths_[i] + 1);
        index.emplace(ws, j);
        mats.push_back(std::move(ws));
      }
      sys.right_.resize(mats.size() * r);
      sys.right_[i * r + s] = j;
    }
  }

  const std::size_t n = mats.size();
  sys.left_.resize(n * r);
  sys.right_descents_.assign(n, 0);
  sys.left_descents_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < r; ++s) {
      const auto sw = index.at(left_multiply_reflection(rep, mats[i], static_cast<Generator>(s)));
      sys.left_[i * r + s] = sw;
      if (sys.lengths_[sw] < sys.lengths_[i]) sys.left_descents_[i] |= std::uint64_t{1} << s;
      if (sys.lengths_[sys.right_[i * r + s]] < sys.lengths_[i]) sys.right_descents_[i] |= std::uint64_t{1} << s;
    }
  }

  const int top = sys.lengths_.back();
  sys.longest_ = ElementRef(static_cast<std::uint32_t>(n - 1));
  sys.stratum_starts_.assign(static_cast<std::size_t>(top) + 2, n);
  for (std::size_t i = n; i-- > 0;) sys.stratum_starts_[static_cast<std::size_t>(sys.lengths_[i])] = i;
  return sys;
}

ElementRef CoxeterSystem::mult(ElementRef a, ElementRef b) const {
  for (Generator s : normal_word(b)) a = right_mult(a, s);
  return a;
}

ElementRef CoxeterSystem::inverse(ElementRef w) const {
  const Word& word = normal_word(w);
  ElementRef x = kIdentity;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = right_mult(x, *it);
  return x;
}

ElementRef CoxeterSystem::element_of(const Word& word) const {
  ElementRef x = kIdentity;
  for (Generator s : word) {
    if (s < 0 || s >= rank()) throw InvalidArgument("generator out of range");
    x = right_mult(x, s);
  }
  return x;
}

bool CoxeterSystem::bruhat_leq(ElementRef y, ElementRef x) const {
  // With xs < x: y <= x iff ys <= xs (when ys < y) or y <= xs (when ys > y).
  while (true) {
    if (length(y) > length(x)) return false;
    if (length(y) == length(x)) return y == x;
    if (y == kIdentity) return true;
    const Generator s = last_letter(x);
    x = right_mult(x, s);
    if (is_right_descent(y, s)) y = right_mult(y, s);
  }
}

std::vector<ElementRef> CoxeterSystem::lower_interval(ElementRef x) const {
  std::vector<ElementRef> out;
  for (std::uint32_t i = 0; i <= x.id; ++i)
    if (bruhat_leq(ElementRef(i), x)) out.push_back(ElementRef(i));
  return out;
}

LaurentPoly length_gen_poly(const CoxeterSystem& sys) {
  std::vector<LaurentPoly::Term> terms;
  const auto& starts = sys.stratum_starts();
  for (std::size_t k = 0; k + 1 < starts.size(); ++k)
    terms.push_back({static_cast<int>(k), BigInt(static_cast<unsigned long>(starts[k + 1] - starts[k]))});
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace soergel
