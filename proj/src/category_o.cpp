#include "soergel/category_o.hpp"

#include <optional>

#include "soergel/errors.hpp"

namespace soergel {

namespace {

void add(GrothOElt& a, ElementRef w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = a.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) a.erase(it);
}

}  // namespace

GrothOElt verma_class(ElementRef w) { return {{w, BigInt(1)}}; }

GrothOElt theta_action(const CoxeterSystem& sys, const GrothOElt& a, Generator s) {
  if (s < 0 || s >= sys.rank()) throw InvalidArgument("generator out of range");
  GrothOElt out;
  for (const auto& [w, c] : a) {
    add(out, w, c);
    add(out, sys.right_mult(w, s), c);
  }
  return out;
}

ProjectiveClasses::ProjectiveClasses(const KLTable& table) : table_(&table), memo_(table.system().size()) {}

const GrothOElt& ProjectiveClasses::of(ElementRef x) {
  auto& slot = memo_[x.index()];
  if (slot) return *slot;
  const auto& sys = table_->system();
  if (x == kIdentity) {
    slot = verma_class(kIdentity);
    return *slot;
  }
  const Generator s = sys.last_letter(x);
  const ElementRef w = sys.right_mult(x, s);
  GrothOElt out = theta_action(sys, of(w), s);
  for (const auto& [z, h] : table_->column(w)) {
    if (z == w || !sys.is_right_descent(z, s)) continue;
    const BigInt m = h.coeff(1);
    if (m == 0) continue;
    for (const auto& [u, c] : of(z)) add(out, u, -m * c);
  }
  // `of` may have filled other slots, but memo_ never reallocates.
  memo_[x.index()] = std::move(out);
  return *memo_[x.index()];
}

GrothOElt proj_class(const KLTable& table, ElementRef x) { return ProjectiveClasses(table).of(x); }

GrothOElt simple_class(const KLTable& table, ElementRef y, Convention convention) {
  const auto& sys = table.system();
  const ElementRef w0 = sys.longest_element();
  const ElementRef yw0 = sys.mult(y, w0);
  GrothOElt out;
  // h_{xw0,yw0} is nonzero exactly for xw0 <= yw0, i.e. the column of yw0.
  for (const auto& [u, h] : table.column(yw0)) {
    const ElementRef x = sys.mult(u, w0);
    BigInt c = lp_eval_one(h);
    if (convention == Convention::corrected && (sys.length(x) + sys.length(y)) % 2 != 0) c = -c;
    add(out, x, c);
  }
  return out;
}

bool bgg_check(const KLTable& table, ProjectiveClasses& proj, ElementRef x, ElementRef y) {
  const auto& p = proj.of(x);
  auto it = p.find(y);
  const BigInt lhs = it == p.end() ? BigInt(0) : it->second;
  return lhs == lp_eval_one(table.poly(y, x));
}

bool bgg_check(const KLTable& table, ElementRef x, ElementRef y) {
  ProjectiveClasses proj(table);
  return bgg_check(table, proj, x, y);
}

std::vector<std::vector<BigInt>> projective_transition_matrix(const KLTable& table) {
  const std::size_t n = table.system().size();
  ProjectiveClasses proj(table);
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& [y, c] : proj.of(ElementRef(static_cast<std::uint32_t>(x)))) m[x][y.index()] = c;
  return m;
}

std::vector<std::vector<BigInt>> simple_transition_matrix(const KLTable& table, Convention convention) {
  const std::size_t n = table.system().size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t y = 0; y < n; ++y)
    for (const auto& [x, c] : simple_class(table, ElementRef(static_cast<std::uint32_t>(y)), convention))
      m[y][x.index()] = c;
  return m;
}

}  // namespace soergel
