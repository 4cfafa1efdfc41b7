#include "soergel/hecke.hpp"

#include <sstream>

#include "soergel/errors.hpp"

namespace soergel {

namespace {

const LaurentPoly& vinv_minus_v() {
  static const LaurentPoly p = LaurentPoly::from_terms({{-1, 1}, {1, -1}});
  return p;
}

const LaurentPoly& v_minus_vinv() {
  static const LaurentPoly p = LaurentPoly::from_terms({{-1, -1}, {1, 1}});
  return p;
}

}  // namespace

HeckeElt::HeckeElt(const CoxeterSystem& sys, Support support) : sys_(&sys) {
  for (auto& [x, c] : support)
    if (!c.is_zero()) support_.emplace(x, std::move(c));
}

LaurentPoly HeckeElt::coeff(ElementRef x) const {
  auto it = support_.find(x);
  return it == support_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add_term(ElementRef x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = support_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) support_.erase(it);
}

void HeckeElt::add_scaled(const HeckeElt& other, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [x, p] : other.support_) add_term(x, p * c);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [x, p] : o.support_) add_term(x, p);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [x, p] : o.support_) add_term(x, -p);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a) {
  HeckeElt out(*a.sys_);
  out.add_scaled(a, c);
  return out;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return hk_mul(a, b); }

std::string HeckeElt::to_string() const {
  if (support_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, p] : support_) {
    if (!first) os << " + ";
    first = false;
    if (p != LaurentPoly::one()) os << "(" << p.to_string() << ") ";
    os << "delta_{" << sys_->word_string(x) << "}";
  }
  return os.str();
}

HeckeElt delta(const CoxeterSystem& sys, ElementRef x) {
  if (x.index() >= sys.size()) throw InvalidArgument("element index out of range");
  HeckeElt h(sys);
  h.add_term(x, LaurentPoly::one());
  return h;
}

HeckeElt right_mul_delta(const HeckeElt& a, Generator s) {
  const auto& sys = a.system();
  HeckeElt out(sys);
  for (const auto& [x, p] : a.support()) {
    const ElementRef xs = sys.right_mult(x, s);
    out.add_term(xs, p);
    if (sys.is_right_descent(x, s)) out.add_term(x, p * vinv_minus_v());
  }
  return out;
}

HeckeElt right_mul_b(const HeckeElt& a, Generator s) {
  HeckeElt out = right_mul_delta(a, s);
  for (const auto& [x, p] : a.support()) out.add_term(x, p.shifted(1));
  return out;
}

HeckeElt hk_mul(const HeckeElt& a, const HeckeElt& b) {
  if (&a.system() != &b.system()) throw InvalidArgument("Hecke elements from different systems");
  const auto& sys = a.system();
  HeckeElt out(sys);
  for (const auto& [y, q] : b.support()) {
    HeckeElt t = a;
    for (Generator s : sys.normal_word(y)) t = right_mul_delta(t, s);
    out.add_scaled(t, q);
  }
  return out;
}

BarInvolution::BarInvolution(const CoxeterSystem& sys) : sys_(&sys), cache_(sys.size()) {}

const HeckeElt& BarInvolution::of_delta(ElementRef x) const {
  std::lock_guard lock(mu_);
  // Fill the chain of prefixes of the normal word bottom up.
  const Word& word = sys_->normal_word(x);
  ElementRef w = kIdentity;
  if (!cache_[0]) cache_[0] = std::make_unique<HeckeElt>(delta(*sys_, kIdentity));
  for (Generator s : word) {
    const ElementRef ws = sys_->right_mult(w, s);
    if (!cache_[ws.index()]) {
      const HeckeElt& prev = *cache_[w.index()];
      HeckeElt next = right_mul_delta(prev, s);
      next.add_scaled(prev, v_minus_vinv());
      cache_[ws.index()] = std::make_unique<HeckeElt>(std::move(next));
    }
    w = ws;
  }
  return *cache_[x.index()];
}

HeckeElt BarInvolution::operator()(const HeckeElt& a) const {
  HeckeElt out(*sys_);
  for (const auto& [x, p] : a.support()) out.add_scaled(of_delta(x), lp_bar(p));
  return out;
}

HeckeElt hk_bar(const HeckeElt& a) { return BarInvolution(a.system())(a); }

HeckeElt DirectKLSolver::solve(ElementRef x) const {
  const auto interval = sys_->lower_interval(x);
  std::map<ElementRef, LaurentPoly> h;
  h.emplace(x, LaurentPoly::one());
  for (auto zi = interval.rbegin() + 1; zi < interval.rend(); ++zi) {
    const ElementRef z = *zi;
    LaurentPoly g;
    for (const auto& [y, hy] : h) {
      const LaurentPoly r = bar_.of_delta(y).coeff(z);
      if (!r.is_zero()) g += lp_bar(hy) * r;
    }
    if (sgn(g.coeff(0)) != 0 || lp_bar(g) != -g)
      throw DegreeViolation("self-duality equation for delta_" + sys_->word_string(z) + " in b_" +
                            sys_->word_string(x) + " has no solution in vZ[v]");
    std::vector<LaurentPoly::Term> pos;
    for (const auto& t : g.terms())
      if (t.exponent > 0) pos.push_back(t);
    LaurentPoly hz = LaurentPoly::from_terms(std::move(pos));
    if (!hz.is_zero()) h.emplace(z, std::move(hz));
  }
  return HeckeElt(*sys_, std::move(h));
}

HeckeElt kl_basis_direct(const CoxeterSystem& sys, ElementRef x) { return DirectKLSolver(sys).solve(x); }

const HeckeElt& MuRecursion::basis(ElementRef x) {
  if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  HeckeElt b = x == kIdentity ? delta(*sys_, kIdentity) : basis_via(x, sys_->last_letter(x));
  return memo_.emplace(x, std::move(b)).first->second;
}

HeckeElt MuRecursion::basis_via(ElementRef x, Generator s) {
  if (!sys_->is_right_descent(x, s))
    throw InvalidArgument("generator " + std::to_string(s + 1) + " is not a right descent of " + sys_->word_string(x));
  const ElementRef w = sys_->right_mult(x, s);
  const HeckeElt& bw = basis(w);
  HeckeElt out = right_mul_b(bw, s);
  for (const auto& [z, p] : bw.support()) {
    if (z == w || !sys_->is_right_descent(z, s)) continue;
    const BigInt mu = p.coeff(1);
    if (mu != 0) out.add_scaled(basis(z), LaurentPoly::constant(-mu));
  }
  return out;
}

HeckeElt kl_basis_mu_recursion(const CoxeterSystem& sys, ElementRef x) {
  MuRecursion r(sys);
  return r.basis(x);
}

HeckeElt kl_basis_mu_recursion(const CoxeterSystem& sys, ElementRef x, Generator s) {
  MuRecursion r(sys);
  return r.basis_via(x, s);
}

LaurentPoly pairing(const HeckeElt& a, const HeckeElt& b) {
  LaurentPoly out;
  for (const auto& [x, p] : a.support()) {
    auto it = b.support().find(x);
    if (it != b.support().end()) out += p * it->second;
  }
  return out;
}

const char* convention_name(Convention c) { return c == Convention::paper ? "paper" : "corrected"; }

Convention parse_convention(std::string_view text) {
  if (text == "paper") return Convention::paper;
  if (text == "corrected") return Convention::corrected;
  throw InvalidArgument("convention must be 'paper' or 'corrected'");
}

GroupAlgebraElt specialize_v1(const HeckeElt& a) {
  GroupAlgebraElt out;
  for (const auto& [x, p] : a.support()) {
    BigInt c = lp_eval_one(p);
    if (c != 0) out.emplace(x, std::move(c));
  }
  return out;
}

GroupAlgebraElt group_algebra_mul(const CoxeterSystem& sys, const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  GroupAlgebraElt out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) out[sys.mult(x, y)] += c * d;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace soergel
