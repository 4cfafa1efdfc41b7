#include "soergel/multipoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "soergel/errors.hpp"

namespace soergel {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw InvalidArgument("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

int total(const Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

}  // namespace

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total(e) != d) return false;
  return true;
}

int MultiPoly::poly_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(static_cast<std::size_t>(n_), 0)); }

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != n_) throw ShapeMismatch("exponent vector length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.n_ != n_) throw ShapeMismatch("polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.n_ != n_) throw ShapeMismatch("polynomials in different numbers of variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw ShapeMismatch("polynomials in different numbers of variables");
  MultiPoly out(a.n_);
  Exponents e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag < 0) mag = -mag;
    const bool unit = total(e) == 0;
    if (mag != 1 || unit) os << soergel::to_string(mag) << (unit ? "" : "*");
    bool firstvar = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << "x" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

std::vector<Exponents> monomials_of_degree(int nvars, int k) {
  std::vector<Exponents> out;
  if (k < 0 || nvars < 0) return out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponents e(static_cast<std::size_t>(nvars), 0);
  // Recursive fill, last variable takes the remainder.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly act_generator(Generator i, const MultiPoly& p) {
  if (i < 0 || i + 1 >= p.nvars()) throw InvalidArgument("generator out of range for the variable count");
  MultiPoly out(p.nvars());
  for (const auto& [key, c] : p.terms()) {
    Exponents e = key;
    std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i) + 1]);
    out.add_term(e, c);
  }
  return out;
}

MultiPoly act(const CoxeterSystem& sys, ElementRef w, const MultiPoly& p) {
  if (!sys.matrix().is_type_a() || sys.rank() + 1 != p.nvars())
    throw ShapeMismatch("permutation action needs type A_{n-1} on n variables");
  const Word& word = sys.normal_word(w);
  MultiPoly out = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = act_generator(*it, out);
  return out;
}

MultiPoly simple_root(int nvars, Generator i) {
  return MultiPoly::variable(nvars, i) - MultiPoly::variable(nvars, i + 1);
}

MultiPoly demazure(Generator i, const MultiPoly& p) {
  if (i < 0 || i + 1 >= p.nvars()) throw InvalidArgument("generator out of range for the variable count");
  const auto a_idx = static_cast<std::size_t>(i);
  const auto b_idx = a_idx + 1;
  MultiPoly out(p.nvars());
  // x^a y^b -> (xy)^min * (x^d - y^d)/(x - y) * sign, d = |a - b|.
  for (const auto& [e, c] : p.terms()) {
    const int a = e[a_idx];
    const int b = e[b_idx];
    if (a == b) continue;
    const int lo = std::min(a, b);
    const int d = std::abs(a - b);
    const Rational sign = a > b ? c : Rational(-c);
    Exponents f = e;
    for (int j = 0; j < d; ++j) {
      f[a_idx] = lo + j;
      f[b_idx] = lo + d - 1 - j;
      out.add_term(f, sign);
    }
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> invariant_split(Generator i, const MultiPoly& p) {
  MultiPoly a = (p + act_generator(i, p)) * Rational(1, 2);
  MultiPoly b = demazure(i, p) * Rational(1, 2);
  return {std::move(a), std::move(b)};
}

}  // namespace soergel
