#include "soergel/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "soergel/errors.hpp"

namespace soergel {

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exponent, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exponent += k;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const BigInt& c, int shift) {
  if (other.is_zero() || c == 0) return;
  // Single-term fast path: update in place.
  if (other.terms_.size() == 1) {
    const int e = other.terms_[0].exponent + shift;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.exponent < x; });
    if (it != terms_.end() && it->exponent == e) {
      it->coeff += c * other.terms_[0].coeff;
      if (it->coeff == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{e, c * other.terms_[0].coeff});
    }
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->exponent < b->exponent + shift)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->exponent + shift < a->exponent) {
      out.push_back({b->exponent + shift, c * b->coeff});
      ++b;
    } else {
      BigInt s = a->coeff + c * b->coeff;
      if (s != 0) out.push_back({a->exponent, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) raw.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (t.exponent == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << var;
    if (t.exponent != 1) os << "^" << t.exponent;
  }
  return os.str();
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_bar(const LaurentPoly& a) {
  std::vector<LaurentPoly::Term> t(a.terms().rbegin(), a.terms().rend());
  for (auto& x : t) x.exponent = -x.exponent;
  return LaurentPoly::from_terms(std::move(t));
}

BigInt lp_eval_one(const LaurentPoly& a) {
  BigInt s = 0;
  for (const auto& t : a.terms()) s += t.coeff;
  return s;
}

bool lp_in_vZv(const LaurentPoly& a) { return a.is_zero() || a.min_exponent() >= 1; }

bool lp_nonnegative(const LaurentPoly& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const LaurentPoly::Term& t) { return t.coeff > 0; });
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, char var) : var_(var) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  LaurentPoly parse() {
    if (s_.empty()) throw InvalidArgument("empty polynomial");
    std::vector<LaurentPoly::Term> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse polynomial '" + s_ + "': " + what);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(s_[pos_++]);
    return d;
  }

  LaurentPoly::Term term(int sign) {
    BigInt c = 1;
    std::string d = digits();
    bool have_coeff = !d.empty();
    if (have_coeff) c = BigInt(d);
    if (peek() == '*') {
      if (!have_coeff) fail("dangling '*'");
      ++pos_;
    }
    int exponent = 0;
    if (peek() == var_) {
      ++pos_;
      exponent = 1;
      if (peek() == '^') {
        ++pos_;
        int esign = 1;
        if (peek() == '-' || peek() == '+') {
          esign = (s_[pos_] == '-') ? -1 : 1;
          ++pos_;
        }
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        exponent = esign * std::stoi(e);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    return {exponent, sign * c};
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, char var) {
  return LaurentParser(text, var).parse();
}

}  // namespace soergel
