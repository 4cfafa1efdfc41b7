#include "soergel/algnum.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "soergel/errors.hpp"
#include "soergel/linalg.hpp"

namespace soergel {

namespace {

using IntPoly = std::vector<BigInt>;  // lowest degree first

// Exact quotient of a by a monic divisor b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, BigInt(0));
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

IntPoly cyclotomic(int m) {
  IntPoly p(static_cast<std::size_t>(m) + 1, BigInt(0));
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic(d));
  return p;
}

}  // namespace

const CyclotomicField& CyclotomicField::get(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic field order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[n];
  if (!slot) slot.reset(new CyclotomicField(n));
  return *slot;
}

CyclotomicField::CyclotomicField(int n) : n_(n), modulus_(cyclotomic(2 * n)) {
  // Greedy basis of the real subfield drawn from 1, 2cos(pi/N), 2cos(2pi/N), ...
  linalg::Matrix echelon;
  const int d = degree();
  for (int k = 0; k <= n_ && static_cast<int>(echelon.size()) < d; ++k) {
    AlgNum b = (k == 0) ? rational(1) : two_cos(k);
    linalg::Matrix trial = echelon;
    trial.push_back(b.coeffs());
    if (linalg::rank(trial, d) > static_cast<int>(echelon.size())) {
      echelon = std::move(trial);
      real_basis_.ks.push_back(k);
      real_basis_.rows.push_back(b.coeffs());
    }
  }
}

void CyclotomicField::reduce(std::vector<Rational>& c) const {
  const std::size_t d = static_cast<std::size_t>(degree());
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    const Rational f = c[i];
    for (std::size_t j = 0; j <= d; ++j) c[i - d + j] -= f * modulus_[j];
  }
  c.resize(d, Rational(0));
}

AlgNum CyclotomicField::zero() const {
  return AlgNum(*this, std::vector<Rational>(static_cast<std::size_t>(degree()), Rational(0)));
}

AlgNum CyclotomicField::rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
  c[0] = q;
  return AlgNum(*this, std::move(c));
}

AlgNum CyclotomicField::zeta_pow(int k) const {
  const int period = 2 * n_;
  k = ((k % period) + period) % period;
  std::vector<Rational> c(static_cast<std::size_t>(std::max(k + 1, degree())), Rational(0));
  c[static_cast<std::size_t>(k)] = 1;
  reduce(c);
  return AlgNum(*this, std::move(c));
}

AlgNum CyclotomicField::two_cos(int k) const { return zeta_pow(k) + zeta_pow(-k); }

AlgNum CyclotomicField::cos_pi_over(int m) const {
  if (m < 1 || (2 * n_) % m != 0)
    throw InvalidArgument("cos(pi/" + std::to_string(m) + ") is not in Q(zeta_" +
                          std::to_string(2 * n_) + ")");
  // cos(pi/m) = (z^(N/m) + z^-(N/m)) / 2, with z^N = -1 covering m = 1.
  if (n_ % m != 0) throw InvalidArgument("bond order must divide N");
  return two_cos(n_ / m) * Rational(1, 2);
}

AlgNum::AlgNum(const CyclotomicField& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field.degree()) field.reduce(coeffs_);
}

bool AlgNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  a.field_->reduce(prod);
  return AlgNum(*a.field_, std::move(prod));
}

AlgNum operator*(AlgNum a, const Rational& q) {
  for (auto& c : a.coeffs_) c *= q;
  return a;
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

double AlgNum::to_double() const {
  double s = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0)
      s += coeffs_[k].get_d() * std::cos(static_cast<double>(k) * std::numbers::pi / field_->n());
  return s;
}

namespace {

std::string angle(int k, int n) {
  const int g = std::gcd(k, n);
  const int num = k / g;
  const int den = n / g;
  std::string s = (num == 1) ? "pi" : std::to_string(num) + "pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

}  // namespace

std::string AlgNum::to_string() const {
  if (is_zero()) return "0";
  const auto& basis = field_->real_basis();
  std::vector<linalg::Vector> cols(basis.rows.begin(), basis.rows.end());
  const auto sol = linalg::solve_in_span(cols, coeffs_);
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& unit) {
    if (c == 0) return;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (unit.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << unit;
    }
  };
  if (sol) {
    for (std::size_t i = 0; i < basis.ks.size(); ++i) {
      const int k = basis.ks[i];
      // basis entries are 1 and 2cos(k pi/N); print as multiples of cos.
      if (k == 0)
        emit((*sol)[i], "");
      else
        emit((*sol)[i] * 2, "cos(" + angle(k, field_->n()) + ")");
    }
  } else {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      emit(coeffs_[k], k == 0 ? "" : "z^" + std::to_string(k));
  }
  return os.str();
}

std::size_t AlgNum::hash() const {
  std::size_t seed = static_cast<std::size_t>(field_->n());
  for (const auto& c : coeffs_) hash_combine(seed, hash_value(c));
  return seed;
}

}  // namespace soergel
