#include "soergel/categorify.hpp"

#include "soergel/errors.hpp"

namespace soergel {

SBimClass::SBimClass(KLCoords folded) {
  for (auto& [w, p] : folded) {
    if (p.is_zero()) continue;
    if (!lp_nonnegative(p)) throw NotEffective("negative multiplicity of B_" + std::to_string(w.id));
    folded_.emplace(w, std::move(p));
  }
}

SBimClass SBimClass::indecomposable(ElementRef w, int shift) { return SBimClass(KLCoords{{w, LaurentPoly::v_pow(shift)}}); }

std::vector<SBimClass::Summand> SBimClass::summands() const {
  std::vector<Summand> out;
  for (const auto& [w, p] : folded_)
    for (const auto& t : p.terms()) out.push_back({w, t.exponent, t.coeff});
  return out;
}

SBimClass& SBimClass::operator+=(const SBimClass& o) {
  for (const auto& [w, p] : o.folded_) folded_[w] += p;
  return *this;
}

SBimClass SBimClass::shifted(int k) const {
  SBimClass out = *this;
  for (auto& [w, p] : out.folded_) p = p.shifted(k);
  return out;
}

SBimClass bs_class(const KLTable& table, const Word& word) {
  const auto& sys = table.system();
  HeckeElt h = delta(sys, kIdentity);
  for (Generator s : word) {
    if (s < 0 || s >= sys.rank()) throw InvalidArgument("generator out of range");
    h = right_mul_b(h, s);
  }
  return SBimClass(kl_expand(table, h));
}

HeckeElt chi(const KLTable& table, const SBimClass& c) { return kl_evaluate(table, c.folded()); }

SBimClass phi(const KLTable& table, const HeckeElt& h) {
  KLCoords coords = kl_expand(table, h);
  for (const auto& [w, p] : coords)
    if (!lp_nonnegative(p))
      throw NotEffective("KL coordinate at " + table.system().word_string(w) + " is " + p.to_string() +
                         ", not a class of a bimodule");
  return SBimClass(std::move(coords));
}

LaurentPoly hom_graded_rank(const KLTable& table, const SBimClass& b, const SBimClass& b2) {
  return pairing(chi(table, b), chi(table, b2));
}

PositivityReport positivity_scan(const KLTable& table, const ScanOptions& options) {
  const auto& sys = table.system();
  PositivityReport report;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const ElementRef x(static_cast<std::uint32_t>(i));
    for (const auto& [y, h] : table.column(x)) {
      ++report.polynomials_checked;
      if (!lp_nonnegative(h))
        report.violations.push_back({PositivityViolation::Kind::kl_polynomial, y, x, kIdentity, h});
    }
  }
  report.structure_constants_scanned = options.structure_constants;
  if (!options.structure_constants) return report;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const ElementRef x(static_cast<std::uint32_t>(i));
    const auto rows = structure_constants_row(table, x);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      ++report.products_checked;
      for (const auto& [z, c] : rows[j])
        if (!lp_nonnegative(c))
          report.violations.push_back(
              {PositivityViolation::Kind::structure_constant, x, ElementRef(static_cast<std::uint32_t>(j)), z, c});
    }
  }
  return report;
}

PoloSearchResult polo_search(const LaurentPoly& q, int max_n, const KLTableOptions& options) {
  if (q.is_zero() || q.min_exponent() < 0 || !lp_nonnegative(q) || q.terms().back().coeff != 1)
    throw InvalidTarget("target must be a monic polynomial in q with non-negative coefficients");
  std::vector<LaurentPoly::Term> doubled;
  for (const auto& t : q.terms()) doubled.push_back({2 * t.exponent, t.coeff});
  const LaurentPoly target = LaurentPoly::from_terms(std::move(doubled));
  const int span = target.max_exponent() - target.min_exponent();

  PoloSearchResult result;
  for (int n = 2; n <= max_n; ++n) {
    result.searched_up_to = n;
    const auto sys = CoxeterSystem::build(CoxeterMatrix::from_type("A" + std::to_string(n - 1)));
    // h_{y,x} has degree at most l(x) - l(y) <= l(w0); skip hopeless groups.
    if (span > sys.max_length()) continue;
    const auto table = KLTable::build(sys, options);
    // Smallest shift wins; ties go to the first pair in (x, y) index order.
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const ElementRef x(static_cast<std::uint32_t>(i));
      for (const auto& [y, h] : table.column(x)) {
        const int m = h.min_exponent() - target.min_exponent();
        if (result.witness && m >= result.witness->m) continue;
        if (h == target.shifted(m)) result.witness = PoloWitness{m, n, sys.normal_word(y), sys.normal_word(x)};
      }
    }
    if (result.witness) return result;
  }
  return result;
}

}  // namespace soergel
