#include "soergel/bimodule.hpp"

#include <bit>
#include <sstream>
#include <tuple>

#include "soergel/errors.hpp"
#include "soergel/linalg.hpp"

namespace soergel {

namespace {

Label bit(int slot) { return Label{1} << slot; }

}  // namespace

BSBimodule::BSBimodule(int nvars, Word word, int shift) : n_(nvars), word_(std::move(word)), shift_(shift) {
  if (n_ < 1) throw InvalidArgument("need at least one variable");
  if (word_.size() > 20) throw InvalidArgument("Bott-Samelson words longer than 20 are not supported");
  for (Generator s : word_)
    if (s < 0 || s + 1 >= n_)
      throw InvalidArgument("generator " + std::to_string(s + 1) + " needs at least " + std::to_string(s + 2) +
                            " variables");
}

int BSBimodule::basis_degree(Label e) const { return -length() + 2 * std::popcount(e) - shift_; }

LaurentPoly BSBimodule::graded_left_rank() const {
  LaurentPoly r;
  for (Label e = 0; e < basis_size(); ++e) r += LaurentPoly::v_pow(basis_degree(e));
  return r;
}

LaurentPoly graded_left_rank(const Word& word) {
  const LaurentPoly factor = LaurentPoly::from_terms({{-1, 1}, {1, 1}});
  LaurentPoly r = LaurentPoly::one();
  for (std::size_t i = 0; i < word.size(); ++i) r *= factor;
  return r;
}

TensorElt TensorElt::basis(const BSBimodule& module, Label e) {
  if (e >= module.basis_size()) throw InvalidArgument("basis label out of range");
  TensorElt t(module);
  t.add_term(e, MultiPoly::constant(module.nvars(), 1));
  return t;
}

TensorElt TensorElt::from_pure(const BSBimodule& module, const PureTensor& t) {
  const int m = module.length();
  const int n = module.nvars();
  if (static_cast<int>(t.slots.size()) != m + 1) throw ShapeMismatch("pure tensor needs length(word) + 1 slots");
  for (const auto& f : t.slots)
    if (f.nvars() != n) throw ShapeMismatch("slot polynomial has the wrong number of variables");

  // Each state carries a polynomial that is invariant for the slot to its
  // right and so may move one slot left.
  std::vector<std::pair<Label, MultiPoly>> states{{0, MultiPoly::constant(n, 1)}};
  for (int k = m; k >= 1; --k) {
    const Generator s = module.word()[static_cast<std::size_t>(k - 1)];
    std::vector<std::pair<Label, MultiPoly>> next;
    for (const auto& [label, carried] : states) {
      auto [a, b] = invariant_split(s, t.slots[static_cast<std::size_t>(k)] * carried);
      if (!a.is_zero()) next.emplace_back(label, std::move(a));
      if (!b.is_zero()) next.emplace_back(label | bit(k - 1), std::move(b));
    }
    states = std::move(next);
  }
  TensorElt out(module);
  for (const auto& [label, carried] : states) out.add_term(label, t.slots[0] * carried);
  return out;
}

MultiPoly TensorElt::coeff(Label e) const {
  auto it = coords_.find(e);
  return it == coords_.end() ? MultiPoly(module_.nvars()) : it->second;
}

void TensorElt::add_term(Label e, const MultiPoly& f) {
  if (e >= module_.basis_size()) throw InvalidArgument("basis label out of range");
  if (f.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(e, f);
  if (inserted) return;
  it->second += f;
  if (it->second.is_zero()) coords_.erase(it);
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  if (!(o.module_ == module_)) throw ShapeMismatch("tensor elements of different bimodules");
  for (const auto& [e, f] : o.coords_) add_term(e, f);
  return *this;
}

TensorElt& TensorElt::operator-=(const TensorElt& o) {
  if (!(o.module_ == module_)) throw ShapeMismatch("tensor elements of different bimodules");
  for (const auto& [e, f] : o.coords_) add_term(e, -f);
  return *this;
}

TensorElt TensorElt::scaled(const Rational& c) const {
  TensorElt out(module_);
  for (const auto& [e, f] : coords_) out.add_term(e, f * c);
  return out;
}

TensorElt TensorElt::left_mul(const MultiPoly& f) const {
  TensorElt out(module_);
  for (const auto& [e, g] : coords_) out.add_term(e, f * g);
  return out;
}

namespace {

PureTensor pure_of_basis(const BSBimodule& module, Label e, const MultiPoly& coeff) {
  PureTensor p;
  p.slots.push_back(coeff);
  for (int k = 0; k < module.length(); ++k)
    p.slots.push_back(e & bit(k) ? simple_root(module.nvars(), module.word()[static_cast<std::size_t>(k)])
                                 : MultiPoly::constant(module.nvars(), 1));
  return p;
}

}  // namespace

TensorElt TensorElt::right_mul(const MultiPoly& f) const {
  TensorElt out(module_);
  for (const auto& [e, g] : coords_) {
    PureTensor p = pure_of_basis(module_, e, g);
    p.slots.back() = p.slots.back() * f;
    out += from_pure(module_, p);
  }
  return out;
}

std::optional<int> TensorElt::degree() const {
  std::optional<int> d;
  for (const auto& [e, f] : coords_) {
    if (!f.is_homogeneous()) return std::nullopt;
    const int de = 2 * f.poly_degree() + module_.basis_degree(e);
    if (d && *d != de) return std::nullopt;
    d = de;
  }
  return d;
}

std::string TensorElt::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, f] : coords_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.to_string() << ") [";
    for (int k = 0; k < module_.length(); ++k) os << (k ? "|" : "") << (e & bit(k) ? "a" : "1");
    os << "]";
  }
  return os.str();
}

TensorElt normalize(const TensorElt& t) {
  TensorElt out(t.module());
  for (const auto& [e, f] : t.coords()) out += TensorElt::from_pure(t.module(), pure_of_basis(t.module(), e, f));
  return out;
}

std::map<Label, Rational> module_coordinates(const TensorElt& t) {
  std::map<Label, Rational> out;
  for (const auto& [e, f] : t.coords())
    if (const Rational c = f.constant_term(); c != 0) out.emplace(e, c);
  return out;
}

BimoduleMap::BimoduleMap(BSBimodule domain, BSBimodule codomain, int degree, std::vector<TensorElt> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(degree), images_(std::move(images)) {
  if (domain_.nvars() != codomain_.nvars()) throw ShapeMismatch("domain and codomain use different variables");
  if (images_.size() != domain_.basis_size()) throw ShapeMismatch("need one image per domain basis element");
  for (Label e = 0; e < images_.size(); ++e) {
    const auto& img = images_[e];
    if (!(img.module() == codomain_)) throw ShapeMismatch("image outside the codomain");
    if (img.is_zero()) continue;
    const auto d = img.degree();
    if (!d || *d != domain_.basis_degree(e) + degree_)
      throw InvalidArgument("image of a basis element is not homogeneous of the map's degree");
  }
}

BimoduleMap BimoduleMap::identity(const BSBimodule& m) {
  std::vector<TensorElt> images;
  for (Label e = 0; e < m.basis_size(); ++e) images.push_back(TensorElt::basis(m, e));
  return BimoduleMap(m, m, 0, std::move(images));
}

TensorElt BimoduleMap::apply(const TensorElt& t) const {
  if (!(t.module() == domain_)) throw ShapeMismatch("element is not in the domain");
  TensorElt out(codomain_);
  for (const auto& [e, f] : t.coords()) out += images_[e].left_mul(f);
  return out;
}

bool BimoduleMap::is_right_linear() const {
  for (Label e = 0; e < domain_.basis_size(); ++e)
    for (int j = 0; j < domain_.nvars(); ++j) {
      const MultiPoly x = MultiPoly::variable(domain_.nvars(), j);
      if (!(apply(TensorElt::basis(domain_, e).right_mul(x)) == images_[e].right_mul(x))) return false;
    }
  return true;
}

bool BimoduleMap::is_zero() const {
  for (const auto& img : images_)
    if (!img.is_zero()) return false;
  return true;
}

BimoduleMap& BimoduleMap::operator+=(const BimoduleMap& o) {
  if (!(o.domain_ == domain_) || !(o.codomain_ == codomain_)) throw ShapeMismatch("maps between different bimodules");
  if (o.degree_ != degree_ && !o.is_zero() && !is_zero()) throw ShapeMismatch("maps of different degrees");
  if (is_zero()) degree_ = o.degree_;
  for (std::size_t e = 0; e < images_.size(); ++e) images_[e] += o.images_[e];
  return *this;
}

BimoduleMap& BimoduleMap::operator-=(const BimoduleMap& o) {
  if (!(o.domain_ == domain_) || !(o.codomain_ == codomain_)) throw ShapeMismatch("maps between different bimodules");
  if (o.degree_ != degree_ && !o.is_zero() && !is_zero()) throw ShapeMismatch("maps of different degrees");
  if (is_zero()) degree_ = o.degree_;
  for (std::size_t e = 0; e < images_.size(); ++e) images_[e] -= o.images_[e];
  return *this;
}

BimoduleMap BimoduleMap::left_scaled(const MultiPoly& r) const {
  if (!r.is_homogeneous()) throw InvalidArgument("left scalar must be homogeneous");
  std::vector<TensorElt> images;
  for (const auto& img : images_) images.push_back(img.left_mul(r));
  return BimoduleMap(domain_, codomain_, degree_ + (r.is_zero() ? 0 : 2 * r.poly_degree()), std::move(images));
}

std::string BimoduleMap::to_string() const {
  std::ostringstream os;
  for (Label e = 0; e < images_.size(); ++e) {
    os << "[";
    for (int k = 0; k < domain_.length(); ++k) os << (k ? "|" : "") << (e & bit(k) ? "a" : "1");
    os << "] -> " << images_[e].to_string() << "\n";
  }
  return os.str();
}

BimoduleMap compose(const BimoduleMap& f, const BimoduleMap& g) {
  if (!(g.codomain() == f.domain())) throw ShapeMismatch("codomain of the inner map is not the domain of the outer");
  std::vector<TensorElt> images;
  for (const auto& img : g.images()) images.push_back(f.apply(img));
  return BimoduleMap(g.domain(), f.codomain(), f.degree() + g.degree(), std::move(images));
}

SplitReport split_BsBs() {
  const int n = 2;
  const Generator s = 0;
  const BSBimodule bs(n, {s});
  const BSBimodule bsbs(n, {s, s});
  const MultiPoly one = MultiPoly::constant(n, 1);
  const MultiPoly alpha = simple_root(n, s);
  auto slot = [&](Label e, int k) { return e & bit(k) ? alpha : one; };

  std::vector<TensorElt> mult_img, proj_img, unit_img, incl_img;
  for (Label e = 0; e < bsbs.basis_size(); ++e) {
    mult_img.push_back(TensorElt::from_pure(bs, {{slot(e, 0), slot(e, 1)}}));
    proj_img.push_back(TensorElt::from_pure(bs, {{demazure(s, slot(e, 0)), slot(e, 1)}}));
  }
  for (Label e = 0; e < bs.basis_size(); ++e) {
    unit_img.push_back(TensorElt::from_pure(bsbs, {{one, one, slot(e, 0)}}));
    incl_img.push_back(TensorElt::from_pure(bsbs, {{one, alpha * Rational(1, 2), slot(e, 0)}}));
  }
  BimoduleMap mult(bsbs, bs, 1, std::move(mult_img));
  BimoduleMap proj(bsbs, bs, -1, std::move(proj_img));
  BimoduleMap unit(bs, bsbs, -1, std::move(unit_img));
  BimoduleMap incl(bs, bsbs, 1, std::move(incl_img));

  const BimoduleMap id = BimoduleMap::identity(bsbs);
  BimoduleMap e2 = compose(incl, proj);
  BimoduleMap e1 = id - e2;

  SplitReport r{e1, e2, mult, unit, proj, incl, false, false, false, false, false, 0, 0, {}, {}};
  r.idempotent = compose(e1, e1) == e1 && compose(e2, e2) == e2;
  r.orthogonal = compose(e1, e2).is_zero() && compose(e2, e1).is_zero();
  r.complete = e1 + e2 == id;
  const BimoduleMap id_bs = BimoduleMap::identity(bs);
  const BimoduleMap to1 = compose(mult, e1), from1 = compose(e1, unit);
  const BimoduleMap to2 = compose(proj, e2), from2 = compose(e2, incl);
  r.image1_iso = compose(to1, from1) == id_bs && compose(from1, to1) == e1;
  r.image2_iso = compose(to2, from2) == id_bs && compose(from2, to2) == e2;
  r.shift1 = mult.degree();
  r.shift2 = proj.degree();
  r.rank1 = BSBimodule(n, {s}, r.shift1).graded_left_rank();
  r.rank2 = BSBimodule(n, {s}, r.shift2).graded_left_rank();
  for (const auto* f : {&e1, &e2, &mult, &unit, &proj, &incl})
    if (!f->is_right_linear()) throw SplitFailed("a structure map is not right linear");
  if (!r.ok()) throw SplitFailed("idempotent identities for B_s B_s do not hold");
  return r;
}

namespace {

struct Unknown {
  Label e;        // domain basis element
  Label target;   // codomain basis element
  Exponents mono;
};

// Flattens a tensor element into (label, monomial) -> coefficient entries.
void flatten(const TensorElt& t, std::map<std::pair<Label, Exponents>, Rational>& out, const Rational& scale = 1) {
  for (const auto& [e, f] : t.coords())
    for (const auto& [mono, c] : f.terms()) out[{e, mono}] += c * scale;
}

}  // namespace

HomBasisResult hom_basis(const BSBimodule& domain, const BSBimodule& codomain, int max_degree) {
  if (domain.nvars() != codomain.nvars()) throw ShapeMismatch("domain and codomain use different variables");
  const int n = domain.nvars();
  int lo_cod = codomain.basis_degree(0), hi_dom = domain.basis_degree(0);
  for (Label e = 0; e < codomain.basis_size(); ++e) lo_cod = std::min(lo_cod, codomain.basis_degree(e));
  for (Label e = 0; e < domain.basis_size(); ++e) hi_dom = std::max(hi_dom, domain.basis_degree(e));

  HomBasisResult result;
  result.min_degree = lo_cod - hi_dom;
  result.max_degree = max_degree;

  for (int d = result.min_degree; d <= max_degree; ++d) {
    std::vector<Unknown> unknowns;
    std::map<std::tuple<Label, Label, Exponents>, std::size_t> where;
    for (Label e = 0; e < domain.basis_size(); ++e)
      for (Label t = 0; t < codomain.basis_size(); ++t) {
        const int gap = domain.basis_degree(e) + d - codomain.basis_degree(t);
        if (gap < 0 || gap % 2 != 0) continue;
        for (auto& mono : monomials_of_degree(n, gap / 2)) {
          where[{e, t, mono}] = unknowns.size();
          unknowns.push_back({e, t, std::move(mono)});
        }
      }
    if (unknowns.empty()) {
      result.dims.emplace_back(d, 0);
      continue;
    }

    // Right-linearity residuals f(b_e x_j) - f(b_e) x_j are linear in the
    // unknowns; build the matrix one unknown (column) at a time.
    std::vector<std::vector<TensorElt>> basis_times_x(domain.basis_size());
    for (Label e = 0; e < domain.basis_size(); ++e)
      for (int j = 0; j < n; ++j)
        basis_times_x[e].push_back(TensorElt::basis(domain, e).right_mul(MultiPoly::variable(n, j)));

    std::map<std::tuple<Label, int, Label, Exponents>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto& unk = unknowns[u];
      const TensorElt image = TensorElt::basis(codomain, unk.target).left_mul(MultiPoly::monomial(unk.mono));
      for (Label e = 0; e < domain.basis_size(); ++e)
        for (int j = 0; j < n; ++j) {
          // Only the coefficient of b_{unk.e} in b_e x_j sees this unknown.
          TensorElt residual(codomain);
          const MultiPoly c = basis_times_x[e][static_cast<std::size_t>(j)].coeff(unk.e);
          if (!c.is_zero()) residual += image.left_mul(c);
          if (e == unk.e) residual -= image.right_mul(MultiPoly::variable(n, j));
          std::map<std::pair<Label, Exponents>, Rational> flat;
          flatten(residual, flat);
          for (const auto& [key, val] : flat) {
            if (val == 0) continue;
            auto [it, inserted] = row_of.try_emplace({e, j, key.first, key.second}, row_of.size());
            columns[u].emplace_back(it->second, val);
          }
        }
    }
    linalg::Matrix a(row_of.size(), linalg::Vector(unknowns.size(), 0));
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      for (const auto& [r, val] : columns[u]) a[r][u] += val;
    const auto solutions = linalg::nullspace(std::move(a), static_cast<int>(unknowns.size()));
    result.dims.emplace_back(d, solutions.size());
    if (solutions.empty()) continue;

    // Left R-span of the generators found so far, in unknown coordinates.
    linalg::Matrix span;
    for (const auto& g : result.generators) {
      const int gap = d - g.degree;
      if (gap < 0 || gap % 2 != 0) continue;
      for (const auto& mono : monomials_of_degree(n, gap / 2)) {
        const BimoduleMap rg = g.map.left_scaled(MultiPoly::monomial(mono));
        linalg::Vector vec(unknowns.size(), 0);
        for (Label e = 0; e < domain.basis_size(); ++e)
          for (const auto& [t, f] : rg.images()[e].coords())
            for (const auto& [m, c] : f.terms()) vec[where.at({e, t, m})] += c;
        span.push_back(std::move(vec));
      }
    }
    int rank = linalg::rank(span, static_cast<int>(unknowns.size()));
    for (const auto& sol : solutions) {
      span.push_back(sol);
      const int r = linalg::rank(span, static_cast<int>(unknowns.size()));
      if (r == rank) {
        span.pop_back();
        continue;
      }
      rank = r;
      std::vector<TensorElt> images(domain.basis_size(), TensorElt(codomain));
      for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (sol[u] != 0)
          images[unknowns[u].e].add_term(unknowns[u].target, MultiPoly::monomial(unknowns[u].mono, sol[u]));
      result.generators.push_back({BimoduleMap(domain, codomain, d, std::move(images)), d});
    }
  }
  return result;
}

HomBasisResult hom_basis_Bs_Bs(int max_degree) {
  const BSBimodule bs(2, {0});
  return hom_basis(bs, bs, max_degree);
}

CyclicReport cyclic_generation_check(const Word& word, int nvars) {
  const BSBimodule module(nvars, word);
  const int m = module.length();
  const TensorElt top = TensorElt::basis(module, 0);
  CyclicReport report;
  report.generated = true;
  for (int deg = -m; deg <= m; deg += 2) {
    std::size_t full = 0;
    for (Label e = 0; e < module.basis_size(); ++e) {
      const int gap = deg - module.basis_degree(e);
      if (gap >= 0 && gap % 2 == 0) full += monomials_of_degree(nvars, gap / 2).size();
    }
    const int k = (deg + m) / 2;
    std::map<std::pair<Label, Exponents>, std::size_t> col;
    std::vector<std::map<std::pair<Label, Exponents>, Rational>> vecs;
    for (int a = 0; a <= k; ++a)
      for (const auto& left : monomials_of_degree(nvars, a))
        for (const auto& right : monomials_of_degree(nvars, k - a)) {
          std::map<std::pair<Label, Exponents>, Rational> flat;
          flatten(top.right_mul(MultiPoly::monomial(right)).left_mul(MultiPoly::monomial(left)), flat);
          for (const auto& [key, v] : flat) col.try_emplace(key, col.size());
          vecs.push_back(std::move(flat));
        }
    linalg::Matrix rows;
    for (const auto& flat : vecs) {
      linalg::Vector r(col.size(), 0);
      for (const auto& [key, v] : flat) r[col.at(key)] = v;
      rows.push_back(std::move(r));
    }
    const auto generated = static_cast<std::size_t>(linalg::rank(std::move(rows), static_cast<int>(col.size())));
    report.per_degree.emplace_back(deg, generated, full);
    if (generated != full) report.generated = false;
  }
  return report;
}

}  // namespace soergel
