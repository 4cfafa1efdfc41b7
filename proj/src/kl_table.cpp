#include "soergel/kl_table.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "soergel/errors.hpp"

namespace soergel {

namespace {

// Runs worker(x) for every x != e, one length stratum at a time. Within a
// stratum thread t takes elements lo+t, lo+t+T, ...; each x writes only its
// own slot, so the result does not depend on the schedule.
template <class Worker>
void run_strata(const CoxeterSystem& sys, std::vector<Worker>& workers) {
  const auto& starts = sys.stratum_starts();
  for (std::size_t k = 1; k + 1 < starts.size(); ++k) {
    const std::size_t lo = starts[k];
    const std::size_t hi = starts[k + 1];
    const std::size_t nthreads = std::min<std::size_t>(workers.size(), hi - lo);
    if (nthreads <= 1) {
      for (std::size_t i = lo; i < hi; ++i) workers[0](ElementRef(static_cast<std::uint32_t>(i)));
      continue;
    }
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = lo + t; i < hi; i += nthreads) workers[t](ElementRef(static_cast<std::uint32_t>(i)));
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
}

struct DenseColumn {
  std::vector<std::uint32_t> ys;
  std::vector<std::int64_t> coeffs;  // ys.size() rows of width W
};

struct DenseWorker {
  const CoxeterSystem* sys;
  const kernels::Table* k;
  std::size_t width;
  std::vector<DenseColumn>* cols;
  std::vector<std::int64_t> acc;
  std::vector<std::uint8_t> mark;
  std::vector<std::uint32_t> touched;

  DenseWorker(const CoxeterSystem& s, const kernels::Table& kt, std::size_t w, std::vector<DenseColumn>& c)
      : sys(&s), k(&kt), width(w), cols(&c), acc(s.size() * w, 0), mark(s.size(), 0) {}

  std::int64_t* row(std::uint32_t y) {
    if (!mark[y]) {
      mark[y] = 1;
      touched.push_back(y);
    }
    return acc.data() + static_cast<std::size_t>(y) * width;
  }

  void operator()(ElementRef x) {
    const Generator s = sys->last_letter(x);
    const ElementRef w = sys->right_mult(x, s);
    const DenseColumn& bw = (*cols)[w.index()];
    const std::size_t n = width;
    bool overflow = false;

    // b_w * (delta_s + v): delta_y b_s = delta_ys + v delta_y if ys > y,
    // else delta_ys + v^-1 delta_y.
    for (std::size_t i = 0; i < bw.ys.size(); ++i) {
      const std::uint32_t y = bw.ys[i];
      const std::int64_t* p = bw.coeffs.data() + i * n;
      const std::uint32_t ys = sys->right_mult(ElementRef(y), s).id;
      overflow |= k->add_into(row(ys), p, n);
      if (!sys->is_right_descent(ElementRef(y), s)) {
        overflow |= k->add_into(row(y) + 1, p, n - 1);
      } else {
        if (p[0] != 0) throw DegreeViolation("constant term in an off-diagonal KL polynomial");
        overflow |= k->add_into(row(y), p + 1, n - 1);
      }
    }
    for (std::size_t i = 0; i < bw.ys.size(); ++i) {
      const std::uint32_t z = bw.ys[i];
      if (z == w.id || !sys->is_right_descent(ElementRef(z), s)) continue;
      const std::int64_t mu = bw.coeffs[i * n + 1];
      if (mu == 0) continue;
      const DenseColumn& bz = (*cols)[z];
      for (std::size_t j = 0; j < bz.ys.size(); ++j)
        overflow |= k->sub_scaled_into(row(bz.ys[j]), bz.coeffs.data() + j * n, mu, n);
    }
    if (overflow) {
      reset();
      throw KernelOverflow("KL coefficient outside int64 range at b_" + sys->word_string(x));
    }

    std::sort(touched.begin(), touched.end());
    DenseColumn out;
    for (std::uint32_t y : touched) {
      std::int64_t* r = acc.data() + static_cast<std::size_t>(y) * n;
      if (std::all_of(r, r + n, [](std::int64_t c) { return c == 0; })) continue;
      if (y == x.id ? (r[0] != 1 || std::any_of(r + 1, r + n, [](std::int64_t c) { return c != 0; })) : r[0] != 0) {
        reset();
        throw DegreeViolation("b_" + sys->word_string(x) + " is not unitriangular with coefficients in vZ[v]");
      }
      out.ys.push_back(y);
      out.coeffs.insert(out.coeffs.end(), r, r + n);
    }
    reset();
    (*cols)[x.index()] = std::move(out);
  }

  void reset() {
    for (std::uint32_t y : touched) {
      mark[y] = 0;
      std::fill_n(acc.data() + static_cast<std::size_t>(y) * width, width, 0);
    }
    touched.clear();
  }
};

struct ExactWorker {
  const CoxeterSystem* sys;
  std::vector<KLTable::Column>* cols;
  std::vector<LaurentPoly> acc;
  std::vector<std::uint8_t> mark;
  std::vector<std::uint32_t> touched;

  ExactWorker(const CoxeterSystem& s, std::vector<KLTable::Column>& c)
      : sys(&s), cols(&c), acc(s.size()), mark(s.size(), 0) {}

  LaurentPoly& row(ElementRef y) {
    if (!mark[y.index()]) {
      mark[y.index()] = 1;
      touched.push_back(y.id);
    }
    return acc[y.index()];
  }

  void operator()(ElementRef x) {
    const Generator s = sys->last_letter(x);
    const ElementRef w = sys->right_mult(x, s);
    const auto& bw = (*cols)[w.index()];
    for (const auto& [y, p] : bw) {
      row(sys->right_mult(y, s)) += p;
      row(y).add_scaled(p, 1, sys->is_right_descent(y, s) ? -1 : 1);
    }
    for (const auto& [z, p] : bw) {
      if (z == w || !sys->is_right_descent(z, s)) continue;
      const BigInt mu = p.coeff(1);
      if (mu == 0) continue;
      for (const auto& [y, q] : (*cols)[z.index()]) row(y).add_scaled(q, -mu);
    }
    std::sort(touched.begin(), touched.end());
    KLTable::Column out;
    bool ok = true;
    for (std::uint32_t y : touched) {
      LaurentPoly& r = acc[y];
      mark[y] = 0;
      if (r.is_zero()) continue;
      if (y == x.id ? r != LaurentPoly::one() : !lp_in_vZv(r)) ok = false;
      out.emplace_back(ElementRef(y), std::move(r));
      r = LaurentPoly();
    }
    touched.clear();
    if (!ok) throw DegreeViolation("b_" + sys->word_string(x) + " is not unitriangular with coefficients in vZ[v]");
    (*cols)[x.index()] = std::move(out);
  }
};

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::vector<KLTable::Column> build_dense(const CoxeterSystem& sys, const kernels::Table& k, unsigned threads) {
  // Room for exponents 0..l(w0) plus one slot of headroom for the v shift,
  // rounded to whole 4-lane vectors.
  const std::size_t width = (static_cast<std::size_t>(sys.max_length()) + 2 + 3) / 4 * 4;
  std::vector<DenseColumn> cols(sys.size());
  cols[0].ys = {0};
  cols[0].coeffs.assign(width, 0);
  cols[0].coeffs[0] = 1;
  std::vector<DenseWorker> workers;
  for (unsigned t = 0; t < threads; ++t) workers.emplace_back(sys, k, width, cols);
  run_strata(sys, workers);

  std::vector<KLTable::Column> out(sys.size());
  for (std::size_t x = 0; x < cols.size(); ++x) {
    const auto& c = cols[x];
    for (std::size_t i = 0; i < c.ys.size(); ++i) {
      std::vector<LaurentPoly::Term> terms;
      for (std::size_t e = 0; e < width; ++e)
        if (const std::int64_t v = c.coeffs[i * width + e]; v != 0)
          terms.push_back({static_cast<int>(e), BigInt(static_cast<long>(v))});
      out[x].emplace_back(ElementRef(c.ys[i]), LaurentPoly::from_terms(std::move(terms)));
    }
  }
  return out;
}

std::vector<KLTable::Column> build_exact(const CoxeterSystem& sys, unsigned threads) {
  std::vector<KLTable::Column> cols(sys.size());
  cols[0].emplace_back(kIdentity, LaurentPoly::one());
  std::vector<ExactWorker> workers;
  for (unsigned t = 0; t < threads; ++t) workers.emplace_back(sys, cols);
  run_strata(sys, workers);
  return cols;
}

}  // namespace

KLTable KLTable::build(const CoxeterSystem& sys, const KLTableOptions& options) {
  KLTable t;
  t.sys_ = &sys;
  t.threads_used_ = resolve_threads(options.threads);
  const kernels::Table& k = options.isa ? kernels::get(*options.isa) : kernels::active();
  t.isa_used_ = k.isa;
  switch (options.engine) {
    case KLEngine::exact:
      t.columns_ = build_exact(sys, t.threads_used_);
      t.engine_used_ = KLEngine::exact;
      break;
    case KLEngine::dense:
      t.columns_ = build_dense(sys, k, t.threads_used_);
      t.engine_used_ = KLEngine::dense;
      break;
    case KLEngine::automatic:
      try {
        t.columns_ = build_dense(sys, k, t.threads_used_);
        t.engine_used_ = KLEngine::dense;
      } catch (const KernelOverflow&) {
        t.columns_ = build_exact(sys, t.threads_used_);
        t.engine_used_ = KLEngine::exact;
        t.fell_back_ = true;
      }
      break;
  }
  return t;
}

LaurentPoly KLTable::poly(ElementRef y, ElementRef x) const {
  const auto& col = columns_.at(x.index());
  auto it = std::lower_bound(col.begin(), col.end(), y, [](const auto& e, ElementRef r) { return e.first < r; });
  return it != col.end() && it->first == y ? it->second : LaurentPoly();
}

BigInt KLTable::mu(ElementRef y, ElementRef x) const { return poly(y, x).coeff(1); }

HeckeElt KLTable::basis_element(ElementRef x) const {
  HeckeElt::Support s;
  for (const auto& [y, p] : column(x)) s.emplace(y, p);
  return HeckeElt(*sys_, std::move(s));
}

std::size_t KLTable::pair_count() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

LaurentPoly kl_polynomial(const KLTable& table, ElementRef y, ElementRef x) { return table.poly(y, x); }

BigInt mu(const KLTable& table, ElementRef y, ElementRef x) { return table.mu(y, x); }

LaurentPoly inversion_defect(const KLTable& table, ElementRef x, ElementRef y, Convention convention) {
  const auto& sys = table.system();
  const ElementRef w0 = sys.longest_element();
  const ElementRef yw0 = sys.mult(y, w0);
  LaurentPoly sum;
  // h_{z,x} vanishes unless z <= x, so the column of x covers every term.
  for (const auto& [z, hzx] : table.column(x)) {
    const LaurentPoly other = table.poly(sys.mult(z, w0), yw0);
    if (other.is_zero()) continue;
    const int exponent = convention == Convention::paper ? sys.length(y) + sys.length(x) : sys.length(z) + sys.length(x);
    const BigInt sign = exponent % 2 == 0 ? 1 : -1;
    sum.add_scaled(hzx * other, sign);
  }
  if (x == y) sum -= LaurentPoly::one();
  return sum;
}

KLCoords kl_expand(const KLTable& table, const HeckeElt& h) {
  HeckeElt rest = h;
  KLCoords out;
  while (!rest.is_zero()) {
    // Indices are sorted by length, so the last key is a longest element of
    // the support and its coefficient is the KL coordinate there.
    const auto& [x, c] = *rest.support().rbegin();
    const ElementRef top = x;
    const LaurentPoly coeff = c;
    rest.add_scaled(table.basis_element(top), -coeff);
    out.emplace(top, coeff);
  }
  return out;
}

HeckeElt kl_evaluate(const KLTable& table, const KLCoords& c) {
  HeckeElt out(table.system());
  for (const auto& [x, p] : c)
    for (const auto& [y, h] : table.column(x)) out.add_term(y, p * h);
  return out;
}

namespace {

void add_coord(KLCoords& c, ElementRef x, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = c.try_emplace(x, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) c.erase(it);
}

}  // namespace

KLCoords kl_right_mul_bs(const KLTable& table, const KLCoords& c, Generator s) {
  const auto& sys = table.system();
  static const LaurentPoly v_plus_vinv = LaurentPoly::from_terms({{-1, 1}, {1, 1}});
  KLCoords out;
  for (const auto& [u, p] : c) {
    if (sys.is_right_descent(u, s)) {
      add_coord(out, u, p * v_plus_vinv);
      continue;
    }
    add_coord(out, sys.right_mult(u, s), p);
    for (const auto& [z, h] : table.column(u)) {
      if (z == u || !sys.is_right_descent(z, s)) continue;
      const BigInt m = h.coeff(1);
      if (m != 0) add_coord(out, z, p * m);
    }
  }
  return out;
}

std::vector<KLCoords> structure_constants_row(const KLTable& table, ElementRef x) {
  // b_x b_y = (b_x b_w) b_s - sum_{z<w, zs<z} mu(z,w) b_x b_z for y = ws > w.
  const auto& sys = table.system();
  std::vector<KLCoords> rows(sys.size());
  rows[0].emplace(x, LaurentPoly::one());
  for (std::size_t i = 1; i < sys.size(); ++i) {
    const ElementRef y(static_cast<std::uint32_t>(i));
    const Generator s = sys.last_letter(y);
    const ElementRef w = sys.right_mult(y, s);
    KLCoords r = kl_right_mul_bs(table, rows[w.index()], s);
    for (const auto& [z, h] : table.column(w)) {
      if (z == w || !sys.is_right_descent(z, s)) continue;
      const BigInt m = h.coeff(1);
      if (m == 0) continue;
      for (const auto& [u, p] : rows[z.index()]) add_coord(r, u, p * BigInt(-m));
    }
    rows[i] = std::move(r);
  }
  return rows;
}

KLCoords structure_constants(const KLTable& table, ElementRef x, ElementRef y) {
  return kl_expand(table, hk_mul(table.basis_element(x), table.basis_element(y)));
}

}  // namespace soergel
