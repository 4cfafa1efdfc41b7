#include <doctest.h>

#include <random>

#include "soergel/categorify.hpp"
#include "soergel/errors.hpp"
#include "soergel/serialize.hpp"

using namespace soergel;

namespace {

CoxeterSystem sys_of(const char* type) { return CoxeterSystem::build(CoxeterMatrix::from_type(type)); }
ElementRef el(const CoxeterSystem& sys, const char* word) { return sys.element_of(parse_word(word, sys.rank())); }
ElementRef ref(std::size_t i) { return ElementRef(static_cast<std::uint32_t>(i)); }
LaurentPoly P(std::string_view s) { return parse_laurent(s); }

HeckeElt hecke_product(const CoxeterSystem& sys, const Word& w) {
  HeckeElt h = delta(sys, kIdentity);
  for (Generator s : w) {
    HeckeElt b = delta(sys, sys.generator(s));
    b.add_term(kIdentity, LaurentPoly::v_pow(1));
    h = hk_mul(h, b);
  }
  return h;
}

}  // namespace

TEST_SUITE("categorify") {
  TEST_CASE("Bott-Samelson decompositions") {
    const auto sys = sys_of("A2");
    const auto table = KLTable::build(sys);
    const ElementRef s = el(sys, "1");
    CHECK(bs_class(table, {0}) == SBimClass::indecomposable(s));
    CHECK(bs_class(table, {0, 0}) == SBimClass::indecomposable(s, 1) + SBimClass::indecomposable(s, -1));
    CHECK(bs_class(table, {0, 1, 0}) == SBimClass::indecomposable(el(sys, "1,2,1")) + SBimClass::indecomposable(s));
    CHECK(bs_class(table, {}) == SBimClass::indecomposable(kIdentity));
    CHECK_THROWS_AS(bs_class(table, {2}), InvalidArgument);
  }

  TEST_CASE("summand view and json") {
    const auto sys = sys_of("A2");
    const auto table = KLTable::build(sys);
    const SBimClass c = bs_class(table, {0, 0, 0});
    const auto sm = c.summands();
    REQUIRE(sm.size() == 3);
    CHECK(sm[0].shift == -2);
    CHECK(sm[1].shift == 0);
    CHECK(sm[1].mult == 2);
    CHECK(sm[2].shift == 2);
    CHECK(sbim_class_json(sys, {0, 0}, bs_class(table, {0, 0})).dump() ==
          R"({"word":[1,1],"summands":[{"w":"1","shift":-1,"mult":1},{"w":"1","shift":1,"mult":1}]})");
    CHECK(c.shifted(1).summands()[0].shift == -1);
  }

  TEST_CASE("chi and phi") {
    const auto sys = sys_of("A3");
    const auto table = KLTable::build(sys);
    const ElementRef s = el(sys, "1");
    CHECK(chi(table, SBimClass::indecomposable(s)) == delta(sys, s) + P("v") * delta(sys, kIdentity));
    CHECK(chi(table, SBimClass::indecomposable(kIdentity, 3)) == P("v^3") * delta(sys, kIdentity));
    CHECK(phi(table, table.basis_element(s)) == SBimClass::indecomposable(s));
    CHECK_THROWS_AS(phi(table, P("-1") * delta(sys, kIdentity)), NotEffective);
    CHECK_THROWS_AS(SBimClass(KLCoords{{s, P("-v")}}), NotEffective);

    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, sys.size() - 1);
    std::uniform_int_distribution<int> shift(-3, 3), count(1, 4);
    for (int i = 0; i < 50; ++i) {
      SBimClass c;
      for (int k = count(rng); k > 0; --k) c += SBimClass::indecomposable(ref(pick(rng)), shift(rng));
      CHECK(phi(table, chi(table, c)) == c);
      CHECK(chi(table, c.shifted(1)) == P("v") * chi(table, c));
    }
  }

  TEST_CASE("categorification consistency for short words") {
    for (const char* type : {"A2", "B2", "A1xA1"}) {
      const auto sys = sys_of(type);
      const auto table = KLTable::build(sys);
      std::vector<Word> words{{}};
      for (int len = 1; len <= 6; ++len) {
        std::vector<Word> next;
        for (const auto& w : words)
          if (static_cast<int>(w.size()) == len - 1)
            for (int s = 0; s < sys.rank(); ++s) {
              Word u = w;
              u.push_back(s);
              next.push_back(u);
            }
        for (const auto& w : next) {
          const HeckeElt prod = hecke_product(sys, w);
          CHECK(chi(table, bs_class(table, w)) == prod);
          BigInt total = 0;
          for (const auto& [x, c] : prod.support()) total += lp_eval_one(c);
          CHECK(total == BigInt(1) << w.size());
        }
        words.insert(words.end(), next.begin(), next.end());
      }
    }
  }

  TEST_CASE("graded hom ranks") {
    const auto sys = sys_of("A3");
    const auto table = KLTable::build(sys);
    const ElementRef s = el(sys, "1");
    auto B = [](ElementRef w) { return SBimClass::indecomposable(w); };
    CHECK(hom_graded_rank(table, B(s), B(s)) == P("1 + v^2"));
    CHECK(hom_graded_rank(table, B(kIdentity), B(kIdentity)) == LaurentPoly::one());
    CHECK(hom_graded_rank(table, B(kIdentity), B(s)) == P("v"));
    for (std::size_t a = 0; a < sys.size(); ++a)
      for (std::size_t b = 0; b < sys.size(); ++b)
        CHECK(hom_graded_rank(table, B(ref(a)), B(ref(b))) == hom_graded_rank(table, B(ref(b)), B(ref(a))));
  }

  TEST_CASE("positivity") {
    for (const char* type : {"A2", "A3", "H3", "B3"}) {
      const auto sys = sys_of(type);
      const auto r = positivity_scan(KLTable::build(sys));
      CHECK(r.ok());
      CHECK(r.structure_constants_scanned);
      CHECK(r.products_checked == sys.size() * sys.size());
    }
    const auto sys = sys_of("A2");
    const auto r = positivity_scan(KLTable::build(sys), ScanOptions{false});
    CHECK(r.polynomials_checked == 19);
    CHECK(r.products_checked == 0);
  }

  TEST_CASE("polo search") {
    const auto one = polo_search(LaurentPoly::one(), 2);
    REQUIRE(one.witness);
    CHECK(one.witness->m == 0);
    CHECK(one.witness->n == 2);
    CHECK(one.witness->x.empty());
    CHECK(one.witness->y.empty());

    const auto w = polo_search(parse_laurent("1 + q", 'q'), 4);
    REQUIRE(w.witness);
    CHECK(w.witness->m == 1);
    CHECK(w.witness->n == 4);
    const auto sys = sys_of("A3");
    const auto table = KLTable::build(sys);
    CHECK(table.poly(sys.element_of(w.witness->y), sys.element_of(w.witness->x)) == P("v + v^3"));

    const auto none = polo_search(parse_laurent("1 + q^50", 'q'), 4);
    CHECK_FALSE(none.witness);
    CHECK(none.searched_up_to == 4);
    CHECK_THROWS_AS(polo_search(parse_laurent("1 + 2q", 'q'), 4), InvalidTarget);
    CHECK_THROWS_AS(polo_search(parse_laurent("1 - q + q^2", 'q'), 4), InvalidTarget);
    CHECK_THROWS_AS(polo_search(parse_laurent("q^-1 + 1", 'q'), 4), InvalidTarget);
  }
}
