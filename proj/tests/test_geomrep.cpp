#include <doctest.h>

#include <cmath>

#include "soergel/coxeter.hpp"
#include "soergel/geomrep.hpp"

using namespace soergel;

TEST_SUITE("geomrep") {
  TEST_CASE("cyclotomic arithmetic") {
    const auto& f = CyclotomicField::get(5);
    const AlgNum c = f.cos_pi_over(5);
    CHECK(std::abs(c.to_double() - std::cos(M_PI / 5)) < 1e-12);
    // 4cos^2(pi/5) = 2cos(pi/5) + 1
    CHECK(c * c * Rational(4) == c * Rational(2) + f.rational(1));
    CHECK(f.two_cos(5) == f.rational(-2));
    CHECK(f.two_cos(0) == f.rational(2));
    for (int k = 0; k < 10; ++k) CHECK(std::abs(f.two_cos(k).to_double() - 2 * std::cos(k * M_PI / 5)) < 1e-12);
  }

  TEST_CASE("bilinear form") {
    const auto a2 = build_form(CoxeterMatrix::from_type("A2"));
    CHECK(a2.gram(0, 1) == a2.gram.field().rational(Rational(-1, 2)));
    CHECK(a2.gram(0, 0) == a2.gram.field().rational(1));
    const auto a1a1 = build_form(CoxeterMatrix::from_type("A1xA1"));
    CHECK(a1a1.gram(0, 1).is_zero());
    const auto h3 = build_form(CoxeterMatrix::from_type("H3"));
    CHECK(std::abs(h3.gram(0, 1).to_double() + std::cos(M_PI / 5)) < 1e-12);
    CHECK(h3.gram == h3.gram.transposed());
    const auto inf = build_form(CoxeterMatrix(2, {1, 0, 0, 1}));
    CHECK(inf.infinite_bond);
    CHECK(inf.gram(0, 1) == inf.gram.field().rational(-1));
  }

  TEST_CASE("reflections") {
    for (const char* type : {"A1", "A2", "B3", "H3", "I2(7)", "F4"}) {
      const auto rep = build_geometric_rep(CoxeterMatrix::from_type(type));
      const AlgMatrix id = AlgMatrix::identity(rep.field(), rep.rank());
      for (int s = 0; s < rep.rank(); ++s) CHECK(reflection_matrix(rep, s) * reflection_matrix(rep, s) == id);
      CHECK(reflections_preserve_form(rep));
      CHECK(verify_relations(rep).ok());
    }
    const auto a1 = build_geometric_rep(CoxeterMatrix::from_type("A1"));
    CHECK(reflection_matrix(a1, 0)(0, 0) == a1.field().rational(-1));
    const auto a2 = build_geometric_rep(CoxeterMatrix::from_type("A2"));
    const AlgMatrix st = reflection_matrix(a2, 0) * reflection_matrix(a2, 1);
    const AlgMatrix id = AlgMatrix::identity(a2.field(), 2);
    CHECK_FALSE(st == id);
    CHECK_FALSE(st * st == id);
    CHECK(st * st * st == id);
  }

  TEST_CASE("relation check detects a corrupted matrix") {
    auto rep = build_geometric_rep(CoxeterMatrix::from_type("A3"));
    rep.matrix = CoxeterMatrix::from_type("B3");
    const auto r = verify_relations(rep);
    CHECK_FALSE(r.ok());
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].s == 1);
    CHECK(r.violations[0].t == 2);
  }

  TEST_CASE("infinite bonds are skipped") {
    const auto rep = build_geometric_rep(CoxeterMatrix(3, {1, 0, 2, 0, 1, 3, 2, 3, 1}));
    const auto r = verify_relations(rep);
    CHECK(r.ok());
    CHECK(r.pairs_skipped_infinite == 1);
  }

  TEST_CASE("faithfulness and consistency with the enumeration") {
    for (const char* type : {"A1", "A2", "A3", "H3", "B3"}) {
      const auto sys = CoxeterSystem::build(CoxeterMatrix::from_type(type));
      const auto f = faithfulness_check(sys);
      CHECK(f.faithful);
      CHECK(f.elements == sys.size());
      CHECK(f.distinct_matrices == sys.size());
      CHECK(generated_group_size(build_geometric_rep(sys.matrix()), 100000) == sys.size());
    }
  }

  TEST_CASE("word matrices") {
    const auto rep = build_geometric_rep(CoxeterMatrix::from_type("H3"));
    const AlgMatrix a = word_matrix(rep, {0, 1, 0, 2});
    CHECK(right_multiply_reflection(rep, word_matrix(rep, {0, 1, 0}), 2) == a);
    CHECK(left_multiply_reflection(rep, word_matrix(rep, {1, 0, 2}), 0) == a);
    CHECK(a.to_string_approx().find("\n") != std::string::npos);
  }
}
