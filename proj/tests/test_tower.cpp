#include <doctest.h>

#include <functional>
#include <sstream>

#include "orecalc/error.hpp"
#include "orecalc/tower_io.hpp"
#include "support.hpp"

using namespace orecalc;
using testing::el;

namespace {

Tower from_text(const std::string& text) {
  std::istringstream in(text);
  return Tower(parse_tower_spec(in));
}

// F4, both levels twisted by Frobenius on K, sigma_2(t_1) = t_1, and
// delta_2 the inner derivation by alpha extended to R_1.
Tower inner_tower() {
  return from_text(
      "field 2^2\n"
      "var t1 sigma_K=frob^1 delta_K=0\n"
      "var t2 sigma_K=frob^1 delta_K=inner:2\n"
      "delta t1 = 1:1\n");
}

std::vector<Tower> sample_towers() {
  std::vector<Tower> out;
  for (const char* name : {"f4-frobenius-2", "f4-frobenius-3", "classical-f4-2", "weyl-f5"}) {
    out.push_back(preset_tower(name));
  }
  out.push_back(inner_tower());
  out.push_back(from_text("field 2^2\nvar t1 sigma_K=frob^1\nvar t2 sigma_K=frob^1\n"));
  return out;
}

MultiPoly var(const Tower& t, unsigned i) { return t.variable(i); }
MultiPoly cst(const Tower& t, std::uint32_t c) { return t.constant(el(c)); }

}  // namespace

TEST_CASE("sample towers pass validation") {
  for (const Tower& t : sample_towers()) {
    CAPTURE(format_tower(t));
    CHECK(t.validate().ok());
  }
  CHECK(preset_tower("f4-sec21-3var").validate().ok());
  CHECK(preset_tower("weyl-f101").validate().ok());
}

TEST_CASE("inconsistent tower is reported") {
  // delta_2(t_1) = 1 with sigma_2 = Frobenius on K breaks the Leibniz rule on t_1 alpha
  const Tower bad = from_text(
      "field 2^2\nvar t1 sigma_K=id\nvar t2 sigma_K=frob^1\ndelta t1 = 1\n");
  const auto report = bad.validate();
  CHECK_FALSE(report.ok());
}

TEST_CASE("structural errors") {
  const Field f4 = Field::make(2, 2);
  SUBCASE("frobenius exponent") {
    std::vector<LevelSpec> lv(1);
    lv[0].sigma_frobenius = 2;
    CHECK_THROWS_AS(Tower(TowerSpec{f4, lv}), InputError);
  }
  SUBCASE("image of a higher variable") {
    std::vector<LevelSpec> lv(2);
    lv[0].sigma_images.emplace(1, MultiPoly::constant(el(1)));
    CHECK_THROWS_AS(Tower(TowerSpec{f4, lv}), InputError);
  }
  SUBCASE("image outside R_{i-1}") {
    std::vector<LevelSpec> lv(2);
    lv[1].sigma_images.emplace(1, MultiPoly::from_coeffs(2, {MultiPoly(1), MultiPoly::constant(el(1), 1)}));
    CHECK_THROWS_AS(Tower(TowerSpec{f4, lv}), InputError);
  }
  SUBCASE("duplicate names") {
    std::vector<LevelSpec> lv(2);
    lv[0].name = lv[1].name = "x";
    CHECK_THROWS_AS(Tower(TowerSpec{f4, lv}), InputError);
  }
  SUBCASE("empty tower") { CHECK_THROWS_AS(Tower(TowerSpec{f4, {}}), InputError); }
}

TEST_CASE("Weyl relation and derivation") {
  const Tower t = preset_tower("weyl-f101");
  CHECK(t.sub(t.mul(var(t, 2), var(t, 1)), t.mul(var(t, 1), var(t, 2))) == cst(t, 1));
  CHECK(t.delta_apply(2, t.pow(var(t, 1), 2)) == t.scale(el(2), var(t, 1)));
  CHECK(t.delta_apply(2, cst(t, 1)).is_zero());
  CHECK(t.delta_apply(2, cst(t, 7)).is_zero());
  CHECK(t.sigma_apply(2, var(t, 1)) == var(t, 1));
}

TEST_CASE("sigma on lower levels") {
  const Tower t = from_text("field 2^2\nvar t1 sigma_K=frob^1\nvar t2 sigma_K=frob^1\n");
  CHECK(t.sigma_apply(2, cst(t, 3)) == cst(t, 2));
  CHECK(t.sigma_apply(2, t.scale(el(2), var(t, 1))) == t.scale(el(3), var(t, 1)));
  const Tower u = preset_tower("f4-frobenius-2");
  CHECK(u.sigma_apply(2, cst(u, 2)) == cst(u, 2));
  // sigma_i is multiplicative and delta_i satisfies Leibniz on random elements
  for (const Tower& tw : sample_towers()) {
    if (tw.size() < 2) continue;
    for (int i = 0; i < 30; ++i) {
      const auto a = testing::random_poly(tw, 1, 2), b = testing::random_poly(tw, 1, 2);
      CHECK(tw.sigma_apply(2, tw.mul(a, b)) == tw.mul(tw.sigma_apply(2, a), tw.sigma_apply(2, b)));
      CHECK(tw.delta_apply(2, tw.mul(a, b)) ==
            tw.add(tw.mul(tw.sigma_apply(2, a), tw.delta_apply(2, b)), tw.mul(tw.delta_apply(2, a), b)));
    }
  }
}

TEST_CASE("multiplication is associative with unit") {
  for (const Tower& t : sample_towers()) {
    for (int i = 0; i < 25; ++i) {
      const auto f = testing::random_poly(t, t.size(), 2, 3);
      const auto g = testing::random_poly(t, t.size(), 2, 3);
      const auto h = testing::random_poly(t, t.size(), 1, 3);
      CHECK(t.mul(t.mul(f, g), h) == t.mul(f, t.mul(g, h)));
      CHECK(t.mul(f, t.add(g, h)) == t.add(t.mul(f, g), t.mul(f, h)));
      CHECK(t.mul(f, cst(t, 1)) == f.lifted(t.size()));
      CHECK(t.mul(cst(t, 1), f) == f.lifted(t.size()));
    }
  }
}

TEST_CASE("commutation rules in the double Frobenius tower") {
  const Tower t = from_text("field 2^2\nvar t1 sigma_K=frob^1\nvar t2 sigma_K=frob^1\n");
  for (FieldElement a : t.field().enumerate()) {
    const auto c = cst(t, a.code());
    CHECK(t.mul(var(t, 1), c) == t.mul(t.constant(t.field().frobenius(a, 1)), var(t, 1)));
    CHECK(t.mul(var(t, 2), c) == t.mul(t.constant(t.field().frobenius(a, 1)), var(t, 2)));
  }
  CHECK(t.mul(var(t, 2), var(t, 1)) == t.mul(var(t, 1), var(t, 2)));
}

TEST_CASE("both evaluation procedures agree") {
  for (const Tower& t : sample_towers()) {
    for (int i = 0; i < 30; ++i) {
      const auto f = testing::random_poly(t, t.size(), 3);
      const auto g = testing::random_poly(t, t.size(), 3);
      const Point p = testing::random_point(t);
      CHECK(t.eval_normal(f, p) == t.eval_by_division(f, p));
      CHECK(t.eval_normal(t.add(f, g), p) == t.field().add(t.eval_normal(f, p), t.eval_normal(g, p)));
    }
  }
}

TEST_CASE("right root property") {
  for (const Tower& t : sample_towers()) {
    const unsigned n = t.size();
    for (int i = 0; i < 30; ++i) {
      const auto f = testing::random_poly(t, n, 2);
      const Point p = testing::random_point(t);
      const auto factor = t.sub(var(t, n), t.constant(p.coords[n - 1], n));
      CHECK(t.eval_normal(t.mul(f, factor), p).is_zero());
    }
  }
}

TEST_CASE("two-variable monomial formula") {
  for (const Tower& t : sample_towers()) {
    const Field& k = t.field();
    const auto f = t.mul(var(t, 1), var(t, 2));
    for (int i = 0; i < 40; ++i) {
      Point p = testing::random_point(t);
      const FieldElement a1 = p.coords[0], a2 = p.coords[1];
      CHECK(t.eval_normal(f, p) == k.add(k.mul(t.sigma_on_field(1, a2), a1), t.delta_on_field(1, a2)));
    }
  }
}

TEST_CASE("F4 Frobenius tower evaluations") {
  const Tower t = preset_tower("f4-frobenius-2");
  const Point p{{el(2), el(3)}};  // (alpha, alpha^2)
  CHECK(t.eval_normal(t.mul(var(t, 1), var(t, 2)), p) == el(3));
  CHECK(t.eval_word(Word{el(1), {2, 1}}, p) == el(1));
  CHECK(t.eval_word(Word{el(1), {1, 2}}, p) == el(3));
  CHECK(t.good_point_test(Point{{el(0), el(0)}}));
}

TEST_CASE("word evaluation matches normal evaluation on ordered monomials") {
  std::vector<Tower> towers;
  for (const char* name : {"classical-f4-2", "classical-f4-3", "f4-frobenius-2", "f4-frobenius-3", "weyl-f5"}) {
    towers.push_back(preset_tower(name));
  }
  towers.push_back(inner_tower());
  for (const Tower& t : towers) {
    const unsigned n = t.size();
    std::vector<unsigned> exps(n, 0);
    std::function<void(unsigned, unsigned)> walk = [&](unsigned i, unsigned budget) {
      if (i == n) {
        Word w;
        for (unsigned v = 0; v < n; ++v) w.letters.insert(w.letters.end(), exps[v], v + 1);
        const MultiPoly f = t.monomial(el(1), exps);
        for (int k = 0; k < 12; ++k) {
          const Point p = testing::random_point(t);
          REQUIRE(t.eval_word(w, p) == t.eval_normal(f, p));
        }
        return;
      }
      for (unsigned e = 0; e <= budget; ++e) {
        exps[i] = e;
        walk(i + 1, budget - e);
      }
      exps[i] = 0;
    };
    walk(0, 4);
  }
}

TEST_CASE("Weyl word and normal-form values differ on unordered words") {
  const Tower t = preset_tower("weyl-f101");
  const Field& k = t.field();
  const Word yyx{el(1), {2, 2, 1}};
  const Word yx{el(1), {2, 1}};
  const Word yxx{el(1), {2, 1, 1}};
  for (int i = 0; i < 50; ++i) {
    const Point p = testing::random_point(t);
    const FieldElement a = p.coords[0], b = p.coords[1];
    // normal form keeps the commutator terms
    CHECK(t.eval_normal(t.normalize(yx), p) == k.add(k.mul(b, a), k.one()));
    CHECK(t.eval_normal(t.normalize(yxx), p) == k.add(k.mul(b, k.mul(a, a)), k.mul(el(2), a)));
    CHECK(t.eval_normal(t.normalize(yyx), p) == k.add(k.mul(k.mul(b, b), a), k.mul(el(2), b)));
    // the word rule commutes constants past letters and drops them
    CHECK(t.eval_word(yx, p) == k.mul(a, b));
    CHECK(t.eval_word(yyx, p) == k.mul(a, k.mul(b, b)));
  }
  CHECK(t.eval_normal(t.normalize(yx), Point{{el(0), el(0)}}) == el(1));
}

TEST_CASE("twisted product represented modulo the evaluation set") {
  // K[t1; s1][t2; s2], delta = 0: t2 (t1 - a1) is represented by s1(a2) a1 - s2(a1) a2
  const Tower t = from_text("field 2^2\nvar t1 sigma_K=frob^1\nvar t2 sigma_K=frob^1\n");
  const Field& k = t.field();
  for (const Point& p : t.points()) {
    const FieldElement a1 = p.coords[0], a2 = p.coords[1];
    const auto f = t.mul(var(t, 2), t.sub(var(t, 1), t.constant(a1)));
    CHECK(t.eval_normal(f, p) ==
          k.sub(k.mul(t.sigma_on_field(1, a2), a1), k.mul(t.sigma_on_field(2, a1), a2)));
  }
}

TEST_CASE("good point conditions agree") {
  std::vector<Tower> towers;
  for (const char* name : {"classical-f4-2", "classical-f4-3", "f4-frobenius-2", "f4-frobenius-3", "weyl-f5"}) {
    towers.push_back(preset_tower(name));
  }
  towers.push_back(inner_tower());
  towers.push_back(from_text("field 2^2\nvar t1 sigma_K=frob^1\nvar t2 sigma_K=frob^1\n"));
  towers.push_back(from_text("field 2^2\nvar t1\nvar t2\nvar t3 sigma_K=frob^1\n"));
  for (const Tower& t : towers) {
    for (const Point& p : t.points()) CHECK(t.good_point_test(p) == t.good_point_condition4(p));
  }
  // a tower with both good and bad points: t2 t1 = t1 t2 here, so (a1, a2) is
  // good iff a2^2 a1 = a1^2 a2
  const Tower& twisted = towers[6];
  std::size_t good = 0;
  for (const Point& p : twisted.points()) {
    const Field& k = twisted.field();
    const FieldElement a1 = p.coords[0], a2 = p.coords[1];
    const bool expected = k.mul(k.mul(a2, a2), a1) == k.mul(k.mul(a1, a1), a2);
    CHECK(twisted.good_point_test(p) == expected);
    good += expected;
  }
  CHECK(good == 10);
}

TEST_CASE("good points in standard towers") {
  const Tower classical = preset_tower("classical-f4-2");
  for (const Point& p : classical.points()) CHECK(classical.good_point_test(p));
  const Tower weyl = preset_tower("weyl-f5");
  for (const Point& p : weyl.points()) CHECK_FALSE(weyl.good_point_test(p));
  const Tower single = preset_tower("f8-frobenius-1");
  for (const Point& p : single.points()) CHECK(single.good_point_test(p));
}

TEST_CASE("change of variables in the F4 tower") {
  const Tower t = preset_tower("f4-sec21-3var");
  const std::vector<MultiPoly> x = {
      t.normalize(parse_expression(t, "Y1 + 1")),
      t.normalize(parse_expression(t, "3 Y2 + Y1 + 3")),
      t.normalize(parse_expression(t, "3 Y3 + 2 Y1 + 2")),
  };
  // Y_i stands for X_i inside the substituted expressions
  auto sub = [&](const char* e) { return t.substitute(parse_expression(t, e), x); };
  CHECK(sub("Y1 2") == sub("3 Y1 + 1"));
  CHECK(sub("Y2 2") == sub("2 Y2 + Y1 + 1"));
  CHECK(sub("Y2 Y1") == sub("2 Y1 Y2 + 3 Y2 + 3 Y1 Y1 + 3"));
  CHECK(sub("Y3 2") == sub("2 Y3 + 2 Y1 + 2"));
  CHECK(sub("Y3 Y1") == sub("2 Y1 Y3 + 3 Y3 + 3 Y1 Y1 + 3 Y1"));
  CHECK(sub("Y3 Y2") == sub("Y2 Y3 + 3 Y1 Y3 + 3 Y3 + Y1 Y2 + 2 Y1 Y1 + 3 Y1 + Y2 + 1"));
  CHECK_FALSE(sub("Y2 Y1") == sub("Y1 Y2"));
}

TEST_CASE("substitution") {
  const Tower t = preset_tower("f4-frobenius-2");
  const std::vector<MultiPoly> identity = {var(t, 1), var(t, 2)};
  for (int i = 0; i < 10; ++i) {
    const auto f = testing::random_poly(t, 2, 2);
    Expression e;
    for (const Term& term : f.terms()) {
      Product p;
      p.factors.emplace_back(term.coefficient);
      for (unsigned v = 0; v < term.exponents.size(); ++v) p.factors.insert(p.factors.end(), term.exponents[v], v + 1);
      e.push_back(p);
    }
    CHECK(t.substitute(e, identity) == f);
  }
  const std::vector<MultiPoly> bad = {var(t, 2), var(t, 2)};
  CHECK_THROWS_AS(t.substitute(parse_expression(t, "t1"), bad), InputError);
}

TEST_CASE("right division in the tower") {
  for (const Tower& t : sample_towers()) {
    const unsigned n = t.size();
    for (int i = 0; i < 20; ++i) {
      const auto f = testing::random_poly(t, n, 3);
      const auto g = t.add(t.pow(var(t, n), 2), testing::random_poly(t, n - 1, 1));
      const auto [q, r] = t.right_divmod(n, f, g);
      CHECK(t.add(t.mul(q, g), r) == f.lifted(n));
      CHECK((r.is_zero() || r.top_degree() < 2));
    }
    CHECK_THROWS_AS(t.right_divmod(n, var(t, n), MultiPoly(n)), InputError);
    if (n >= 2) CHECK_THROWS_AS(t.right_divmod(n, var(t, n), t.mul(var(t, 1), var(t, n))), InputError);
  }
}

TEST_CASE("point enumeration and identically zero sweeps") {
  const Tower t = preset_tower("f4-frobenius-2");
  CHECK(t.point_count() == 16);
  CHECK(t.point(0) == Point{{el(0), el(0)}});
  CHECK(t.point(1) == Point{{el(0), el(1)}});
  CHECK(t.point(4) == Point{{el(1), el(0)}});
  CHECK_THROWS_AS(t.eval_normal(var(t, 1), Point{{el(1)}}), InputError);
  CHECK_THROWS_AS(t.eval_normal(var(t, 1), Point{{el(1), el(9)}}), InputError);

  const Tower c = preset_tower("classical-f4-1");
  const auto square_minus = c.sub(c.pow(c.variable(1), 2), c.variable(1));
  CHECK_FALSE(is_identically_zero(c, square_minus));
  const auto g1 = t.sub(t.pow(var(t, 1), 3), var(t, 1));
  CHECK(is_identically_zero(t, g1));
  CHECK_FALSE(is_identically_zero(t, cst(t, 1)));
  for (int i = 0; i < 20; ++i) {
    const auto f = testing::random_poly(t, 2, 4);
    CHECK(is_identically_zero(t, f) == is_identically_zero_serial(t, f));
  }
}

TEST_CASE("flat view of normal forms") {
  const Tower t = preset_tower("f4-frobenius-3");
  const auto f = t.add(t.monomial(el(2), {1, 0, 2}), t.monomial(el(1), {0, 1}));
  CHECK(f.max_variable() == 3);
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in(3) == 2);
  const auto terms = f.terms();
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].coefficient == el(1));
  CHECK(terms[1].exponents == std::vector<unsigned>{1, 0, 2});
  CHECK(t.monomial(el(1), {0, 1}).shrunk().level() == 2);
}
