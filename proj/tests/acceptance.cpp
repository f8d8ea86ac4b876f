// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "orecalc/conjugacy.hpp"
#include "orecalc/rmcode.hpp"
#include "orecalc/tower_io.hpp"
#include "orecalc/vanishing.hpp"

using namespace orecalc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s));
  std::printf("%s %2d %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.detail.empty() ? "" : ": ",
              out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

FieldElement el(std::uint32_t c) { return FieldElement{c}; }

FieldSkewPoly binomial(const FieldOreRing& ring, std::size_t d) {
  const FieldCoeffs& c = ring.coefficients();
  std::vector<FieldElement> v(d + 1, c.zero());
  v[1] = c.neg(c.one());
  v[d] = c.one();
  return ring.make(v);
}

const std::vector<std::pair<std::uint32_t, unsigned>> kFields = {{2, 2}, {2, 3}, {3, 2}};

Outcome frobenius_vanishing() {
  Outcome o;
  for (auto [p, m] : kFields) {
    const FieldOreRing ring(FieldCoeffs(Field::make(p, m), 1));
    const auto all = ring.coefficients().field().enumerate();
    const auto g = min_vanishing_poly(ring, all);
    const std::size_t d = (p - 1) * m + 1;
    o.require(g == binomial(ring, d), "F_" + std::to_string(p) + "^" + std::to_string(m) + ": got " + format_poly(g));
    o.require(invariance_check(ring, g), "invariance fails for " + format_poly(g));
  }
  return o;
}

Outcome conjugacy_structure() {
  Outcome o;
  for (auto [p, m] : kFields) {
    const FieldOreRing ring(FieldCoeffs(Field::make(p, m), 1));
    const Field& f = ring.coefficients().field();
    const std::string tag = "F_" + std::to_string(f.q());
    o.require(conjugacy_classes(ring).size() == p, tag + ": class count");
    o.require(centralizer(ring, f.zero()).size() == f.q(), tag + ": C(0)");
    for (FieldElement a : f.enumerate()) {
      if (a.is_zero()) continue;
      const auto c = centralizer(ring, a);
      bool prime = c.size() == p;
      for (FieldElement x : c) prime = prime && f.in_prime_field(x);
      o.require(prime, tag + ": C(" + std::to_string(a.code()) + ") is not F_p");
    }
    o.require(conjugacy_class(ring, f.one()).size() == (f.q() - 1) / (p - 1), tag + ": |class of 1|");
  }
  return o;
}

Outcome gordon_motzkin() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (auto [p, m] : kFields) {
    const FieldOreRing ring(FieldCoeffs(Field::make(p, m), 1));
    const Field& f = ring.coefficients().field();
    std::uniform_int_distribution<std::uint32_t> coef(0, f.q() - 1);
    std::uniform_int_distribution<std::size_t> deg(0, 5);
    int tested = 0;
    while (tested < 500) {
      std::vector<FieldElement> c(deg(rng) + 1);
      for (auto& x : c) x = el(coef(rng));
      const auto poly = ring.make(c);
      if (poly.is_zero()) continue;
      ++tested;
      GordonMotzkinReport r;
      try {
        r = gordon_motzkin_report(ring, poly);
      } catch (const std::logic_error& e) {
        o.require(false, std::string(e.what()) + " for " + format_poly(poly));
        continue;
      }
      o.require(r.classes_with_roots.size() <= r.degree && r.dimension_sum <= r.degree,
                "bound fails for " + format_poly(poly));
    }
  }
  const FieldOreRing f4(FieldCoeffs(Field::make(2, 2), 1));
  const auto r = gordon_motzkin_report(f4, binomial(f4, 3));
  o.require(r.dimension_sum == 3, "t^3 - t over F4 gives sum " + std::to_string(r.dimension_sum));
  return o;
}

Outcome weyl_identities() {
  Outcome o;
  const WeylRing weyl(PrimePolyCoeffs(101));
  const auto n = weyl.norm_sequence(weyl.coefficients().x(), 4);
  o.require(n[2] == PrimePoly{1, 0, 1}, "N_2");
  o.require(n[3] == PrimePoly{0, 3, 0, 1}, "N_3");
  o.require(n[4] == PrimePoly{3, 0, 6, 0, 1}, "N_4");

  const Tower t = preset_tower("weyl-f101");
  const Field& k = t.field();
  const MultiPoly yx = t.normalize(Word{el(1), {2, 1}});
  const MultiPoly yxx = t.normalize(Word{el(1), {2, 1, 1}});
  const MultiPoly yyx = t.normalize(Word{el(1), {2, 2, 1}});
  std::mt19937 rng(101);
  std::vector<std::uint32_t> codes(101);
  for (std::uint32_t i = 0; i < 101; ++i) codes[i] = i;
  std::shuffle(codes.begin(), codes.end(), rng);
  const std::vector<std::uint32_t> as(codes.begin(), codes.begin() + 20);
  std::shuffle(codes.begin(), codes.end(), rng);
  const std::vector<std::uint32_t> bs(codes.begin(), codes.begin() + 20);
  for (std::uint32_t ac : as) {
    for (std::uint32_t bc : bs) {
      const FieldElement a = el(ac), b = el(bc);
      const Point p{{a, b}};
      const std::string at = " at (" + std::to_string(ac) + "," + std::to_string(bc) + ")";
      o.require(t.eval_normal(yx, p) == k.add(k.mul(b, a), k.one()), "(YX)" + at);
      o.require(t.eval_normal(yxx, p) == k.add(k.mul(b, k.mul(a, a)), k.mul(el(2), a)), "(YX^2)" + at);
      o.require(t.eval_normal(yyx, p) == k.add(k.mul(k.mul(b, b), a), k.mul(el(2), b)), "(Y^2X)" + at);
    }
  }
  o.require(t.eval_normal(yx, Point{{el(0), el(0)}}) == el(1), "t2 t1 at (0,0)");
  return o;
}

Outcome good_points() {
  Outcome o;
  const Tower classical = preset_tower("classical-f4-2");
  const Tower weyl = preset_tower("weyl-f5");
  std::size_t good = 0, bad = 0;
  for (const Point& p : classical.points()) {
    good += classical.good_point_test(p);
    o.require(classical.good_point_test(p) == classical.good_point_condition4(p), "classical conditions differ");
  }
  for (const Point& p : weyl.points()) {
    bad += !weyl.good_point_test(p);
    o.require(weyl.good_point_test(p) == weyl.good_point_condition4(p), "Weyl conditions differ");
  }
  o.require(good == 16, "classical good points: " + std::to_string(good));
  o.require(bad == 25, "Weyl bad points: " + std::to_string(bad));
  return o;
}

Outcome commutation_relations() {
  Outcome o;
  const Tower t = preset_tower("f4-sec21-3var");
  const std::vector<MultiPoly> x = {
      t.normalize(parse_expression(t, "Y1 + 1")),
      t.normalize(parse_expression(t, "3 Y2 + Y1 + 3")),
      t.normalize(parse_expression(t, "3 Y3 + 2 Y1 + 2")),
  };
  // variable i inside these expressions stands for X_i; 2 = alpha, 3 = alpha^2
  const std::vector<std::pair<const char*, const char*>> relations = {
      {"Y1 2", "3 Y1 + 1"},
      {"Y2 2", "2 Y2 + Y1 + 1"},
      {"Y2 Y1", "2 Y1 Y2 + 3 Y2 + 3 Y1 Y1 + 3"},
      {"Y3 2", "2 Y3 + 2 Y1 + 2"},
      {"Y3 Y1", "2 Y1 Y3 + 3 Y3 + 3 Y1 Y1 + 3 Y1"},
      {"Y3 Y2", "Y2 Y3 + 3 Y1 Y3 + 3 Y3 + Y1 Y2 + 2 Y1 Y1 + 3 Y1 + Y2 + 1"},
  };
  for (const auto& [lhs, rhs] : relations) {
    const MultiPoly l = t.substitute(parse_expression(t, lhs), x);
    const MultiPoly r = t.substitute(parse_expression(t, rhs), x);
    o.require(l == r, std::string(lhs) + ": " + format_multipoly(t, l) + " vs " + format_multipoly(t, r));
  }
  return o;
}

Outcome vanishing_ideal() {
  Outcome o;
  const Tower t = preset_tower("f4-sec21-2var");
  const Field& k = t.field();
  const auto gens = vanishing_gens(t);
  o.require(format_vanishing(t, gens[0]) == "Y1^3 - Y1", "G_1 = " + format_vanishing(t, gens[0]));
  o.require(format_vanishing(t, gens[1]) == "Y2^4 - Y2", "G_2 = " + format_vanishing(t, gens[1]));

  // The family {f : deg_1 f <= 4, deg_2 f <= 5} is a K-vector space on the
  // monomials t1^i t2^j, and both reduction and evaluation are left
  // K-linear.  The zero sets agree on every member iff
  // rank R = rank E = rank [R | E], R and E holding the images of the
  // basis monomials.
  std::vector<MultiPoly> basis;
  for (unsigned i = 0; i <= 4; ++i) {
    for (unsigned j = 0; j <= 5; ++j) basis.push_back(t.monomial(k.one(), {i, j}));
  }
  const std::size_t n_red = 3 * 4, n_pts = t.point_count();
  Matrix red(0, n_red), ev(0, n_pts), both(0, n_red + n_pts);
  for (const MultiPoly& f : basis) {
    const MultiPoly r = reduce_mod_vanishing(t, gens, f);
    o.require(r.degree_in(1) < 3 && r.degree_in(2) < 4, "reduction leaves a high degree");
    std::vector<FieldElement> rr(n_red, k.zero());
    for (const Term& term : r.terms()) rr[term.exponents[0] * 4 + term.exponents[1]] = term.coefficient;
    std::vector<FieldElement> ee;
    for (std::uint64_t j = 0; j < n_pts; ++j) ee.push_back(t.eval_normal(f, t.point(j)));
    red.append_row(rr);
    ev.append_row(ee);
    rr.insert(rr.end(), ee.begin(), ee.end());
    both.append_row(rr);
  }
  const auto r_red = rank(k, red), r_ev = rank(k, ev), r_both = rank(k, both);
  o.require(r_red == r_ev && r_ev == r_both,
            "ranks " + std::to_string(r_red) + " " + std::to_string(r_ev) + " " + std::to_string(r_both));

  // direct check on random members, half of them forced into the ideal
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> coef(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly f(2);
    for (const MultiPoly& m : basis) f = t.add(f, t.scale(el(coef(rng)), m));
    if (trial % 2 == 0) f = t.sub(f, reduce_mod_vanishing(t, gens, f));
    o.require(reduce_mod_vanishing(t, gens, f).is_zero() == is_identically_zero(t, f), "random member disagrees");
  }
  return o;
}

Outcome code_parameters() {
  Outcome o;
  const Tower t2 = preset_tower("f4-frobenius-2");
  auto words = [](std::initializer_list<std::vector<unsigned>> letters) {
    MonomialSet ms;
    for (const auto& l : letters) ms.words.push_back(Word{FieldElement{1}, l});
    return ms;
  };
  auto params = [](const CodeReport& r) {
    return "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "]";
  };
  const CodeReport ordered = code_report(t2, words({{}, {1}, {2}, {1, 2}}));
  o.require(params(ordered) == "[16,4,8]", "{1,t1,t2,t1t2} gives " + params(ordered) + ", expected [16,4,8]");
  const CodeReport swapped = code_report(t2, words({{}, {1}, {2}, {2, 1}}));
  o.require(params(swapped) == "[16,4,7]",
            "word set {1,t1,t2,t2t1} gives " + params(swapped) +
                ", expected [16,4,7]; word evaluation does not reproduce it");
  const Tower t3 = preset_tower("f4-frobenius-3");
  const auto ms3 = monomial_basis(3, 3, std::vector<unsigned>{1, 1, 1});
  const Matrix g3 = generator_matrix(t3, ms3);
  const DistanceResult d3 = min_distance_serial(t3.field(), g3);
  o.require(g3.cols() == 64 && rank(t3.field(), g3) == 8, "multilinear m=3 is not [64,8]");
  o.require(d3.codewords == 65535, "scan covered " + std::to_string(d3.codewords) + " nonzero codewords");
  o.require(d3.distance == 27, "multilinear m=3 distance " + std::to_string(d3.distance) + ", golden 27");
  return o;
}

Outcome classical_rm() {
  Outcome o;
  for (unsigned m = 2; m <= 4; ++m) {
    const Tower t = preset_tower("classical-f2-" + std::to_string(m));
    const CodeReport r = code_report(t, monomial_basis(m, 1, std::vector<unsigned>(m, 1)));
    o.require(r.n == (1u << m) && r.k == m + 1 && r.d == (1u << (m - 1)),
              "m=" + std::to_string(m) + " gives [" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                  std::to_string(r.d) + "]");
  }
  return o;
}

Outcome mode_agreement() {
  Outcome o;
  std::size_t checks = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (const std::string kind : {"classical-f4-", "f4-frobenius-"}) {
      const Tower t = preset_tower(kind + std::to_string(n));
      const auto points = t.points();
      for (const Word& w : monomial_basis(n, 4).words) {
        std::vector<unsigned> exps(n, 0);
        for (unsigned letter : w.letters) ++exps[letter - 1];
        const MultiPoly f = t.monomial(t.field().one(), exps);
        for (const Point& p : points) {
          ++checks;
          if (t.eval_word(w, p) != t.eval_normal(f, p)) {
            o.require(false, kind + std::to_string(n) + " word " + format_word(t, w) + " at " + format_point(p));
          }
        }
      }
    }
  }
  o.require(checks > 0, "nothing checked");
  return o;
}

}  // namespace

int main() {
  criterion(1, "vanishing polynomial of the Frobenius twist over F4, F8, F9", 1.0, frobenius_vanishing);
  criterion(2, "conjugacy classes and centralizers", 1.0, conjugacy_structure);
  criterion(3, "Gordon-Motzkin bound on random polynomials", 10.0, gordon_motzkin);
  criterion(4, "Weyl algebra identities over F_101", 1.0, weyl_identities);
  criterion(5, "good points and the two good-point conditions", 1.0, good_points);
  criterion(6, "commutation relations after the change of variables", 1.0, commutation_relations);
  criterion(7, "vanishing ideal and reduction modulo its generators", 30.0, vanishing_ideal);
  criterion(8, "skew Reed-Muller code parameters", 10.0, code_parameters);
  criterion(9, "classical binary Reed-Muller parameters", 1.0, classical_rm);
  criterion(10, "word evaluation agrees with normal evaluation on ordered monomials", 10.0, mode_agreement);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
