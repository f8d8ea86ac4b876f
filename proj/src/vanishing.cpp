#include "orecalc/vanishing.hpp"

#include "orecalc/error.hpp"
#include "orecalc/linalg.hpp"

namespace orecalc {

MultiPoly VanishingGenerator::poly() const {
  std::vector<MultiPoly> c;
  for (FieldElement x : coeffs) c.push_back(MultiPoly::constant(x, level - 1));
  return MultiPoly::from_coeffs(level, std::move(c));
}

namespace {

VanishingGenerator binomial(unsigned level, unsigned degree, const Field& field) {
  VanishingGenerator g;
  g.level = level;
  g.coeffs.assign(degree + 1, field.zero());
  g.coeffs[1] = field.neg(field.one());
  g.coeffs[degree] = field.one();
  g.closed_form = true;
  return g;
}

// Values of t_level^k at every point, in point order.
std::vector<FieldElement> power_row(const Tower& tower, unsigned level, unsigned k) {
  std::vector<unsigned> exps(level, 0);
  exps[level - 1] = k;
  const MultiPoly mono = tower.monomial(tower.field().one(), exps);
  const auto count = static_cast<std::int64_t>(tower.point_count());
  std::vector<FieldElement> row(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < count; ++j) {
    row[static_cast<std::size_t>(j)] = tower.eval_normal(mono, tower.point(static_cast<std::uint64_t>(j)));
  }
  return row;
}

MultiPoly reduce_level(const Tower& tower, std::span<const VanishingGenerator> gens, const MultiPoly& f) {
  const unsigned level = f.level();
  if (level == 0 || f.is_zero()) return f;
  const MultiPoly rem = tower.right_divmod(level, f, gens[level - 1].poly()).second;
  std::vector<MultiPoly> coeffs;
  for (const MultiPoly& c : rem.coeffs()) coeffs.push_back(reduce_level(tower, gens, c));
  return MultiPoly::from_coeffs(level, std::move(coeffs));
}

}  // namespace

VanishingGenerator vanishing_gen(const Tower& tower, unsigned level, bool use_closed_forms) {
  if (level < 1 || level > tower.size()) throw InputError("level out of range");
  const Field& field = tower.field();
  const LevelSpec& lv = tower.spec().levels[level - 1];
  if (use_closed_forms && !lv.delta_inner) {
    if (lv.sigma_frobenius == 0) return binomial(level, field.q(), field);
    if (lv.sigma_frobenius == 1) return binomial(level, (field.p() - 1) * field.m() + 1, field);
  }

  const std::uint64_t cap = std::uint64_t{field.q()} * tower.size();
  Matrix lower(0, tower.point_count());
  lower.append_row(power_row(tower, level, 0));
  for (unsigned d = 1; d <= cap; ++d) {
    std::vector<FieldElement> top = power_row(tower, level, d);
    for (auto& x : top) x = field.neg(x);
    if (auto solution = solve_left(field, lower, top)) {
      VanishingGenerator g;
      g.level = level;
      g.coeffs = std::move(*solution);
      g.coeffs.push_back(field.one());
      return g;
    }
    for (auto& x : top) x = field.neg(x);
    lower.append_row(top);
  }
  throw CapExceeded("no vanishing polynomial in " + tower.name(level) + " of degree <= " + std::to_string(cap));
}

std::vector<VanishingGenerator> vanishing_gens(const Tower& tower, bool use_closed_forms) {
  std::vector<VanishingGenerator> out;
  for (unsigned i = 1; i <= tower.size(); ++i) out.push_back(vanishing_gen(tower, i, use_closed_forms));
  return out;
}

MultiPoly reduce_mod_vanishing(const Tower& tower, std::span<const VanishingGenerator> gens, const MultiPoly& f) {
  if (gens.size() != tower.size()) throw InputError("one vanishing generator per level is required");
  if (f.level() > tower.size()) throw InputError("polynomial level exceeds the tower");
  return reduce_level(tower, gens, f.lifted(tower.size()));
}

std::string format_vanishing(const Tower& tower, const VanishingGenerator& g) {
  const Field& field = tower.field();
  const std::string& name = tower.name(g.level);
  auto mono = [&](unsigned k) {
    if (k == 0) return std::string("1");
    if (k == 1) return name;
    return name + "^" + std::to_string(k);
  };
  std::string out = mono(g.degree());
  for (unsigned k = g.degree(); k-- > 0;) {
    const FieldElement c = g.coeffs[k];
    if (c.is_zero()) continue;
    if (field.neg(c) == field.one()) {
      out += " - " + mono(k);
    } else if (c == field.one()) {
      out += " + " + mono(k);
    } else if (k == 0) {
      out += " + " + std::to_string(c.code());
    } else {
      out += " + " + std::to_string(c.code()) + "*" + mono(k);
    }
  }
  return out;
}

}  // namespace orecalc
