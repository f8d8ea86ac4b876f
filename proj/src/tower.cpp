#include "orecalc/tower.hpp"

#include <algorithm>
#include <set>

#include "orecalc/error.hpp"

namespace orecalc {

namespace {

// The constant c when f lies in K (every nested coefficient of degree 0).
std::optional<FieldElement> as_constant(const MultiPoly& f) {
  const MultiPoly* cur = &f;
  while (cur->level() > 0) {
    if (cur->coeffs().size() > 1) return std::nullopt;
    if (cur->coeffs().empty()) return FieldElement{0};
    cur = &cur->coeffs().front();
  }
  return cur->constant_value();
}

}  // namespace

Tower::Tower(TowerSpec spec) : spec_(std::move(spec)) {
  const unsigned n = size();
  if (n == 0) throw InputError("tower needs at least one level");
  std::set<std::string> names;
  for (unsigned i = 1; i <= n; ++i) {
    LevelSpec& lv = spec_.levels[i - 1];
    if (lv.name.empty()) lv.name = "t" + std::to_string(i);
    if (!names.insert(lv.name).second) throw InputError("duplicate variable name '" + lv.name + "'");
    if (lv.sigma_frobenius >= field().m()) {
      throw InputError("level " + std::to_string(i) + ": frobenius exponent must be < m");
    }
    if (lv.delta_inner) {
      if (!field().contains(*lv.delta_inner)) throw InputError("inner derivation constant not in field");
      if (lv.delta_inner->is_zero()) lv.delta_inner.reset();
    }
    for (auto* images : {&lv.sigma_images, &lv.delta_images}) {
      for (auto& [j, img] : *images) {
        if (j < 1 || j >= i) {
          throw InputError("level " + std::to_string(i) + ": image given for t" + std::to_string(j) +
                           ", which is not a lower variable");
        }
        if (img.max_variable() >= i) {
          throw InputError("level " + std::to_string(i) + ": image of t" + std::to_string(j) +
                           " does not lie in R_" + std::to_string(i - 1));
        }
        for (const Term& t : img.terms()) {
          if (!field().contains(t.coefficient)) throw InputError("image coefficient not in field");
        }
        img = img.shrunk().lifted(i - 1);
      }
    }
  }
}

std::optional<unsigned> Tower::index_of(std::string_view name) const {
  for (unsigned i = 1; i <= size(); ++i) {
    if (spec_.levels[i - 1].name == name) return i;
  }
  return std::nullopt;
}

FieldElement Tower::sigma_on_field(unsigned i, FieldElement c) const {
  return field().frobenius(c, spec_.levels.at(i - 1).sigma_frobenius);
}

FieldElement Tower::delta_on_field(unsigned i, FieldElement c) const {
  const auto& inner = spec_.levels.at(i - 1).delta_inner;
  if (!inner) return field().zero();
  return field().sub(field().mul(*inner, c), field().mul(sigma_on_field(i, c), *inner));
}

MultiPoly Tower::constant(FieldElement c, unsigned level) const {
  if (!field().contains(c)) throw InputError("constant not in field");
  return MultiPoly::constant(c, level);
}

MultiPoly Tower::variable(unsigned i) const {
  if (i < 1 || i > size()) throw InputError("variable index out of range");
  return MultiPoly::from_coeffs(i, {MultiPoly(i - 1), constant(field().one(), i - 1)});
}

MultiPoly Tower::monomial(FieldElement c, const std::vector<unsigned>& exponents) const {
  MultiPoly out = constant(c, 0);
  for (unsigned i = 1; i <= exponents.size(); ++i) {
    std::vector<MultiPoly> coeffs(exponents[i - 1] + 1, MultiPoly(i - 1));
    coeffs.back() = out;
    out = MultiPoly::from_coeffs(i, std::move(coeffs));
  }
  return out;
}

MultiPoly Tower::from_terms(unsigned level, const std::vector<Term>& terms) const {
  MultiPoly out(level);
  for (const Term& t : terms) {
    if (t.exponents.size() > level) throw InputError("term has more exponents than the level");
    out = add(out, monomial(t.coefficient, t.exponents));
  }
  return out.lifted(level);
}

MultiPoly Tower::add(const MultiPoly& f, const MultiPoly& g) const {
  const unsigned level = std::max(f.level(), g.level());
  if (level == 0) return MultiPoly::constant(field().add(f.constant_value(), g.constant_value()));
  const MultiPoly a = f.lifted(level), b = g.lifted(level);
  std::vector<MultiPoly> r(std::max(a.coeffs().size(), b.coeffs().size()), MultiPoly(level - 1));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = add(a.coeff(k), b.coeff(k));
  return MultiPoly::from_coeffs(level, std::move(r));
}

MultiPoly Tower::neg(const MultiPoly& f) const {
  if (f.level() == 0) return MultiPoly::constant(field().neg(f.constant_value()));
  std::vector<MultiPoly> r;
  for (const auto& c : f.coeffs()) r.push_back(neg(c));
  return MultiPoly::from_coeffs(f.level(), std::move(r));
}

MultiPoly Tower::sub(const MultiPoly& f, const MultiPoly& g) const { return add(f, neg(g)); }

MultiPoly Tower::scale(FieldElement c, const MultiPoly& f) const {
  if (f.level() == 0) return MultiPoly::constant(field().mul(c, f.constant_value()));
  std::vector<MultiPoly> r;
  for (const auto& coeff : f.coeffs()) r.push_back(scale(c, coeff));
  return MultiPoly::from_coeffs(f.level(), std::move(r));
}

MultiPoly Tower::mul_scalar_right(const MultiPoly& f, FieldElement c) const {
  const unsigned level = f.level();
  if (level == 0) return MultiPoly::constant(field().mul(f.constant_value(), c));
  if (f.is_zero() || c.is_zero()) return MultiPoly(level);
  // t^k c as a polynomial in t = t_level with coefficients in K
  std::vector<FieldElement> shifted{c};
  std::vector<MultiPoly> acc;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) {
      std::vector<FieldElement> next(shifted.size() + 1, field().zero());
      for (std::size_t j = 0; j < shifted.size(); ++j) {
        next[j + 1] = field().add(next[j + 1], sigma_on_field(level, shifted[j]));
        next[j] = field().add(next[j], delta_on_field(level, shifted[j]));
      }
      shifted = std::move(next);
    }
    const MultiPoly& fk = f.coeffs()[k];
    if (fk.is_zero()) continue;
    if (acc.size() < shifted.size()) acc.resize(shifted.size(), MultiPoly(level - 1));
    for (std::size_t j = 0; j < shifted.size(); ++j) {
      if (!shifted[j].is_zero()) acc[j] = add(acc[j], mul_scalar_right(fk, shifted[j]));
    }
  }
  return MultiPoly::from_coeffs(level, std::move(acc));
}

MultiPoly Tower::mul(const MultiPoly& f, const MultiPoly& g) const {
  const unsigned level = std::max(f.level(), g.level());
  if (level > size()) throw InputError("operand level exceeds the tower");
  return binary_mul(f.lifted(level), g.lifted(level));
}

MultiPoly Tower::binary_mul(const MultiPoly& f, const MultiPoly& g) const {
  const unsigned level = f.level();
  if (level == 0) return MultiPoly::constant(field().mul(f.constant_value(), g.constant_value()));
  if (f.is_zero() || g.is_zero()) return MultiPoly(level);
  if (auto c = as_constant(f)) return scale(*c, g);
  if (auto c = as_constant(g)) return mul_scalar_right(f, *c);

  std::vector<MultiPoly> acc;
  MultiPoly shifted = g;  // t_level^k g
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) shifted = mul_variable_left(level, shifted);
    const MultiPoly& fk = f.coeffs()[k];
    if (fk.is_zero()) continue;
    if (acc.size() < shifted.coeffs().size()) acc.resize(shifted.coeffs().size(), MultiPoly(level - 1));
    for (std::size_t j = 0; j < shifted.coeffs().size(); ++j) {
      acc[j] = add(acc[j], binary_mul(fk, shifted.coeffs()[j]));
    }
  }
  return MultiPoly::from_coeffs(level, std::move(acc));
}

MultiPoly Tower::pow(const MultiPoly& f, unsigned k) const {
  MultiPoly r = constant(field().one(), f.level());
  for (unsigned i = 0; i < k; ++i) r = mul(r, f);
  return r;
}

MultiPoly Tower::mul_variable_left(unsigned i, const MultiPoly& f) const {
  if (f.level() > i) throw InputError("operand does not lie in R_i");
  const MultiPoly g = f.lifted(i);
  if (g.is_zero()) return g;
  std::vector<MultiPoly> r(g.coeffs().size() + 1, MultiPoly(i - 1));
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    const MultiPoly& c = g.coeffs()[k];
    if (c.is_zero()) continue;
    r[k + 1] = add(r[k + 1], sigma_apply(i, c));
    r[k] = add(r[k], delta_apply(i, c));
  }
  return MultiPoly::from_coeffs(i, std::move(r));
}

MultiPoly Tower::sigma_apply(unsigned i, const MultiPoly& f) const {
  if (i < 1 || i > size()) throw InputError("level out of range");
  if (f.level() >= i) {
    if (f.max_variable() >= i) throw InputError("sigma_i applies to R_{i-1} only");
    return sigma_apply(i, f.shrunk());
  }
  const unsigned level = f.level();
  if (level == 0) return MultiPoly::constant(sigma_on_field(i, f.constant_value()), i - 1);
  if (f.is_zero()) return MultiPoly(i - 1);

  const auto& images = spec_.levels[i - 1].sigma_images;
  const auto it = images.find(level);
  const MultiPoly image = it != images.end() ? it->second : variable(level).lifted(i - 1);

  MultiPoly acc(i - 1);
  MultiPoly power = constant(field().one(), i - 1);  // sigma_i(t_level)^k
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) power = mul(power, image);
    const MultiPoly& fk = f.coeffs()[k];
    if (!fk.is_zero()) acc = add(acc, mul(sigma_apply(i, fk), power));
  }
  return acc;
}

MultiPoly Tower::delta_apply(unsigned i, const MultiPoly& f) const {
  if (i < 1 || i > size()) throw InputError("level out of range");
  if (f.level() >= i) {
    if (f.max_variable() >= i) throw InputError("delta_i applies to R_{i-1} only");
    return delta_apply(i, f.shrunk());
  }
  const unsigned level = f.level();
  if (level == 0) return MultiPoly::constant(delta_on_field(i, f.constant_value()), i - 1);
  if (f.is_zero()) return MultiPoly(i - 1);

  const LevelSpec& lv = spec_.levels[i - 1];
  const auto s_it = lv.sigma_images.find(level);
  const MultiPoly s_image = s_it != lv.sigma_images.end() ? s_it->second : variable(level).lifted(i - 1);
  const auto d_it = lv.delta_images.find(level);
  const MultiPoly d_image = d_it != lv.delta_images.end() ? d_it->second : MultiPoly(i - 1);
  const MultiPoly x = variable(level).lifted(i - 1);

  // delta(r t^k) = sigma(r) delta(t^k) + delta(r) t^k,
  // delta(t^k) = sigma(t) delta(t^{k-1}) + delta(t) t^{k-1}
  MultiPoly acc(i - 1);
  MultiPoly d_power(i - 1);                       // delta_i(t^k)
  MultiPoly x_power = constant(field().one(), i - 1);  // t^k
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) {
      d_power = add(mul(s_image, d_power), mul(d_image, x_power));
      x_power = mul(x_power, x);
    }
    const MultiPoly& fk = f.coeffs()[k];
    if (fk.is_zero()) continue;
    if (!d_power.is_zero()) acc = add(acc, mul(sigma_apply(i, fk), d_power));
    acc = add(acc, mul(delta_apply(i, fk), x_power));
  }
  return acc;
}

std::vector<FieldElement> Tower::field_generators() const {
  return {field().multiplicative_generator()};
}

ValidationReport Tower::validate() const {
  ValidationReport report;
  const auto gens = field_generators();
  auto fail = [&](unsigned i, const std::string& what) {
    report.violations.push_back("level " + std::to_string(i) + ": " + what);
  };
  for (unsigned i = 2; i <= size(); ++i) {
    for (unsigned j = 1; j < i; ++j) {
      const MultiPoly tj = variable(j);
      const MultiPoly s_tj = sigma_apply(i, tj);
      const MultiPoly d_tj = delta_apply(i, tj);
      for (FieldElement c : gens) {
        const MultiPoly cc = constant(c);
        const MultiPoly prod = mul(tj, cc);  // sigma_j(c) t_j + delta_j(c)
        if (sigma_apply(i, prod) != mul(s_tj, sigma_apply(i, cc))) {
          fail(i, "sigma is not multiplicative on t" + std::to_string(j) + " * " + std::to_string(c.code()));
        }
        const MultiPoly leibniz = add(mul(s_tj, delta_apply(i, cc)), mul(d_tj, cc));
        if (delta_apply(i, prod) != leibniz) {
          fail(i, "delta violates the Leibniz rule on t" + std::to_string(j) + " * " +
                      std::to_string(c.code()));
        }
      }
      for (unsigned k = 1; k < j; ++k) {
        const MultiPoly tk = variable(k);
        const MultiPoly prod = mul(tj, tk);
        if (sigma_apply(i, prod) != mul(s_tj, sigma_apply(i, tk))) {
          fail(i, "sigma is not multiplicative on t" + std::to_string(j) + " * t" + std::to_string(k));
        }
        const MultiPoly leibniz = add(mul(s_tj, delta_apply(i, tk)), mul(d_tj, tk));
        if (delta_apply(i, prod) != leibniz) {
          fail(i, "delta violates the Leibniz rule on t" + std::to_string(j) + " * t" + std::to_string(k));
        }
      }
    }
  }
  return report;
}

MultiPoly Tower::normalize(const Word& w) const {
  return normalize(Expression{to_product(w)});
}

MultiPoly Tower::normalize(const Expression& e) const {
  std::vector<MultiPoly> identity;
  for (unsigned i = 1; i <= size(); ++i) identity.push_back(variable(i));
  return substitute(e, identity);
}

MultiPoly Tower::substitute(const Expression& e, std::span<const MultiPoly> assignments) const {
  MultiPoly total(size());
  for (const Product& prod : e) {
    MultiPoly acc = constant(field().one(), size());
    for (const Factor& factor : prod.factors) {
      if (const auto* var = std::get_if<unsigned>(&factor)) {
        if (*var < 1 || *var > assignments.size()) {
          throw InputError("variable t" + std::to_string(*var) + " has no assignment");
        }
        const MultiPoly& a = assignments[*var - 1];
        if (a.max_variable() > *var) {
          throw InputError("non-triangular assignment for t" + std::to_string(*var));
        }
        acc = mul(acc, a);
      } else {
        acc = mul_scalar_right(acc, std::get<FieldElement>(factor));
      }
    }
    total = add(total, acc);
  }
  return total;
}

std::pair<MultiPoly, MultiPoly> Tower::right_divmod(unsigned level, const MultiPoly& f,
                                                    const MultiPoly& g) const {
  if (level < 1 || level > size()) throw InputError("level out of range");
  const MultiPoly a = f.lifted(level), b = g.lifted(level);
  if (b.is_zero()) throw InputError("division by zero");
  const auto lead = as_constant(b.coeffs().back());
  if (!lead || lead->is_zero()) throw InputError("divisor's leading coefficient must be a nonzero constant");
  const std::size_t e = b.top_degree();

  std::vector<FieldElement> lead_shift{*lead};  // sigma_level^s(lead)
  MultiPoly quotient(level);
  MultiPoly rem = a;
  while (!rem.is_zero() && rem.top_degree() >= e) {
    const std::size_t d = rem.top_degree();
    const std::size_t s = d - e;
    while (lead_shift.size() <= s) lead_shift.push_back(sigma_on_field(level, lead_shift.back()));
    std::vector<MultiPoly> tc(s + 1, MultiPoly(level - 1));
    tc[s] = mul_scalar_right(rem.coeffs().back(), field().inv(lead_shift[s]));
    const MultiPoly term = MultiPoly::from_coeffs(level, std::move(tc));
    quotient = add(quotient, term);
    rem = sub(rem, mul(term, b));
    if (!rem.is_zero() && rem.top_degree() >= d) throw InputError("right division did not reduce the degree");
  }
  return {quotient, rem};
}

void Tower::check_point(const Point& p) const {
  if (p.coords.size() != size()) {
    throw InputError("point has " + std::to_string(p.coords.size()) + " coordinates, tower has " +
                     std::to_string(size()) + " variables");
  }
  for (FieldElement c : p.coords) {
    if (!field().contains(c)) throw InputError("point coordinate not in field");
  }
}

FieldElement Tower::eval_level(const MultiPoly& f, const Point& p) const {
  const unsigned level = f.level();
  if (level == 0) return f.constant_value();
  const FieldElement a = p.coords[level - 1];
  MultiPoly rem(level - 1);
  FieldElement norm = field().one();  // N_k(a)
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) norm = field().add(field().mul(sigma_on_field(level, norm), a), delta_on_field(level, norm));
    if (!f.coeffs()[k].is_zero()) rem = add(rem, mul_scalar_right(f.coeffs()[k], norm));
  }
  return eval_level(rem, p);
}

FieldElement Tower::eval_normal(const MultiPoly& f, const Point& p) const {
  check_point(p);
  if (f.level() > size()) throw InputError("polynomial level exceeds the tower");
  return eval_level(f, p);
}

FieldElement Tower::eval_by_division(const MultiPoly& f, const Point& p) const {
  check_point(p);
  MultiPoly cur = f;
  while (cur.level() > 0) {
    const unsigned level = cur.level();
    const MultiPoly divisor = MultiPoly::from_coeffs(
        level, {constant(field().neg(p.coords[level - 1]), level - 1), constant(field().one(), level - 1)});
    const MultiPoly rem = right_divmod(level, cur, divisor).second;
    cur = rem.coeff(0);
  }
  return cur.constant_value();
}

FieldElement Tower::eval_word(const Word& w, const Point& p) const {
  check_point(p);
  for (unsigned letter : w.letters) {
    if (letter < 1 || letter > size()) throw InputError("word letter t" + std::to_string(letter) + " out of range");
  }
  if (w.letters.empty()) return w.coefficient;
  if (w.coefficient.is_zero()) return field().zero();

  // w = m' t_j  ->  m' a_j, with a_j pushed left through the letters of m'
  struct Partial {
    FieldElement c;
    std::vector<unsigned> suffix;  // letters kept to the left of c, reversed
  };
  const unsigned j = w.letters.back();
  std::vector<Partial> partials{{p.coords[j - 1], {}}};
  for (std::size_t idx = w.letters.size() - 1; idx-- > 0;) {
    const unsigned letter = w.letters[idx];
    std::vector<Partial> next;
    for (const Partial& part : partials) {
      const FieldElement s = sigma_on_field(letter, part.c);
      const FieldElement d = delta_on_field(letter, part.c);
      if (!s.is_zero()) {
        Partial kept{s, part.suffix};
        kept.suffix.push_back(letter);
        next.push_back(std::move(kept));
      }
      if (!d.is_zero()) next.push_back(Partial{d, part.suffix});
    }
    partials = std::move(next);
  }
  FieldElement acc = field().zero();
  for (const Partial& part : partials) {
    Word shorter{field().mul(w.coefficient, part.c), {part.suffix.rbegin(), part.suffix.rend()}};
    acc = field().add(acc, eval_word(shorter, p));
  }
  return acc;
}

FieldElement Tower::eval_words(std::span<const Word> words, const Point& p) const {
  FieldElement acc = field().zero();
  for (const Word& w : words) acc = field().add(acc, eval_word(w, p));
  return acc;
}

bool Tower::good_point_test(const Point& p) const {
  check_point(p);
  for (unsigned j = 2; j <= size(); ++j) {
    for (unsigned i = 1; i < j; ++i) {
      const FieldElement lhs = eval_normal(mul(variable(j), variable(i)), p);
      const FieldElement ai = p.coords[i - 1], aj = p.coords[j - 1];
      const FieldElement rhs = field().add(field().mul(sigma_on_field(j, ai), aj), delta_on_field(j, ai));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool Tower::good_point_condition4(const Point& p) const {
  check_point(p);
  for (unsigned j = 2; j <= size(); ++j) {
    for (unsigned i = 1; i < j; ++i) {
      const MultiPoly factor = sub(variable(i), constant(p.coords[i - 1], i));
      if (!eval_normal(mul(variable(j), factor), p).is_zero()) return false;
    }
  }
  return true;
}

std::uint64_t Tower::point_count() const {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < size(); ++i) {
    if (count > (std::uint64_t{1} << 40) / field().q()) throw CapExceeded("point set too large");
    count *= field().q();
  }
  return count;
}

Point Tower::point(std::uint64_t index) const {
  Point p;
  p.coords.resize(size());
  for (unsigned i = size(); i-- > 0;) {
    p.coords[i] = FieldElement{static_cast<std::uint32_t>(index % field().q())};
    index /= field().q();
  }
  return p;
}

std::vector<Point> Tower::points() const {
  const std::uint64_t count = point_count();
  std::vector<Point> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(point(i));
  return out;
}

bool is_identically_zero_serial(const Tower& tower, const MultiPoly& f) {
  const std::uint64_t count = tower.point_count();
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!tower.eval_normal(f, tower.point(i)).is_zero()) return false;
  }
  return true;
}

bool is_identically_zero(const Tower& tower, const MultiPoly& f) {
  const auto count = static_cast<std::int64_t>(tower.point_count());
  bool nonzero = false;
#pragma omp parallel for schedule(static) reduction(|| : nonzero)
  for (std::int64_t i = 0; i < count; ++i) {
    if (!nonzero && !tower.eval_normal(f, tower.point(static_cast<std::uint64_t>(i))).is_zero()) nonzero = true;
  }
  return !nonzero;
}

}  // namespace orecalc
