#include "orecalc/conjugacy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "orecalc/linalg.hpp"

namespace orecalc {

namespace {

unsigned log_p(std::size_t n, std::uint32_t p) {
  unsigned e = 0;
  while (n > 1) {
    if (n % p != 0) throw std::logic_error("set size is not a power of p");
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

FieldElement conjugate(const FieldOreRing& ring, FieldElement a, FieldElement x) {
  const FieldCoeffs& c = ring.coefficients();
  const Field& f = c.field();
  if (x.is_zero()) throw InputError("conjugation by zero");
  const FieldElement xinv = f.inv(x);
  return f.add(f.mul(f.mul(c.sigma(x), a), xinv), f.mul(c.delta(x), xinv));
}

std::vector<FieldElement> conjugacy_class(const FieldOreRing& ring, FieldElement a) {
  std::set<FieldElement> members;
  for (FieldElement x : ring.coefficients().field().enumerate()) {
    if (!x.is_zero()) members.insert(conjugate(ring, a, x));
  }
  return {members.begin(), members.end()};
}

std::vector<std::vector<FieldElement>> conjugacy_classes(const FieldOreRing& ring) {
  const Field& f = ring.coefficients().field();
  std::vector<bool> seen(f.q(), false);
  std::vector<std::vector<FieldElement>> classes;
  for (FieldElement a : f.enumerate()) {
    if (seen[a.code()]) continue;
    auto cls = conjugacy_class(ring, a);
    for (FieldElement b : cls) seen[b.code()] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<FieldElement> centralizer(const FieldOreRing& ring, FieldElement a) {
  const Field& f = ring.coefficients().field();
  std::vector<FieldElement> out{f.zero()};
  for (FieldElement x : f.enumerate()) {
    if (!x.is_zero() && conjugate(ring, a, x) == a) out.push_back(x);
  }
  // closed under + and *, contains 1
  const std::set<FieldElement> members(out.begin(), out.end());
  bool subfield = members.count(f.one()) == 1;
  for (FieldElement x : out) {
    for (FieldElement y : out) {
      if (!members.count(f.add(x, y)) || !members.count(f.mul(x, y))) subfield = false;
    }
  }
  if (!subfield) throw std::logic_error("centralizer is not a subfield");
  return out;
}

FieldElement pseudo_linear_apply(const FieldOreRing& ring, FieldElement a, FieldElement x) {
  const FieldCoeffs& c = ring.coefficients();
  return c.add(c.mul(c.sigma(x), a), c.delta(x));
}

FieldElement operator_eval(const FieldOreRing& ring, const FieldSkewPoly& f, FieldElement a,
                           FieldElement x) {
  const FieldCoeffs& c = ring.coefficients();
  FieldElement acc = c.zero();
  FieldElement power = x;  // T_a^i(x)
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i > 0) power = pseudo_linear_apply(ring, a, power);
    acc = c.add(acc, c.mul(f.coeffs[i], power));
  }
  return acc;
}

FieldSkewPoly min_vanishing_poly(const FieldOreRing& ring, std::span<const FieldElement> points) {
  if (points.empty()) throw InputError("vanishing polynomial of an empty set");
  const FieldCoeffs& c = ring.coefficients();
  std::vector<FieldElement> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  FieldSkewPoly h = ring.one();
  for (FieldElement a : sorted) {
    if (!c.field().contains(a)) throw InputError("point not in field");
    const FieldElement value = ring.eval(h, a);
    if (value.is_zero()) continue;
    // (t - a^{h(a)}) h vanishes at a by the product rule
    const FieldSkewPoly factor = ring.make({c.neg(conjugate(ring, a, value)), c.one()});
    h = ring.mul(factor, h);
  }
  return h;
}

GordonMotzkinReport gordon_motzkin_report(const FieldOreRing& ring, const FieldSkewPoly& f) {
  if (f.is_zero()) throw InputError("Gordon-Motzkin report of the zero polynomial");
  const Field& field = ring.coefficients().field();
  const Field prime = Field::make(field.p(), 1);
  const unsigned m = field.m();

  GordonMotzkinReport report;
  report.degree = f.degree().value();
  for (const auto& cls : conjugacy_classes(ring)) {
    const FieldElement a = cls.front();
    // f(T_a) is F_p-linear; row j is the image of the basis vector x^j.
    Matrix map(m, m);
    std::uint32_t basis_code = 1;
    for (unsigned j = 0; j < m; ++j) {
      const auto image = field.digits(operator_eval(ring, f, a, FieldElement{basis_code}));
      for (unsigned k = 0; k < m; ++k) map.at(j, k) = FieldElement{image[k]};
      basis_code *= field.p();
    }
    const unsigned kernel_prime = m - static_cast<unsigned>(rank(prime, map));
    if (kernel_prime == 0) continue;

    GordonMotzkinReport::ClassEntry entry;
    entry.representative = a;
    entry.class_size = cls.size();
    entry.kernel_dim_prime = kernel_prime;
    entry.centralizer_dim_prime = log_p(centralizer(ring, a).size(), field.p());
    if (entry.kernel_dim_prime % entry.centralizer_dim_prime != 0) {
      throw std::logic_error("kernel dimension is not a multiple of the centralizer degree");
    }
    entry.kernel_dim = entry.kernel_dim_prime / entry.centralizer_dim_prime;
    report.dimension_sum += entry.kernel_dim;
    report.classes_with_roots.push_back(entry);
  }
  if (!report.bounds_hold()) throw std::logic_error("Gordon-Motzkin bound violated");
  return report;
}

bool invariance_check(const FieldOreRing& ring, const FieldSkewPoly& f) {
  const FieldCoeffs& c = ring.coefficients();
  const FieldElement g = c.field().multiplicative_generator();
  const auto lhs = ring.mul(f, ring.constant(g));
  const auto rhs = ring.mul(ring.constant(c.sigma(g)), f);
  if (lhs != rhs) return false;
  return ring.mul(f, ring.t()) == ring.mul(ring.t(), f);
}

}  // namespace orecalc
