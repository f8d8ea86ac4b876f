#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orecalc/skewpoly.hpp"

// (sigma, delta)-conjugacy theory over a finite coefficient field.

namespace orecalc {

/// a^x = sigma(x) a x^{-1} + delta(x) x^{-1}; throws InputError when x = 0.
FieldElement conjugate(const FieldOreRing& ring, FieldElement a, FieldElement x);

/// Delta(a) = { a^x : x != 0 }, sorted by code.
std::vector<FieldElement> conjugacy_class(const FieldOreRing& ring, FieldElement a);

/// Partition of the field into conjugacy classes, ordered by smallest member.
std::vector<std::vector<FieldElement>> conjugacy_classes(const FieldOreRing& ring);

/// C(a) = { x != 0 : a^x = a } together with 0, sorted by code.  Checked to
/// be a subfield; a failure there is a logic error.
std::vector<FieldElement> centralizer(const FieldOreRing& ring, FieldElement a);

/// T_a(x) = sigma(x) a + delta(x)
FieldElement pseudo_linear_apply(const FieldOreRing& ring, FieldElement a, FieldElement x);

/// f(T_a)(x) = sum_i b_i T_a^i(x)
FieldElement operator_eval(const FieldOreRing& ring, const FieldSkewPoly& f, FieldElement a,
                           FieldElement x);

/// Monic least left common multiple of { t - a : a in points }.  Points are
/// processed in increasing code order: h <- (t - a^{h(a)}) h whenever
/// h(a) != 0.  Throws InputError on an empty set.
FieldSkewPoly min_vanishing_poly(const FieldOreRing& ring, std::span<const FieldElement> points);

struct GordonMotzkinReport {
  struct ClassEntry {
    FieldElement representative;       // smallest member of the class
    std::size_t class_size = 0;
    unsigned kernel_dim_prime = 0;     // dim over F_p of ker f(T_a)
    unsigned centralizer_dim_prime = 0;
    unsigned kernel_dim = 0;           // dim over C(a)
  };
  std::vector<ClassEntry> classes_with_roots;
  std::size_t degree = 0;
  unsigned dimension_sum = 0;

  bool bounds_hold() const {
    return classes_with_roots.size() <= degree && dimension_sum <= degree;
  }
};

/// For each conjugacy class, the kernel of f(T_a) at its representative; a
/// class contains a root of f iff that kernel is nonzero.  Throws
/// InputError for f = 0 and std::logic_error if either bound fails.
GordonMotzkinReport gordon_motzkin_report(const FieldOreRing& ring, const FieldSkewPoly& f);

/// f x = sigma(x) f for a multiplicative generator x of the field, and
/// f t = t f.
bool invariance_check(const FieldOreRing& ring, const FieldSkewPoly& f);

}  // namespace orecalc
