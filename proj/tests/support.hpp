#pragma once

#include <random>
#include <vector>

#include "orecalc/tower.hpp"

namespace testing {

using namespace orecalc;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline FieldElement random_element(const Field& f) {
  return FieldElement{static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng()))};
}

inline FieldElement random_nonzero(const Field& f) {
  return FieldElement{static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(1, f.q() - 1)(rng()))};
}

/// Random element of R_level with degree at most max_deg in every variable.
inline MultiPoly random_poly(const Tower& t, unsigned level, unsigned max_deg, unsigned terms = 4) {
  std::vector<Term> ts;
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  for (unsigned k = 0; k < terms; ++k) {
    Term term;
    term.coefficient = random_element(t.field());
    for (unsigned i = 0; i < level; ++i) term.exponents.push_back(deg(rng()));
    ts.push_back(term);
  }
  return t.from_terms(level, ts);
}

inline Point random_point(const Tower& t) {
  Point p;
  for (unsigned i = 0; i < t.size(); ++i) p.coords.push_back(random_element(t.field()));
  return p;
}

inline FieldElement el(std::uint32_t code) { return FieldElement{code}; }

}  // namespace testing
