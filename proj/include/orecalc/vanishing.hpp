#pragma once

#include <span>
#include <string>
#include <vector>

#include "orecalc/tower.hpp"

namespace orecalc {

/// Monic G_i(t_i) of minimal degree with coefficients in K that vanishes at
/// every point of K^n.
struct VanishingGenerator {
  unsigned level = 0;
  std::vector<FieldElement> coeffs;  // ascending, coeffs.back() == 1
  bool closed_form = false;

  unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
  /// G_i as an element of R_i.
  MultiPoly poly() const;
};

/// With use_closed_forms the Frobenius twist (delta = 0) gives
/// t^{(p-1)m+1} - t and the untwisted level gives t^q - t; otherwise, or
/// for any other level, monic polynomials of increasing degree are solved
/// for against the whole point set.  Throws CapExceeded past degree q*n.
VanishingGenerator vanishing_gen(const Tower& tower, unsigned level, bool use_closed_forms = true);
std::vector<VanishingGenerator> vanishing_gens(const Tower& tower, bool use_closed_forms = true);

/// Right remainder of f by G_n in t_n, then of every coefficient by
/// G_{n-1} in t_{n-1}, down to G_1.  The result has deg_{t_i} < deg G_i.
MultiPoly reduce_mod_vanishing(const Tower& tower, std::span<const VanishingGenerator> gens,
                               const MultiPoly& f);

/// `t^4 - t`, `Y2^4 - Y2`, ... using the level's variable name.
std::string format_vanishing(const Tower& tower, const VanishingGenerator& g);

}  // namespace orecalc
