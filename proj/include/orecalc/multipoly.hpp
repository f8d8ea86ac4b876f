#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "orecalc/galois.hpp"

namespace orecalc {

/// Monomial of the flat view: coefficient * t_1^{l_1} ... t_n^{l_n}.
struct Term {
  std::vector<unsigned> exponents;
  FieldElement coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of R_level = K[t_1; s_1, d_1] ... [t_level; s_level, d_level] in
/// recursive normal form: a polynomial in t_level whose left coefficients
/// lie in R_{level-1}; R_0 = K.  No trailing zero coefficients are stored,
/// so the representation of every element is unique.
class MultiPoly {
 public:
  /// Zero of R_level.
  explicit MultiPoly(unsigned level = 0) : level_(level) {}

  static MultiPoly constant(FieldElement c, unsigned level = 0);
  /// Trims trailing zeros; every coefficient is lifted to level - 1.
  static MultiPoly from_coeffs(unsigned level, std::vector<MultiPoly> coeffs);

  unsigned level() const { return level_; }
  bool is_zero() const { return level_ == 0 ? constant_.is_zero() : coeffs_.empty(); }

  /// Value of a level-0 element.
  FieldElement constant_value() const { return constant_; }
  /// Coefficients of t_level^k (level > 0).
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  /// Coefficient of t_level^k, zero of R_{level-1} past the end.
  MultiPoly coeff(std::size_t k) const;
  /// Degree in t_level; 0 for zero and for level-0 elements.
  std::size_t top_degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  /// Same element viewed in R_level (level >= this->level()).
  MultiPoly lifted(unsigned level) const;

  /// Flat view, sorted by total degree then lexicographically on the
  /// exponent vectors.
  std::vector<Term> terms() const;
  /// Largest index i with t_i present (0 for constants).
  unsigned max_variable() const;
  /// Maximum of sum l_i over stored monomials; 0 for zero.
  unsigned total_degree() const;
  /// Exponent of t_i, maximized over stored monomials.
  unsigned degree_in(unsigned i) const;
  /// Same element in the smallest R_j that contains it.
  MultiPoly shrunk() const { return lowered(max_variable()); }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  MultiPoly lowered(unsigned level) const;
  void collect(std::vector<unsigned>& prefix, std::vector<Term>& out) const;

  unsigned level_ = 0;
  FieldElement constant_;
  std::vector<MultiPoly> coeffs_;
};

/// Unnormalized product: coefficient * t_{letters[0]} t_{letters[1]} ...
/// (1-based variable indices, any order, repetitions allowed).
struct Word {
  FieldElement coefficient{1};
  std::vector<unsigned> letters;

  unsigned degree() const { return static_cast<unsigned>(letters.size()); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// A formal product of variables and field constants in written order.
using Factor = std::variant<unsigned, FieldElement>;
struct Product {
  std::vector<Factor> factors;
};
/// A formal sum of products.
using Expression = std::vector<Product>;

Product to_product(const Word& w);

struct Point {
  std::vector<FieldElement> coords;
  friend bool operator==(const Point&, const Point&) = default;
};

}  // namespace orecalc
