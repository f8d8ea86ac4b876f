#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orecalc/galois.hpp"
#include "orecalc/multipoly.hpp"

namespace orecalc {

/// One level t_i of an iterated Ore extension.  sigma_i and delta_i are
/// given by their action on K and by the images of the lower variables;
/// both are extended structurally to R_{i-1}.
struct LevelSpec {
  std::string name;
  unsigned sigma_frobenius = 0;                 // sigma_i(x) = x^{p^s} on K
  std::optional<FieldElement> delta_inner;      // delta_i(x) = c x - sigma_i(x) c on K
  std::map<unsigned, MultiPoly> sigma_images;   // j -> sigma_i(t_j); default t_j
  std::map<unsigned, MultiPoly> delta_images;   // j -> delta_i(t_j); default 0
};

struct TowerSpec {
  Field field;
  std::vector<LevelSpec> levels;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Iterated Ore extension R = K[t_1; s_1, d_1] ... [t_n; s_n, d_n] over a
/// finite field.  Immutable; every operation is pure and re-entrant.
class Tower {
 public:
  /// Structural checks only (arity, images lying in R_{i-1}); the algebraic
  /// consistency conditions are reported by validate().
  explicit Tower(TowerSpec spec);

  const TowerSpec& spec() const { return spec_; }
  const Field& field() const { return spec_.field; }
  unsigned size() const { return static_cast<unsigned>(spec_.levels.size()); }
  const std::string& name(unsigned i) const { return spec_.levels.at(i - 1).name; }
  std::optional<unsigned> index_of(std::string_view name) const;

  FieldElement sigma_on_field(unsigned i, FieldElement c) const;
  FieldElement delta_on_field(unsigned i, FieldElement c) const;

  MultiPoly zero(unsigned level) const { return MultiPoly(level); }
  MultiPoly constant(FieldElement c, unsigned level = 0) const;
  /// t_i as an element of R_i.
  MultiPoly variable(unsigned i) const;
  /// c * t_1^{l_1} ... t_k^{l_k} in R_k, k = exponents.size().
  MultiPoly monomial(FieldElement c, const std::vector<unsigned>& exponents) const;
  MultiPoly from_terms(unsigned level, const std::vector<Term>& terms) const;

  MultiPoly add(const MultiPoly& f, const MultiPoly& g) const;
  MultiPoly neg(const MultiPoly& f) const;
  MultiPoly sub(const MultiPoly& f, const MultiPoly& g) const;
  /// c * f
  MultiPoly scale(FieldElement c, const MultiPoly& f) const;
  /// f * c
  MultiPoly mul_scalar_right(const MultiPoly& f, FieldElement c) const;
  MultiPoly mul(const MultiPoly& f, const MultiPoly& g) const;
  MultiPoly pow(const MultiPoly& f, unsigned k) const;
  /// t_i * f for f in R_i: each r t_i^k becomes sigma_i(r) t_i^{k+1} + delta_i(r) t_i^k.
  MultiPoly mul_variable_left(unsigned i, const MultiPoly& f) const;

  /// sigma_i on R_{i-1}; result in R_{i-1}.
  MultiPoly sigma_apply(unsigned i, const MultiPoly& f) const;
  /// delta_i on R_{i-1}; result in R_{i-1}.
  MultiPoly delta_apply(unsigned i, const MultiPoly& f) const;

  ValidationReport validate() const;

  MultiPoly normalize(const Word& w) const;
  MultiPoly normalize(const Expression& e) const;
  /// Replaces variable i by assignments[i-1] and multiplies out in written
  /// order.  assignments[i-1] may only involve t_1..t_i.
  MultiPoly substitute(const Expression& e, std::span<const MultiPoly> assignments) const;

  /// f = q g + r in R_{level-1}[t_level] with deg_{t_level} r < deg g.
  /// g's leading coefficient must be a nonzero constant of K.
  std::pair<MultiPoly, MultiPoly> right_divmod(unsigned level, const MultiPoly& f,
                                               const MultiPoly& g) const;

  /// Representative of f modulo I_n(P): at level i the remainder of the
  /// right division by t_i - a_i is sum_k r_k N_k(a_i).
  FieldElement eval_normal(const MultiPoly& f, const Point& p) const;
  /// Same value by explicit right division by t_n - a_n, ..., t_1 - a_1.
  FieldElement eval_by_division(const MultiPoly& f, const Point& p) const;

  /// Recursive word rule: peel the rightmost letter t_j, push a_j leftwards
  /// through the remaining letters with sigma and delta on K, recurse.  No
  /// reordering of letters takes place.
  FieldElement eval_word(const Word& w, const Point& p) const;
  FieldElement eval_words(std::span<const Word> words, const Point& p) const;

  /// (t_j t_i)(P) = sigma_j(a_i) a_j + delta_j(a_i) for all i < j.
  bool good_point_test(const Point& p) const;
  /// t_j (t_i - a_i) lies in I_n(P) for all i < j.
  bool good_point_condition4(const Point& p) const;

  std::uint64_t point_count() const;
  /// Lexicographic order of K^n, last coordinate varying fastest.
  Point point(std::uint64_t index) const;
  std::vector<Point> points() const;

 private:
  void check_point(const Point& p) const;
  FieldElement eval_level(const MultiPoly& f, const Point& p) const;
  MultiPoly binary_mul(const MultiPoly& f, const MultiPoly& g) const;
  std::vector<FieldElement> field_generators() const;

  TowerSpec spec_;
};

/// True iff f evaluates to zero at every point of K^n (OpenMP point sweep).
bool is_identically_zero(const Tower& tower, const MultiPoly& f);
/// Serial reference of the same sweep.
bool is_identically_zero_serial(const Tower& tower, const MultiPoly& f);

}  // namespace orecalc
