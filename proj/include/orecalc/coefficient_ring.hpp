#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "orecalc/galois.hpp"

namespace orecalc {

/// Coefficient ring C together with an endomorphism sigma and a
/// sigma-derivation delta, i.e. delta(ab) = sigma(a) delta(b) + delta(a) b.
template <typename R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a,
                                   const typename R::value_type& b) {
  typename R::value_type;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.add(a, b) } -> std::same_as<typename R::value_type>;
  { r.neg(a) } -> std::same_as<typename R::value_type>;
  { r.mul(a, b) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.sigma(a) } -> std::same_as<typename R::value_type>;
  { r.delta(a) } -> std::same_as<typename R::value_type>;
};

/// Coefficient rings that can test for and produce inverses.
template <typename R>
concept InvertibleCoefficients = CoefficientRing<R> && requires(const R& r,
                                                                const typename R::value_type& a) {
  { r.is_invertible(a) } -> std::same_as<bool>;
  { r.inv(a) } -> std::same_as<typename R::value_type>;
};

/// F_{p^m} with sigma = x -> x^{p^s} and delta either zero or the inner
/// derivation x -> c x - sigma(x) c.
class FieldCoeffs {
 public:
  using value_type = FieldElement;

  explicit FieldCoeffs(Field field, unsigned frobenius = 0,
                       std::optional<FieldElement> inner = std::nullopt);

  /// Parses `p^m[:mod] sigma=frob^s delta=0|inner:<code>`; the sigma and
  /// delta clauses are optional and default to the identity and zero.
  static FieldCoeffs parse(std::string_view descriptor);
  std::string descriptor() const;

  const Field& field() const { return field_; }
  unsigned frobenius_exponent() const { return frobenius_; }
  const std::optional<FieldElement>& inner_constant() const { return inner_; }

  FieldElement zero() const { return field_.zero(); }
  FieldElement one() const { return field_.one(); }
  FieldElement add(FieldElement a, FieldElement b) const { return field_.add(a, b); }
  FieldElement neg(FieldElement a) const { return field_.neg(a); }
  FieldElement mul(FieldElement a, FieldElement b) const { return field_.mul(a, b); }
  bool is_zero(FieldElement a) const { return a.is_zero(); }
  bool equal(FieldElement a, FieldElement b) const { return a == b; }
  FieldElement sigma(FieldElement a) const { return field_.frobenius(a, frobenius_); }
  FieldElement delta(FieldElement a) const;
  bool is_invertible(FieldElement a) const { return !a.is_zero(); }
  FieldElement inv(FieldElement a) const { return field_.inv(a); }

 private:
  Field field_;
  unsigned frobenius_;
  std::optional<FieldElement> inner_;
};

/// The commutative ring F_p[X] with sigma = id and delta = d/dX; the
/// coefficient ring of the Weyl algebra F_p[X][Y; id, d/dX].
class PrimePolyCoeffs {
 public:
  using value_type = PrimePoly;

  explicit PrimePolyCoeffs(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  /// The indeterminate X.
  PrimePoly x() const { return {0, 1}; }
  /// Normalizes coefficients into [0, p) and trims trailing zeros.
  PrimePoly make(PrimePoly f) const;

  PrimePoly zero() const { return {}; }
  PrimePoly one() const { return {1}; }
  PrimePoly add(const PrimePoly& a, const PrimePoly& b) const;
  PrimePoly neg(const PrimePoly& a) const;
  PrimePoly mul(const PrimePoly& a, const PrimePoly& b) const;
  bool is_zero(const PrimePoly& a) const { return a.empty(); }
  bool equal(const PrimePoly& a, const PrimePoly& b) const { return a == b; }
  PrimePoly sigma(const PrimePoly& a) const { return a; }
  PrimePoly delta(const PrimePoly& a) const;
  /// Units of F_p[X] are the nonzero constants.
  bool is_invertible(const PrimePoly& a) const { return a.size() == 1; }
  PrimePoly inv(const PrimePoly& a) const;

 private:
  std::uint32_t p_;
};

static_assert(InvertibleCoefficients<FieldCoeffs>);
static_assert(InvertibleCoefficients<PrimePolyCoeffs>);

}  // namespace orecalc
