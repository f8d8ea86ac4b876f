#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orecalc/coefficient_ring.hpp"
#include "orecalc/error.hpp"

namespace orecalc {

/// Polynomial degree with a distinguished value for the zero polynomial,
/// so that deg(fg) = deg f + deg g holds without special cases.
class Degree {
 public:
  static constexpr Degree neg_infinity() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : value_(d), finite_(true) {}

  constexpr bool is_neg_infinity() const { return !finite_; }
  std::size_t value() const {
    if (!finite_) throw InputError("degree of the zero polynomial has no integer value");
    return value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr auto operator<=>(Degree a, Degree b) {
    if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() = default;
  std::size_t value_ = 0;
  bool finite_ = false;
};

/// Element of C[t; sigma, delta]: coeffs[i] is the left coefficient of t^i.
/// The highest stored coefficient is nonzero; empty means zero.
template <typename T>
struct SkewPoly {
  std::vector<T> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  Degree degree() const { return coeffs.empty() ? Degree::neg_infinity() : Degree(coeffs.size() - 1); }
  const T& leading() const { return coeffs.back(); }

  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;
};

template <CoefficientRing C>
class OreRing;

/// N_0(a) = 1, N_{i+1}(a) = sigma(N_i(a)) a + delta(N_i(a)), extended on demand.
template <CoefficientRing C>
class NormSequence {
 public:
  using Elem = typename C::value_type;

  NormSequence(const C& coeffs, Elem a) : coeffs_(&coeffs), a_(std::move(a)) {
    values_.push_back(coeffs_->one());
  }

  const Elem& operator[](std::size_t i) {
    while (values_.size() <= i) {
      const Elem& last = values_.back();
      values_.push_back(coeffs_->add(coeffs_->mul(coeffs_->sigma(last), a_), coeffs_->delta(last)));
    }
    return values_[i];
  }

 private:
  const C* coeffs_;
  Elem a_;
  std::vector<Elem> values_;
};

/// The skew polynomial ring C[t; sigma, delta] with multiplication rule
/// t c = sigma(c) t + delta(c).
template <CoefficientRing C>
class OreRing {
 public:
  using Elem = typename C::value_type;
  using Poly = SkewPoly<Elem>;

  explicit OreRing(C coeffs) : c_(std::move(coeffs)) {}

  const C& coefficients() const { return c_; }

  Poly make(std::vector<Elem> coeffs) const {
    while (!coeffs.empty() && c_.is_zero(coeffs.back())) coeffs.pop_back();
    return Poly{std::move(coeffs)};
  }
  Poly zero() const { return {}; }
  Poly one() const { return make({c_.one()}); }
  Poly constant(Elem a) const { return make({std::move(a)}); }
  Poly t() const { return monomial(c_.one(), 1); }
  Poly monomial(Elem a, std::size_t k) const {
    std::vector<Elem> v(k + 1, c_.zero());
    v[k] = std::move(a);
    return make(std::move(v));
  }

  Poly add(const Poly& f, const Poly& g) const {
    std::vector<Elem> r(std::max(f.coeffs.size(), g.coeffs.size()), c_.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) r[i] = f.coeffs[i];
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) r[i] = c_.add(r[i], g.coeffs[i]);
    return make(std::move(r));
  }
  Poly neg(const Poly& f) const {
    std::vector<Elem> r;
    r.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) r.push_back(c_.neg(c));
    return make(std::move(r));
  }
  Poly sub(const Poly& f, const Poly& g) const { return add(f, neg(g)); }

  /// a * f
  Poly scale(const Elem& a, const Poly& f) const {
    std::vector<Elem> r;
    r.reserve(f.coeffs.size());
    for (const auto& c : f.coeffs) r.push_back(c_.mul(a, c));
    return make(std::move(r));
  }

  /// t * f: each c t^i becomes sigma(c) t^{i+1} + delta(c) t^i.
  Poly mul_t(const Poly& f) const {
    if (f.is_zero()) return f;
    std::vector<Elem> r(f.coeffs.size() + 1, c_.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      r[i + 1] = c_.add(r[i + 1], c_.sigma(f.coeffs[i]));
      r[i] = c_.add(r[i], c_.delta(f.coeffs[i]));
    }
    return make(std::move(r));
  }

  Poly mul(const Poly& f, const Poly& g) const {
    Poly result;
    Poly shifted = g;  // t^i g
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      if (i > 0) shifted = mul_t(shifted);
      if (!c_.is_zero(f.coeffs[i])) result = add(result, scale(f.coeffs[i], shifted));
    }
    return result;
  }

  Poly pow(const Poly& f, std::size_t k) const {
    Poly r = one();
    for (std::size_t i = 0; i < k; ++i) r = mul(r, f);
    return r;
  }

  /// f = q g + r with deg r < deg g.  The leading coefficient b of g must
  /// satisfy: sigma^s(b) is invertible for every shift s used.
  std::pair<Poly, Poly> right_divmod(const Poly& f, const Poly& g) const
    requires InvertibleCoefficients<C>
  {
    if (g.is_zero()) throw InputError("division by the zero polynomial");
    const std::size_t e = g.coeffs.size() - 1;
    Poly quotient;
    Poly rem = f;
    std::vector<Elem> lead_shift{g.leading()};  // sigma^s(lead g)
    while (!rem.is_zero() && rem.coeffs.size() - 1 >= e) {
      const std::size_t s = rem.coeffs.size() - 1 - e;
      while (lead_shift.size() <= s) lead_shift.push_back(c_.sigma(lead_shift.back()));
      if (!c_.is_invertible(lead_shift[s])) {
        throw InputError("leading coefficient of the divisor is not invertible");
      }
      const Poly term = monomial(c_.mul(rem.leading(), c_.inv(lead_shift[s])), s);
      const std::size_t before = rem.coeffs.size();
      quotient = add(quotient, term);
      rem = sub(rem, mul(term, g));
      if (rem.coeffs.size() >= before) {
        throw InputError("right division did not reduce the degree");
      }
    }
    return {std::move(quotient), std::move(rem)};
  }

  std::vector<Elem> norm_sequence(const Elem& a, std::size_t k) const {
    NormSequence<C> n(c_, a);
    std::vector<Elem> out;
    out.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) out.push_back(n[i]);
    return out;
  }

  /// Right evaluation f(a) = sum_i b_i N_i(a), the unique constant with
  /// f - f(a) in R (t - a).
  Elem eval(const Poly& f, const Elem& a) const {
    NormSequence<C> n(c_, a);
    Elem acc = c_.zero();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      if (!c_.is_zero(f.coeffs[i])) acc = c_.add(acc, c_.mul(f.coeffs[i], n[i]));
    }
    return acc;
  }

 private:
  C c_;
};

using FieldOreRing = OreRing<FieldCoeffs>;
using FieldSkewPoly = SkewPoly<FieldElement>;
using WeylRing = OreRing<PrimePolyCoeffs>;
using WeylPoly = SkewPoly<PrimePoly>;

/// `c0 + c1*t + c2*t^2 + ...` with element codes; zero prints as `0`.
std::string format_poly(const FieldSkewPoly& f, std::string_view var = "t");
/// `c0,c1,...,cd`
std::string format_poly_csv(const FieldSkewPoly& f);
/// Accepts the `+`-joined text form (terms `c`, `c*t`, `c*t^k`, `t^k`, in
/// any order, repeated powers summed) or the CSV form.
FieldSkewPoly parse_poly(const FieldOreRing& ring, std::string_view text, std::string_view var = "t");

}  // namespace orecalc
