#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orecalc {

/// An element of F_{p^m}, stored as its integer code: the little-endian
/// base-p digits are the coordinates in the power basis 1, x, ..., x^{m-1}.
/// Elements do not know their field; every operation takes the Field.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t code_ = 0;
};

/// Dense polynomial over F_p, index i holding the coefficient of x^i.
using PrimePoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// True iff `f` (monic, degree >= 1, coefficients reduced mod p) is
/// irreducible over F_p.  Trial division by monic polynomials of degree
/// at most deg(f)/2.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);

/// Finite field F_{p^m} in a polynomial basis.  Value-semantic and
/// immutable; copies share the arithmetic tables.
class Field {
 public:
  /// Largest supported field order (arithmetic is table driven).
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Validates p and the modulus.  Without a modulus the smallest monic
  /// irreducible of degree m is used, where polynomials are compared by
  /// the integer sum_i c_i p^i over their non-leading coefficients.
  static Field make(std::uint32_t p, unsigned m,
                    std::optional<PrimePoly> modulus = std::nullopt);

  /// Parses `p^m[:c0,c1,...,cm]`; plain `p` means m = 1.
  static Field parse(std::string_view descriptor);

  /// Canonical descriptor, always with the modulus tail.
  std::string descriptor() const;

  std::uint32_t p() const;
  unsigned m() const;
  std::uint32_t q() const;
  const PrimePoly& modulus() const;

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  /// Element with the given code; throws InputError when code >= q.
  FieldElement element(std::uint64_t code) const;
  bool contains(FieldElement x) const { return x.code() < q(); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws InputError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// x -> x^{p^s}; s is taken modulo m.
  FieldElement frobenius(FieldElement x, unsigned s) const;

  /// Schoolbook polynomial product reduced by the modulus.  Independent of
  /// the log tables; used to build them and as a test oracle.
  FieldElement mul_reference(FieldElement a, FieldElement b) const;

  std::vector<std::uint32_t> digits(FieldElement x) const;
  FieldElement from_digits(const std::vector<std::uint32_t>& digits) const;

  /// All q elements in code order 0, 1, ..., q-1.
  std::vector<FieldElement> enumerate() const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t order(FieldElement x) const;
  /// Smallest-code element of order q-1.
  FieldElement multiplicative_generator() const;

  /// The prime subfield F_p (codes 0..p-1).
  bool in_prime_field(FieldElement x) const { return x.code() < p(); }

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  void check(FieldElement x) const;

  std::shared_ptr<const Tables> t_;
};

}  // namespace orecalc
