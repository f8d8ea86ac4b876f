#include "orecalc/coefficient_ring.hpp"

#include <charconv>
#include <sstream>

#include "orecalc/error.hpp"

namespace orecalc {

FieldCoeffs::FieldCoeffs(Field field, unsigned frobenius, std::optional<FieldElement> inner)
    : field_(std::move(field)), frobenius_(frobenius % field_.m()), inner_(inner) {
  if (inner_ && !field_.contains(*inner_)) throw InputError("inner derivation constant not in field");
  if (inner_ && inner_->is_zero()) inner_.reset();
}

FieldElement FieldCoeffs::delta(FieldElement a) const {
  if (!inner_) return field_.zero();
  return field_.sub(field_.mul(*inner_, a), field_.mul(sigma(a), *inner_));
}

namespace {

std::uint32_t to_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

FieldCoeffs FieldCoeffs::parse(std::string_view descriptor) {
  std::istringstream in{std::string(descriptor)};
  std::string field_part;
  if (!(in >> field_part)) throw InputError("empty ring descriptor");
  Field field = Field::parse(field_part);
  unsigned s = 0;
  std::optional<FieldElement> inner;
  std::string clause;
  while (in >> clause) {
    if (clause.rfind("sigma=frob^", 0) == 0) {
      s = to_uint(std::string_view(clause).substr(11), "frobenius exponent");
    } else if (clause == "sigma=id") {
      s = 0;
    } else if (clause == "delta=0") {
      inner.reset();
    } else if (clause.rfind("delta=inner:", 0) == 0) {
      inner = field.element(to_uint(std::string_view(clause).substr(12), "inner constant"));
    } else {
      throw InputError("unknown ring clause '" + clause + "'");
    }
  }
  if (s >= field.m()) throw InputError("frobenius exponent must be < m");
  return FieldCoeffs(std::move(field), s, inner);
}

std::string FieldCoeffs::descriptor() const {
  std::ostringstream os;
  os << field_.descriptor() << " sigma=frob^" << frobenius_ << " delta=";
  if (inner_) {
    os << "inner:" << inner_->code();
  } else {
    os << '0';
  }
  return os.str();
}

PrimePolyCoeffs::PrimePolyCoeffs(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
}

PrimePoly PrimePolyCoeffs::make(PrimePoly f) const {
  for (auto& c : f) c %= p_;
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PrimePoly PrimePolyCoeffs::add(const PrimePoly& a, const PrimePoly& b) const {
  PrimePoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<std::uint32_t>((x + y) % p_);
  }
  return make(std::move(r));
}

PrimePoly PrimePolyCoeffs::neg(const PrimePoly& a) const {
  PrimePoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (p_ - a[i] % p_) % p_;
  return make(std::move(r));
}

PrimePoly PrimePolyCoeffs::mul(const PrimePoly& a, const PrimePoly& b) const {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
    }
  }
  return make(std::move(r));
}

PrimePoly PrimePolyCoeffs::delta(const PrimePoly& a) const {
  if (a.size() <= 1) return {};
  PrimePoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(i % p_) * a[i]) % p_);
  }
  return make(std::move(r));
}

PrimePoly PrimePolyCoeffs::inv(const PrimePoly& a) const {
  if (!is_invertible(a)) throw InputError("element of F_p[X] is not a unit");
  // a^{p-2} mod p
  std::uint64_t r = 1, b = a[0], e = p_ - 2;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return {static_cast<std::uint32_t>(r)};
}

}  // namespace orecalc
