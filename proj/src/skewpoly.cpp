#include "orecalc/skewpoly.hpp"

#include <charconv>
#include <sstream>

namespace orecalc {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("bad integer '" + std::string(s) + "' in polynomial");
  }
  return v;
}

}  // namespace

std::string format_poly(const FieldSkewPoly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << f.coeffs[i].code();
    if (i >= 1) os << '*' << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string format_poly_csv(const FieldSkewPoly& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i) os << ',';
    os << f.coeffs[i].code();
  }
  return os.str();
}

FieldSkewPoly parse_poly(const FieldOreRing& ring, std::string_view text, std::string_view var) {
  const Field& field = ring.coefficients().field();
  text = strip(text);
  if (text.empty()) throw InputError("empty polynomial");

  std::vector<FieldElement> coeffs;
  auto accumulate = [&](std::size_t k, FieldElement c) {
    if (coeffs.size() <= k) coeffs.resize(k + 1, field.zero());
    coeffs[k] = field.add(coeffs[k], c);
  };

  if (text.find(var) == std::string_view::npos && text.find('+') == std::string_view::npos) {
    // CSV (a single constant is both forms at once)
    std::size_t k = 0;
    while (true) {
      const auto comma = text.find(',');
      accumulate(k++, field.element(to_u64(strip(text.substr(0, comma)))));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return ring.make(std::move(coeffs));
  }

  while (true) {
    const auto plus = text.find('+');
    std::string_view term = strip(text.substr(0, plus));
    if (term.empty()) throw InputError("empty term in polynomial");
    FieldElement c = field.one();
    std::size_t k = 0;
    const auto star = term.find('*');
    std::string_view mono = term;
    if (star != std::string_view::npos) {
      c = field.element(to_u64(strip(term.substr(0, star))));
      mono = strip(term.substr(star + 1));
    } else if (term.substr(0, var.size()) != var) {
      c = field.element(to_u64(term));
      mono = {};
    }
    if (!mono.empty()) {
      if (mono.substr(0, var.size()) != var) {
        throw InputError("unexpected factor '" + std::string(mono) + "' in polynomial");
      }
      mono.remove_prefix(var.size());
      k = 1;
      if (!mono.empty()) {
        if (mono.front() != '^') throw InputError("expected '^' after variable");
        k = static_cast<std::size_t>(to_u64(mono.substr(1)));
      }
    }
    accumulate(k, c);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return ring.make(std::move(coeffs));
}

}  // namespace orecalc
