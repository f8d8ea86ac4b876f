#include "orecalc/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "orecalc/error.hpp"

namespace orecalc {

MultiPoly MultiPoly::constant(FieldElement c, unsigned level) {
  MultiPoly out(0);
  out.constant_ = c;
  return out.lifted(level);
}

MultiPoly MultiPoly::from_coeffs(unsigned level, std::vector<MultiPoly> coeffs) {
  if (level == 0) throw InputError("level-0 elements have no coefficients");
  for (auto& c : coeffs) {
    if (c.level() >= level) throw InputError("coefficient level must be below the polynomial level");
    c = c.lifted(level - 1);
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  MultiPoly out(level);
  out.coeffs_ = std::move(coeffs);
  return out;
}

MultiPoly MultiPoly::coeff(std::size_t k) const {
  if (level_ == 0) throw InputError("level-0 elements have no coefficients");
  return k < coeffs_.size() ? coeffs_[k] : MultiPoly(level_ - 1);
}

MultiPoly MultiPoly::lifted(unsigned level) const {
  if (level < level_) throw InputError("cannot lift to a lower level");
  MultiPoly out = *this;
  while (out.level_ < level) {
    MultiPoly next(out.level_ + 1);
    if (!out.is_zero()) next.coeffs_.push_back(std::move(out));
    out = std::move(next);
  }
  return out;
}

MultiPoly MultiPoly::lowered(unsigned level) const {
  MultiPoly out = *this;
  while (out.level_ > level) {
    if (out.coeffs_.size() > 1) throw InputError("element involves a variable above the target level");
    out = out.coeffs_.empty() ? MultiPoly(out.level_ - 1) : MultiPoly(out.coeffs_.front());
  }
  return out;
}

void MultiPoly::collect(std::vector<unsigned>& prefix, std::vector<Term>& out) const {
  // prefix holds exponents of t_{level+1} .. t_n, innermost first
  if (level_ == 0) {
    if (!constant_.is_zero()) {
      std::vector<unsigned> exps(prefix.rbegin(), prefix.rend());
      out.push_back(Term{std::move(exps), constant_});
    }
    return;
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    prefix.push_back(static_cast<unsigned>(k));
    coeffs_[k].collect(prefix, out);
    prefix.pop_back();
  }
}

std::vector<Term> MultiPoly::terms() const {
  std::vector<unsigned> prefix;
  std::vector<Term> out;
  collect(prefix, out);
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    const unsigned da = std::accumulate(a.exponents.begin(), a.exponents.end(), 0u);
    const unsigned db = std::accumulate(b.exponents.begin(), b.exponents.end(), 0u);
    if (da != db) return da < db;
    return a.exponents < b.exponents;
  });
  return out;
}

unsigned MultiPoly::max_variable() const {
  unsigned best = 0;
  for (const Term& t : terms()) {
    for (unsigned i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] > 0) best = std::max(best, i + 1);
    }
  }
  return best;
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const Term& t : terms()) {
    best = std::max(best, std::accumulate(t.exponents.begin(), t.exponents.end(), 0u));
  }
  return best;
}

unsigned MultiPoly::degree_in(unsigned i) const {
  unsigned best = 0;
  for (const Term& t : terms()) {
    if (i >= 1 && i <= t.exponents.size()) best = std::max(best, t.exponents[i - 1]);
  }
  return best;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.level_ != b.level_) {
    const unsigned level = std::max(a.level_, b.level_);
    return a.lifted(level) == b.lifted(level);
  }
  if (a.level_ == 0) return a.constant_ == b.constant_;
  return a.coeffs_ == b.coeffs_;
}

Product to_product(const Word& w) {
  Product p;
  p.factors.emplace_back(w.coefficient);
  for (unsigned letter : w.letters) p.factors.emplace_back(letter);
  return p;
}

}  // namespace orecalc
