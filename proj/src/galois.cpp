#include "orecalc/galois.hpp"

#include <charconv>
#include <sstream>

#include "orecalc/error.hpp"

namespace orecalc {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a modulo the monic b, over F_p.
PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InputError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Every monic divisor of degree d in [1, deg/2]: enumerate its
  // non-leading coefficients as base-p digits.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct Field::Tables {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint32_t q = 0;
  PrimePoly modulus;
  std::vector<std::uint32_t> pow_p;          // p^i, i <= m
  std::vector<std::uint32_t> exp;            // g^i, i in [0, 2(q-1))
  std::vector<std::uint32_t> log;            // log_g(x), x != 0
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> add;            // q*q when q <= 256, else empty
  std::uint32_t generator = 0;

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < m; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      r += ((da + db) % p) * pow_p[i];
      a /= p;
      b /= p;
    }
    return r;
  }

  std::uint32_t mul_schoolbook(std::uint32_t a, std::uint32_t b) const {
    PrimePoly pa(m, 0), pb(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    PrimePoly prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; j < m; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
      }
    }
    const PrimePoly r = poly_mod(std::move(prod), modulus, p);
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < r.size(); ++i) code += r[i] * pow_p[i];
    return code;
  }
};

Field Field::make(std::uint32_t p, unsigned m, std::optional<PrimePoly> modulus) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InputError("extension degree must be >= 1");
  const std::uint64_t q64 = ipow(p, m);
  if (q64 > kMaxOrder) {
    throw InputError("field order " + std::to_string(q64) + " exceeds supported maximum " +
                     std::to_string(kMaxOrder));
  }

  PrimePoly mod;
  if (modulus) {
    mod = *modulus;
    for (auto c : mod) {
      if (c >= p) throw InputError("modulus coefficient out of range [0, p)");
    }
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw InputError("modulus must be monic of degree " + std::to_string(m));
    }
    if (!is_irreducible(mod, p)) throw InputError("modulus is reducible over F_p");
  } else {
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g(m + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < m; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[m] = 1;
      if (is_irreducible(g, p)) {
        mod = std::move(g);
        break;
      }
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q64);
  t->modulus = mod;
  t->pow_p.resize(m + 1);
  for (unsigned i = 0; i <= m; ++i) t->pow_p[i] = static_cast<std::uint32_t>(ipow(p, i));

  const std::uint32_t q = t->q;
  t->neg.resize(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint32_t r = 0, y = x;
    for (unsigned i = 0; i < m; ++i) {
      r += ((p - y % p) % p) * t->pow_p[i];
      y /= p;
    }
    t->neg[x] = r;
  }
  if (q <= 256) {
    t->add.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) t->add[a * q + b] = t->add_digits(a, b);
    }
  }

  // Smallest generator of the multiplicative group, found with the
  // schoolbook product; the log/exp tables follow from it.
  t->log.assign(q, 0);
  t->exp.assign(2 * static_cast<std::size_t>(q - 1) + 1, 0);
  if (q == 2) {
    t->generator = 1;
    t->exp[0] = t->exp[1] = 1;
  } else {
    for (std::uint32_t g = 2; g < q; ++g) {
      std::uint32_t x = 1, ord = 0;
      do {
        x = t->mul_schoolbook(x, g);
        ++ord;
      } while (x != 1 && ord < q);
      if (ord == q - 1) {
        t->generator = g;
        break;
      }
    }
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      t->exp[i] = x;
      t->exp[i + q - 1] = x;
      t->log[x] = i;
      x = t->mul_schoolbook(x, t->generator);
    }
  }
  return Field(std::move(t));
}

Field Field::parse(std::string_view descriptor) {
  std::string_view head = descriptor;
  std::optional<PrimePoly> modulus;
  if (auto colon = descriptor.find(':'); colon != std::string_view::npos) {
    head = descriptor.substr(0, colon);
    std::string_view tail = descriptor.substr(colon + 1);
    PrimePoly mod;
    while (!tail.empty()) {
      auto comma = tail.find(',');
      mod.push_back(parse_uint(tail.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      tail.remove_prefix(comma + 1);
    }
    modulus = std::move(mod);
  }
  std::uint32_t p = 0;
  unsigned m = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_uint(head.substr(0, caret), "characteristic");
    m = parse_uint(head.substr(caret + 1), "extension degree");
  } else {
    p = parse_uint(head, "characteristic");
  }
  return make(p, m, std::move(modulus));
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << p() << '^' << m() << ':';
  for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
    if (i) os << ',';
    os << t_->modulus[i];
  }
  return os.str();
}

std::uint32_t Field::p() const { return t_->p; }
unsigned Field::m() const { return t_->m; }
std::uint32_t Field::q() const { return t_->q; }
const PrimePoly& Field::modulus() const { return t_->modulus; }

FieldElement Field::element(std::uint64_t code) const {
  if (code >= q()) {
    throw InputError("element code " + std::to_string(code) + " not in field of order " +
                     std::to_string(q()));
  }
  return FieldElement{static_cast<std::uint32_t>(code)};
}

void Field::check(FieldElement x) const {
  if (x.code() >= t_->q) {
    throw InputError("operand code " + std::to_string(x.code()) + " does not belong to F_" +
                     std::to_string(t_->q));
  }
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (!t_->add.empty()) return FieldElement{t_->add[a.code() * t_->q + b.code()]};
  return FieldElement{t_->add_digits(a.code(), b.code())};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  return FieldElement{t_->neg[a.code()]};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.is_zero() || b.is_zero()) return zero();
  return FieldElement{t_->exp[t_->log[a.code()] + t_->log[b.code()]]};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.is_zero()) throw InputError("inverse of zero");
  const std::uint32_t n = t_->q - 1;
  return FieldElement{t_->exp[(n - t_->log[a.code()]) % n]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const std::uint64_t n = t_->q - 1;
  return FieldElement{t_->exp[(static_cast<std::uint64_t>(t_->log[a.code()]) * (e % n)) % n]};
}

FieldElement Field::frobenius(FieldElement x, unsigned s) const {
  return pow(x, ipow(t_->p, s % t_->m));
}

FieldElement Field::mul_reference(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return FieldElement{t_->mul_schoolbook(a.code(), b.code())};
}

std::vector<std::uint32_t> Field::digits(FieldElement x) const {
  check(x);
  std::vector<std::uint32_t> d(t_->m);
  std::uint32_t c = x.code();
  for (auto& v : d) {
    v = c % t_->p;
    c /= t_->p;
  }
  return d;
}

FieldElement Field::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() != t_->m) throw InputError("digit vector length must equal m");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= t_->p) throw InputError("digit out of range [0, p)");
    code += digits[i] * t_->pow_p[i];
  }
  return FieldElement{code};
}

std::vector<FieldElement> Field::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(t_->q);
  for (std::uint32_t c = 0; c < t_->q; ++c) out.emplace_back(c);
  return out;
}

std::uint32_t Field::order(FieldElement x) const {
  check(x);
  if (x.is_zero()) throw InputError("zero has no multiplicative order");
  std::uint32_t ord = 1;
  for (FieldElement y = x; y != one(); y = mul(y, x)) ++ord;
  return ord;
}

FieldElement Field::multiplicative_generator() const { return FieldElement{t_->generator}; }

bool operator==(const Field& a, const Field& b) {
  return a.t_ == b.t_ || (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
}

}  // namespace orecalc
