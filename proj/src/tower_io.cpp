#include "orecalc/tower_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "orecalc/error.hpp"
#include "text_util.hpp"

namespace orecalc {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) break;
    return {p, m};
  }
  throw InputError(std::to_string(q) + " is not a prime power");
}

Field field_of_order(std::uint64_t q) {
  const auto [p, m] = split_prime_power(q);
  return Field::make(p, m);
}

void parse_var_clause(LevelSpec& lv, const Field& field, const std::string& clause) {
  if (clause.rfind("sigma_K=frob^", 0) == 0) {
    lv.sigma_frobenius = static_cast<unsigned>(text::to_uint(std::string_view(clause).substr(13), "frobenius exponent"));
  } else if (clause == "sigma_K=id") {
    lv.sigma_frobenius = 0;
  } else if (clause == "delta_K=0") {
    lv.delta_inner.reset();
  } else if (clause.rfind("delta_K=inner:", 0) == 0) {
    lv.delta_inner = field.element(text::to_uint(std::string_view(clause).substr(14), "inner constant"));
  } else {
    throw InputError("unknown clause '" + clause + "'");
  }
}

std::string monomial_text(const Tower& tower, const std::vector<unsigned>& exps) {
  std::string out;
  for (unsigned i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += tower.name(i + 1);
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

/// Name or name^k; returns (index, power).
std::pair<unsigned, unsigned> parse_power(const Tower& tower, std::string_view tok) {
  const auto caret = tok.find('^');
  const std::string_view name = tok.substr(0, caret);
  const auto idx = tower.index_of(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  unsigned power = 1;
  if (caret != std::string_view::npos) {
    power = static_cast<unsigned>(text::to_uint(tok.substr(caret + 1), "exponent"));
  }
  return {*idx, power};
}

Term parse_compact_term(const Field& field, std::string_view tok) {
  const auto colon = tok.find(':');
  Term t;
  t.coefficient = field.element(text::to_uint(text::trim(tok.substr(0, colon)), "coefficient"));
  if (colon != std::string_view::npos) {
    for (const std::string& e : text::split(tok.substr(colon + 1), ',')) {
      t.exponents.push_back(static_cast<unsigned>(text::to_uint(e, "exponent")));
    }
  }
  return t;
}

MultiPoly compact_monomial(const Term& t) {
  MultiPoly out = MultiPoly::constant(t.coefficient, 0);
  for (unsigned i = 1; i <= t.exponents.size(); ++i) {
    std::vector<MultiPoly> coeffs(t.exponents[i - 1] + 1, MultiPoly(i - 1));
    coeffs.back() = out;
    out = MultiPoly::from_coeffs(i, std::move(coeffs));
  }
  return out;
}

MultiPoly add_plain(const Field& field, const MultiPoly& f, const MultiPoly& g) {
  const unsigned level = std::max(f.level(), g.level());
  if (level == 0) return MultiPoly::constant(field.add(f.constant_value(), g.constant_value()));
  const MultiPoly a = f.lifted(level), b = g.lifted(level);
  std::vector<MultiPoly> r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = add_plain(field, a.coeff(k), b.coeff(k));
  return MultiPoly::from_coeffs(level, std::move(r));
}

}  // namespace

MultiPoly parse_multipoly(const Field& field, std::string_view text, unsigned level) {
  MultiPoly out(level);
  for (const std::string& tok : text::split(text, '+')) {
    if (tok.empty()) throw InputError("empty term in '" + std::string(text) + "'");
    const Term t = parse_compact_term(field, tok);
    if (t.exponents.size() > level) {
      throw InputError("term '" + tok + "' has more exponents than level " + std::to_string(level));
    }
    out = add_plain(field, out, compact_monomial(t));
  }
  return out.lifted(level);
}

std::string format_multipoly_compact(const MultiPoly& f) {
  const auto terms = f.terms();
  if (terms.empty()) return "0";
  std::string out;
  for (const Term& t : terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(t.coefficient.code());
    auto exps = t.exponents;
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    if (exps.empty()) continue;
    out += ':';
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(exps[i]);
    }
  }
  return out;
}

std::string format_multipoly(const Tower& tower, const MultiPoly& f) {
  auto terms = f.terms();
  if (terms.empty()) return "0";
  std::reverse(terms.begin(), terms.end());
  std::string out;
  for (const Term& t : terms) {
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_text(tower, t.exponents);
    if (mono.empty()) {
      out += std::to_string(t.coefficient.code());
    } else if (t.coefficient == tower.field().one()) {
      out += mono;
    } else {
      out += std::to_string(t.coefficient.code()) + "*" + mono;
    }
  }
  return out;
}

TowerSpec parse_tower_spec(std::istream& in) {
  std::optional<Field> field;
  std::vector<LevelSpec> levels;
  std::vector<std::string> names;
  std::string line;
  unsigned lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("tower line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tokens = text::split_ws(line);
    if (tokens.empty()) continue;
    try {
      const std::string& key = tokens[0];
      if (key == "field") {
        if (field) fail("field given twice");
        if (tokens.size() != 2) fail("expected 'field p^m[:modulus]'");
        field = Field::parse(tokens[1]);
      } else if (key == "var") {
        if (!field) fail("'var' before 'field'");
        if (tokens.size() < 2) fail("missing variable name");
        if (!valid_name(tokens[1])) fail("bad variable name '" + tokens[1] + "'");
        LevelSpec lv;
        lv.name = tokens[1];
        for (std::size_t k = 2; k < tokens.size(); ++k) parse_var_clause(lv, *field, tokens[k]);
        levels.push_back(std::move(lv));
        names.push_back(tokens[1]);
      } else if (key == "sigma" || key == "delta") {
        if (levels.empty()) fail("'" + key + "' before any 'var'");
        const auto eq = line.find('=');
        if (tokens.size() < 4 || tokens[2] != "=" || eq == std::string::npos) {
          fail("expected '" + key + " <var> = <poly>'");
        }
        const auto it = std::find(names.begin(), names.end() - 1, tokens[1]);
        if (it == names.end() - 1) fail("'" + tokens[1] + "' is not a lower variable");
        const unsigned j = static_cast<unsigned>(it - names.begin()) + 1;
        const unsigned level = static_cast<unsigned>(levels.size()) - 1;
        MultiPoly image = parse_multipoly(*field, std::string_view(line).substr(eq + 1), level);
        auto& images = key == "sigma" ? levels.back().sigma_images : levels.back().delta_images;
        if (!images.emplace(j, std::move(image)).second) fail("image of '" + tokens[1] + "' given twice");
      } else {
        fail("unknown keyword '" + key + "'");
      }
    } catch (const InputError& e) {
      const std::string msg = e.what();
      if (msg.rfind("tower line", 0) == 0) throw;
      fail(msg);
    }
  }
  if (!field) throw InputError("tower file has no 'field' line");
  if (levels.empty()) throw InputError("tower file declares no variables");
  return TowerSpec{*field, std::move(levels)};
}

Tower load_tower(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tower file '" + path + "'");
  return Tower(parse_tower_spec(in));
}

std::string format_tower(const Tower& tower) {
  std::ostringstream os;
  os << "field " << tower.field().descriptor() << '\n';
  for (unsigned i = 1; i <= tower.size(); ++i) {
    const LevelSpec& lv = tower.spec().levels[i - 1];
    os << "var " << lv.name << " sigma_K=frob^" << lv.sigma_frobenius << " delta_K=";
    if (lv.delta_inner) {
      os << "inner:" << lv.delta_inner->code();
    } else {
      os << '0';
    }
    os << '\n';
    for (const auto& [j, img] : lv.sigma_images) {
      os << "sigma " << tower.name(j) << " = " << format_multipoly_compact(img) << '\n';
    }
    for (const auto& [j, img] : lv.delta_images) {
      os << "delta " << tower.name(j) << " = " << format_multipoly_compact(img) << '\n';
    }
  }
  return os.str();
}

Tower preset_tower(std::string_view name) {
  const std::string s(name);
  std::smatch m;
  auto named = [](std::string prefix, unsigned n) {
    std::vector<LevelSpec> levels(n);
    for (unsigned i = 0; i < n; ++i) levels[i].name = n == 1 && prefix == "t" ? "t" : prefix + std::to_string(i + 1);
    return levels;
  };
  if (std::regex_match(s, m, std::regex(R"(weyl-f(\d+))"))) {
    const Field field = field_of_order(text::to_uint(m[1].str(), "field order"));
    if (field.m() != 1) throw InputError("Weyl presets need a prime field");
    auto levels = named("t", 2);
    levels[1].delta_images.emplace(1, MultiPoly::constant(field.one(), 1));
    return Tower(TowerSpec{field, std::move(levels)});
  }
  if (std::regex_match(s, m, std::regex(R"(classical-f(\d+)-(\d+))"))) {
    const Field field = field_of_order(text::to_uint(m[1].str(), "field order"));
    const auto n = static_cast<unsigned>(text::to_uint(m[2].str(), "variable count"));
    return Tower(TowerSpec{field, named("t", n)});
  }
  if (std::regex_match(s, m, std::regex(R"(f(\d+)-frobenius-(\d+))"))) {
    const Field field = field_of_order(text::to_uint(m[1].str(), "field order"));
    const auto n = static_cast<unsigned>(text::to_uint(m[2].str(), "variable count"));
    auto levels = named("t", n);
    if (!levels.empty()) levels[0].sigma_frobenius = field.m() > 1 ? 1 : 0;
    return Tower(TowerSpec{field, std::move(levels)});
  }
  if (std::regex_match(s, m, std::regex(R"(f4-sec21-(\d+)var)"))) {
    const auto n = static_cast<unsigned>(text::to_uint(m[1].str(), "variable count"));
    auto levels = named("Y", n);
    if (!levels.empty()) levels[0].sigma_frobenius = 1;
    return Tower(TowerSpec{Field::make(2, 2), std::move(levels)});
  }
  throw InputError("unknown preset '" + s + "'");
}

std::vector<std::string> preset_examples() {
  return {"weyl-f101", "weyl-f5", "classical-f4-2", "classical-f2-3", "f4-frobenius-2",
          "f4-frobenius-3", "f8-frobenius-1", "f4-sec21-2var", "f4-sec21-3var"};
}

Expression parse_expression(const Tower& tower, std::string_view text) {
  const Field& field = tower.field();
  Expression out;
  std::size_t pos = 0;
  bool negate = false;
  bool first = true;
  while (true) {
    const auto next = text.find_first_of("+-", pos);
    const std::string_view chunk = text::trim(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (chunk.empty()) {
      if (!(first && next != std::string_view::npos && text[next] == '-')) {
        throw InputError("empty term in expression '" + std::string(text) + "'");
      }
    } else {
      Product prod;
      if (negate) prod.factors.emplace_back(field.neg(field.one()));
      std::string spaced(chunk);
      std::replace(spaced.begin(), spaced.end(), '*', ' ');
      for (const std::string& tok : text::split_ws(spaced)) {
        if (text::is_uint(tok)) {
          prod.factors.emplace_back(field.element(text::to_uint(tok, "element code")));
        } else if (tok.find(':') != std::string::npos) {
          const Term t = parse_compact_term(field, tok);
          if (t.exponents.size() > tower.size()) throw InputError("term '" + tok + "' has too many exponents");
          prod.factors.emplace_back(t.coefficient);
          for (unsigned i = 0; i < t.exponents.size(); ++i) {
            for (unsigned k = 0; k < t.exponents[i]; ++k) prod.factors.emplace_back(i + 1);
          }
        } else {
          const auto [idx, power] = parse_power(tower, tok);
          for (unsigned k = 0; k < power; ++k) prod.factors.emplace_back(idx);
        }
      }
      out.push_back(std::move(prod));
    }
    if (next == std::string_view::npos) break;
    negate = text[next] == '-';
    first = false;
    pos = next + 1;
  }
  return out;
}

Word parse_word(const Tower& tower, std::string_view text) {
  std::string spaced(text);
  std::replace(spaced.begin(), spaced.end(), '*', ' ');
  const auto tokens = text::split_ws(spaced);
  if (tokens.empty()) throw InputError("empty word");
  Word w;
  w.coefficient = tower.field().one();
  std::size_t k = 0;
  if (text::is_uint(tokens[0])) {
    w.coefficient = tower.field().element(text::to_uint(tokens[0], "coefficient"));
    k = 1;
  }
  for (; k < tokens.size(); ++k) {
    const auto [idx, power] = parse_power(tower, tokens[k]);
    for (unsigned e = 0; e < power; ++e) w.letters.push_back(idx);
  }
  return w;
}

std::string format_word(const Tower& tower, const Word& w) {
  std::string out;
  if (w.coefficient != tower.field().one() || w.letters.empty()) out = std::to_string(w.coefficient.code());
  for (unsigned letter : w.letters) {
    if (!out.empty()) out += ' ';
    out += tower.name(letter);
  }
  return out;
}

Point parse_point(const Tower& tower, std::string_view text) {
  Point p;
  for (const std::string& tok : text::split_ws(text)) {
    p.coords.push_back(tower.field().element(text::to_uint(tok, "coordinate")));
  }
  if (p.coords.size() != tower.size()) {
    throw InputError("point '" + std::string(text::trim(text)) + "' has " + std::to_string(p.coords.size()) +
                     " coordinates, expected " + std::to_string(tower.size()));
  }
  return p;
}

std::vector<Point> parse_points(const Tower& tower, std::istream& in) {
  std::vector<Point> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (text::trim(line).empty()) continue;
    out.push_back(parse_point(tower, line));
  }
  return out;
}

std::string format_point(const Point& p) {
  std::string out;
  for (FieldElement c : p.coords) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c.code());
  }
  return out;
}

}  // namespace orecalc
