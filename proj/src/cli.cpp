#include "orecalc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "orecalc/error.hpp"
#include "orecalc/rmcode.hpp"
#include "orecalc/tower_io.hpp"
#include "orecalc/vanishing.hpp"
#include "text_util.hpp"

namespace orecalc {

namespace {

struct TowerChoice {
  std::string file;
  std::string preset;

  void attach(CLI::App* sub) {
    auto* f = sub->add_option("--tower", file, "Tower description file");
    auto* p = sub->add_option("--preset", preset, "Built-in tower, e.g. weyl-f101, f4-frobenius-2, f4-sec21-3var");
    f->excludes(p);
  }

  Tower load() const {
    if (!file.empty()) return load_tower(file);
    if (!preset.empty()) return preset_tower(preset);
    throw InputError("one of --tower or --preset is required");
  }
};

std::vector<Point> read_points(const Tower& tower, const std::string& source, std::istream& in) {
  if (source.empty()) return tower.points();
  if (source == "-") return parse_points(tower, in);
  std::ifstream file(source);
  if (!file) throw InputError("cannot open points file '" + source + "'");
  return parse_points(tower, file);
}

std::vector<unsigned> parse_caps(const std::string& text, unsigned m) {
  std::vector<unsigned> caps;
  for (const std::string& c : text::split(text, ',')) caps.push_back(static_cast<unsigned>(text::to_uint(c, "cap")));
  if (caps.size() != m) throw InputError("--caps needs " + std::to_string(m) + " values");
  return caps;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated Ore extensions over finite fields: evaluation, good points, vanishing ideals, codes"};
  app.name("orecalc");
  app.require_subcommand(1);

  TowerChoice eval_tower, good_tower, vanish_tower, code_tower;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial or word at points");
  eval_tower.attach(eval_cmd);
  std::string expression, points_source;
  bool word_mode = false;
  eval_cmd->add_option("expression", expression, "Polynomial (normalized first) or, with --word, a word")->required();
  eval_cmd->add_flag("--word", word_mode, "Evaluate the word by the recursive word rule, without normalizing");
  eval_cmd->add_option("--points", points_source, "File with one point per line, '-' for stdin; default all points");

  auto* good_cmd = app.add_subcommand("goodpoints", "Tag every point GOOD or BAD");
  good_tower.attach(good_cmd);

  auto* vanish_cmd = app.add_subcommand("vanish", "Print the vanishing generators G_i");
  vanish_tower.attach(vanish_cmd);
  bool search_only = false;
  vanish_cmd->add_flag("--search", search_only, "Skip the closed forms and search every level");

  auto* code_cmd = app.add_subcommand("rmcode", "Build an evaluation code and report n k d");
  code_tower.attach(code_cmd);
  std::string monomial_file, basis, caps_text;
  std::optional<unsigned> degree_bound;
  std::uint64_t max_codewords = kDefaultCodewordCap;
  bool dump_matrix = false, normal_mode = false;
  auto* mono_opt = code_cmd->add_option("--monomials", monomial_file, "Monomial file, one word per line");
  auto* basis_opt = code_cmd->add_option("--basis", basis, "Generated set: multilinear, graded or reduced")
                        ->check(CLI::IsMember({"multilinear", "graded", "reduced"}));
  mono_opt->excludes(basis_opt);
  code_cmd->add_option("--r", degree_bound, "Degree bound for a generated set");
  code_cmd->add_option("--caps", caps_text, "Per-variable exponent caps a,b,...");
  code_cmd->add_option("--max-codewords", max_codewords, "Cap on q^k for the distance scan");
  code_cmd->add_flag("--matrix", dump_matrix, "Print the basis rows after the header");
  code_cmd->add_flag("--normal", normal_mode, "Evaluate normal forms instead of words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (eval_cmd->parsed()) {
      const Tower tower = eval_tower.load();
      const std::vector<Point> points = read_points(tower, points_source, in);
      if (word_mode) {
        const Word w = parse_word(tower, expression);
        for (const Point& p : points) out << format_point(p) << ' ' << tower.eval_word(w, p).code() << '\n';
      } else {
        const MultiPoly f = tower.normalize(parse_expression(tower, expression));
        for (const Point& p : points) out << format_point(p) << ' ' << tower.eval_normal(f, p).code() << '\n';
      }
    } else if (good_cmd->parsed()) {
      const Tower tower = good_tower.load();
      std::uint64_t good = 0, bad = 0;
      for (const Point& p : tower.points()) {
        const bool ok = tower.good_point_test(p);
        (ok ? good : bad) += 1;
        out << format_point(p) << (ok ? " GOOD" : " BAD") << '\n';
      }
      out << good << " GOOD, " << bad << " BAD\n";
    } else if (vanish_cmd->parsed()) {
      const Tower tower = vanish_tower.load();
      const auto gens = vanishing_gens(tower, !search_only);
      std::string degrees;
      for (const auto& g : gens) {
        out << format_vanishing(tower, g) << '\n';
        degrees += ' ' + std::to_string(g.degree());
      }
      out << "degrees:" << degrees << '\n';
    } else if (code_cmd->parsed()) {
      const Tower tower = code_tower.load();
      MonomialSet ms;
      if (!monomial_file.empty()) {
        std::ifstream file(monomial_file);
        if (!file) throw InputError("cannot open monomial file '" + monomial_file + "'");
        ms = parse_monomial_set(tower, file);
      } else if (basis.empty()) {
        throw InputError("one of --monomials or --basis is required");
      } else if (basis == "multilinear") {
        const std::vector<unsigned> ones(tower.size(), 1);
        ms = monomial_basis(tower.size(), degree_bound.value_or(tower.size()), ones);
      } else if (basis == "graded") {
        const auto caps = caps_text.empty() ? std::vector<unsigned>{} : parse_caps(caps_text, tower.size());
        ms = monomial_basis(tower.size(), degree_bound.value_or(1), caps);
      } else {
        ms = reduced_basis(tower, degree_bound.value_or(1));
      }
      if (normal_mode) ms.mode = EvalMode::normal;
      const CodeReport report = code_report(tower, ms, max_codewords);
      const std::string dump = format_matrix_dump(report);
      out << (dump_matrix ? dump : dump.substr(0, dump.find('\n') + 1));
    }
  } catch (const CapExceeded& e) {
    err << "orecalc: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    err << "orecalc: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace orecalc
