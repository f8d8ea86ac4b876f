#include "orecalc/rmcode.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "orecalc/error.hpp"
#include "orecalc/tower_io.hpp"
#include "orecalc/vanishing.hpp"
#include "text_util.hpp"

namespace orecalc {

namespace {

void exponent_vectors(unsigned m, unsigned r, std::span<const unsigned> caps, std::vector<unsigned>& cur,
                      std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  const unsigned used = [&] {
    unsigned s = 0;
    for (unsigned e : cur) s += e;
    return s;
  }();
  const unsigned cap = caps.empty() ? r : std::min(r, caps[cur.size()]);
  for (unsigned e = 0; e <= cap && used + e <= r; ++e) {
    cur.push_back(e);
    exponent_vectors(m, r, caps, cur, out);
    cur.pop_back();
  }
}

// q^k, throwing once it passes cap.
std::uint64_t checked_power(std::uint64_t q, std::size_t k, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > cap / q) {
      throw CapExceeded("code has " + std::to_string(q) + "^" + std::to_string(k) +
                        " codewords, more than the cap of " + std::to_string(cap));
    }
    v *= q;
  }
  return v;
}

Matrix basis_rows(const Field& field, const Matrix& m) {
  Matrix basis(0, m.cols());
  for (std::size_t i : independent_rows(field, m)) basis.append_row(m.row(i));
  return basis;
}

// scaled[i * q + c] = c * row_i
std::vector<std::vector<FieldElement>> scaled_rows(const Field& field, const Matrix& b) {
  std::vector<std::vector<FieldElement>> out(b.rows() * field.q());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (FieldElement c : field.enumerate()) {
      auto& row = out[i * field.q() + c.code()];
      row.resize(b.cols());
      for (std::size_t j = 0; j < b.cols(); ++j) row[j] = field.mul(c, b.at(i, j));
    }
  }
  return out;
}

}  // namespace

MonomialSet monomial_basis(unsigned m, unsigned r, std::span<const unsigned> caps) {
  if (!caps.empty() && caps.size() != m) throw InputError("one exponent cap per variable is required");
  std::vector<std::vector<unsigned>> exps;
  std::vector<unsigned> cur;
  exponent_vectors(m, r, caps, cur, exps);
  MonomialSet ms;
  ms.degree_bound = r;
  ms.caps.assign(caps.begin(), caps.end());
  for (const auto& e : exps) {
    Word w;
    for (unsigned i = 0; i < m; ++i) w.letters.insert(w.letters.end(), e[i], i + 1);
    ms.words.push_back(std::move(w));
  }
  std::sort(ms.words.begin(), ms.words.end(), [](const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.letters < b.letters;
  });
  return ms;
}

MonomialSet reduced_basis(const Tower& tower, unsigned r) {
  std::vector<unsigned> caps;
  for (const auto& g : vanishing_gens(tower)) caps.push_back(g.degree() - 1);
  return monomial_basis(tower.size(), r, caps);
}

MonomialSet parse_monomial_set(const Tower& tower, std::istream& in) {
  MonomialSet ms;
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (text::trim(line).empty()) continue;
    Word w;
    try {
      w = parse_word(tower, line);
    } catch (const InputError& e) {
      throw InputError("monomial line " + std::to_string(lineno) + ": " + e.what());
    }
    if (std::find(ms.words.begin(), ms.words.end(), w) != ms.words.end()) {
      throw InputError("monomial line " + std::to_string(lineno) + ": duplicate word");
    }
    ms.degree_bound = std::max(ms.degree_bound, w.degree());
    ms.words.push_back(std::move(w));
  }
  if (ms.words.empty()) throw InputError("monomial set is empty");
  return ms;
}

std::string format_monomial_set(const Tower& tower, const MonomialSet& ms) {
  std::string out;
  for (const Word& w : ms.words) out += format_word(tower, w) + "\n";
  return out;
}

Matrix generator_matrix_serial(const Tower& tower, const MonomialSet& ms) {
  const std::uint64_t n = tower.point_count();
  Matrix out(ms.words.size(), n);
  for (std::size_t i = 0; i < ms.words.size(); ++i) {
    const Word& w = ms.words[i];
    const MultiPoly normal = ms.mode == EvalMode::normal ? tower.normalize(w) : MultiPoly();
    for (std::uint64_t j = 0; j < n; ++j) {
      const Point p = tower.point(j);
      out.at(i, j) = ms.mode == EvalMode::word ? tower.eval_word(w, p) : tower.eval_normal(normal, p);
    }
  }
  return out;
}

Matrix generator_matrix(const Tower& tower, const MonomialSet& ms) {
  const auto n = static_cast<std::int64_t>(tower.point_count());
  std::vector<MultiPoly> normal;
  if (ms.mode == EvalMode::normal) {
    for (const Word& w : ms.words) normal.push_back(tower.normalize(w));
  }
  Matrix out(ms.words.size(), static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    const Point p = tower.point(static_cast<std::uint64_t>(j));
    for (std::size_t i = 0; i < ms.words.size(); ++i) {
      out.at(i, static_cast<std::size_t>(j)) =
          ms.mode == EvalMode::word ? tower.eval_word(ms.words[i], p) : tower.eval_normal(normal[i], p);
    }
  }
  return out;
}

std::size_t rank_dimension(const Field& field, const Matrix& m) { return rank(field, m); }

unsigned hamming_weight(std::span<const FieldElement> word) {
  return static_cast<unsigned>(std::count_if(word.begin(), word.end(), [](FieldElement x) { return !x.is_zero(); }));
}

std::vector<FieldElement> encode(const Field& field, std::span<const FieldElement> message, const Matrix& m) {
  if (message.size() != m.rows()) {
    throw InputError("message has " + std::to_string(message.size()) + " symbols, expected " +
                     std::to_string(m.rows()));
  }
  std::vector<FieldElement> out(m.cols(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!field.contains(message[i])) throw InputError("message symbol not in field");
    if (message[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = field.add(out[j], field.mul(message[i], m.at(i, j)));
  }
  return out;
}

DistanceResult min_distance_serial(const Field& field, const Matrix& m, std::uint64_t cap) {
  const Matrix b = basis_rows(field, m);
  const std::size_t k = b.rows();
  DistanceResult result;
  if (k == 0) return result;
  const std::uint64_t q = field.q();
  const std::uint64_t total = checked_power(q, k, cap);
  const auto scaled = scaled_rows(field, b);

  result.distance = std::numeric_limits<unsigned>::max();
  std::vector<FieldElement> word(b.cols());
  for (std::uint64_t msg = 1; msg < total; ++msg) {
    std::fill(word.begin(), word.end(), field.zero());
    std::uint64_t rest = msg;
    for (std::size_t i = 0; i < k; ++i, rest /= q) {
      const auto c = static_cast<std::uint32_t>(rest % q);
      if (c == 0) continue;
      const auto& row = scaled[i * q + c];
      for (std::size_t j = 0; j < word.size(); ++j) word[j] = field.add(word[j], row[j]);
    }
    const unsigned w = hamming_weight(word);
    if (w < result.distance) {
      result.distance = w;
      result.witness = word;
    }
  }
  result.codewords = total - 1;
  return result;
}

DistanceResult min_distance(const Field& field, const Matrix& m, std::uint64_t cap) {
  const Matrix b = basis_rows(field, m);
  const std::size_t k = b.rows();
  DistanceResult result;
  if (k == 0) return result;
  const std::uint64_t q = field.q();
  checked_power(q, k, cap);
  const auto scaled = scaled_rows(field, b);

  // Messages whose first nonzero symbol is 1, grouped by its position:
  // block j holds q^{k-1-j} messages.
  std::vector<std::uint64_t> block_start{0};
  for (std::size_t j = 0; j < k; ++j) {
    std::uint64_t size = 1;
    for (std::size_t i = j + 1; i < k; ++i) size *= q;
    block_start.push_back(block_start.back() + size);
  }
  const auto total = static_cast<std::int64_t>(block_start.back());

  unsigned best = std::numeric_limits<unsigned>::max();
  std::int64_t best_index = -1;
#pragma omp parallel
  {
    unsigned local_best = std::numeric_limits<unsigned>::max();
    std::int64_t local_index = -1;
    std::vector<FieldElement> word(b.cols());
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto u = static_cast<std::uint64_t>(idx);
      const std::size_t lead = static_cast<std::size_t>(
          std::upper_bound(block_start.begin(), block_start.end(), u) - block_start.begin() - 1);
      word = scaled[lead * q + 1];
      std::uint64_t rest = u - block_start[lead];
      for (std::size_t i = lead + 1; i < k; ++i, rest /= q) {
        const auto c = static_cast<std::uint32_t>(rest % q);
        if (c == 0) continue;
        const auto& row = scaled[i * q + c];
        for (std::size_t j = 0; j < word.size(); ++j) word[j] = field.add(word[j], row[j]);
      }
      const unsigned w = hamming_weight(word);
      if (w < local_best) {
        local_best = w;
        local_index = idx;
      }
    }
#pragma omp critical
    {
      if (local_index >= 0 && (local_best < best || (local_best == best && local_index < best_index))) {
        best = local_best;
        best_index = local_index;
      }
    }
  }

  // rebuild the witness for the winning message
  const auto u = static_cast<std::uint64_t>(best_index);
  const std::size_t lead = static_cast<std::size_t>(
      std::upper_bound(block_start.begin(), block_start.end(), u) - block_start.begin() - 1);
  std::vector<FieldElement> message(k, field.zero());
  message[lead] = field.one();
  std::uint64_t rest = u - block_start[lead];
  for (std::size_t i = lead + 1; i < k; ++i, rest /= q) message[i] = FieldElement{static_cast<std::uint32_t>(rest % q)};
  result.distance = best;
  result.witness = encode(field, message, b);
  result.codewords = static_cast<std::uint64_t>(total);
  return result;
}

CodeReport code_report(const Tower& tower, const MonomialSet& ms, std::uint64_t cap) {
  for (const Word& w : ms.words) {
    for (unsigned letter : w.letters) {
      if (letter < 1 || letter > tower.size()) throw InputError("monomial uses a variable outside the tower");
    }
  }
  const Field& field = tower.field();
  const Matrix g = generator_matrix(tower, ms);
  CodeReport report;
  report.n = g.cols();
  report.monomials = ms;
  report.basis = basis_rows(field, g);
  report.k = report.basis.rows();
  const DistanceResult dist = min_distance(field, report.basis, cap);
  report.d = dist.distance;
  report.witness = dist.witness;
  report.point_order = "lexicographic over K^" + std::to_string(tower.size()) +
                       ", element codes ascending, last coordinate fastest";
  return report;
}

std::string format_matrix_dump(const CodeReport& report) {
  std::ostringstream os;
  os << report.n << ' ' << report.k << ' ' << report.d << '\n';
  for (std::size_t i = 0; i < report.basis.rows(); ++i) {
    for (std::size_t j = 0; j < report.basis.cols(); ++j) {
      if (j) os << ' ';
      os << report.basis.at(i, j).code();
    }
    os << '\n';
  }
  return os.str();
}

MatrixDump parse_matrix_dump(const Field& field, std::istream& in) {
  MatrixDump dump;
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty matrix dump");
  const auto header = text::split_ws(line);
  if (header.size() != 3) throw InputError("matrix dump header must be 'n k d'");
  dump.n = text::to_uint(header[0], "length");
  dump.k = text::to_uint(header[1], "dimension");
  dump.d = static_cast<unsigned>(text::to_uint(header[2], "distance"));
  dump.rows = Matrix(0, dump.n);
  while (std::getline(in, line)) {
    const auto tokens = text::split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != dump.n) throw InputError("matrix row has the wrong length");
    std::vector<FieldElement> row;
    for (const auto& t : tokens) row.push_back(field.element(text::to_uint(t, "element code")));
    dump.rows.append_row(row);
  }
  if (dump.rows.rows() != dump.k) throw InputError("matrix dump row count differs from k");
  return dump;
}

}  // namespace orecalc
