#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "orecalc/linalg.hpp"
#include "orecalc/tower.hpp"

namespace orecalc {

enum class EvalMode { word, normal };

/// Ordered monomials (or arbitrary words) whose evaluations span a code.
struct MonomialSet {
  std::vector<Word> words;
  EvalMode mode = EvalMode::word;
  unsigned degree_bound = 0;
  std::vector<unsigned> caps;  // per-variable exponent caps, empty = none
};

/// All t_1^{l_1}...t_m^{l_m} with sum l_i <= r and l_i <= caps[i], ordered
/// by total degree, then lexicographically on the sorted letter lists.
MonomialSet monomial_basis(unsigned m, unsigned r, std::span<const unsigned> caps = {});
/// Exponents capped by deg G_i - 1.
MonomialSet reduced_basis(const Tower& tower, unsigned r);

/// One word per line, letters by name left to right, optional leading
/// coefficient code.  Duplicates are rejected.
MonomialSet parse_monomial_set(const Tower& tower, std::istream& in);
std::string format_monomial_set(const Tower& tower, const MonomialSet& ms);

/// Row i holds the values of word i at every point (point order of Tower).
Matrix generator_matrix(const Tower& tower, const MonomialSet& ms);
Matrix generator_matrix_serial(const Tower& tower, const MonomialSet& ms);

std::size_t rank_dimension(const Field& field, const Matrix& m);

inline constexpr std::uint64_t kDefaultCodewordCap = std::uint64_t{1} << 24;

struct DistanceResult {
  unsigned distance = 0;  // 0 when the code is {0}
  std::vector<FieldElement> witness;
  std::uint64_t codewords = 0;  // number of nonzero messages examined
};

/// Minimum Hamming weight of the row space.  The rows are first reduced to
/// an independent subset; throws CapExceeded when q^k > cap.
DistanceResult min_distance(const Field& field, const Matrix& m, std::uint64_t cap = kDefaultCodewordCap);
/// Every nonzero message in turn, one thread.
DistanceResult min_distance_serial(const Field& field, const Matrix& m,
                                   std::uint64_t cap = kDefaultCodewordCap);

std::vector<FieldElement> encode(const Field& field, std::span<const FieldElement> message, const Matrix& m);
unsigned hamming_weight(std::span<const FieldElement> word);

struct CodeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  unsigned d = 0;
  std::vector<FieldElement> witness;
  MonomialSet monomials;
  Matrix basis;  // independent rows of the generator matrix, original order
  std::string point_order;
};

CodeReport code_report(const Tower& tower, const MonomialSet& ms, std::uint64_t cap = kDefaultCodewordCap);

/// `n k d`, then the k basis rows as space-separated element codes.
std::string format_matrix_dump(const CodeReport& report);

struct MatrixDump {
  std::size_t n = 0, k = 0;
  unsigned d = 0;
  Matrix rows;
};
MatrixDump parse_matrix_dump(const Field& field, std::istream& in);

}  // namespace orecalc
