#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orecalc/galois.hpp"

namespace orecalc {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<FieldElement> row(std::size_t r) const;
  void append_row(const std::vector<FieldElement>& row);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct EchelonForm {
  Matrix reduced;                   // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm row_reduce(const Field& field, Matrix m);
std::size_t rank(const Field& field, const Matrix& m);

/// Indices of the first maximal independent subset of rows, in order.
std::vector<std::size_t> independent_rows(const Field& field, const Matrix& m);

/// Solves x * A = b for a row vector x (A is rows x cols, b has cols
/// entries).  Returns nullopt when inconsistent.
std::optional<std::vector<FieldElement>> solve_left(const Field& field, const Matrix& a,
                                                    const std::vector<FieldElement>& b);

}  // namespace orecalc
