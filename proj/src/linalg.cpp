#include "orecalc/linalg.hpp"

#include <utility>

#include "orecalc/error.hpp"

namespace orecalc {

std::vector<FieldElement> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<FieldElement>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw InputError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

EchelonForm row_reduce(const Field& field, Matrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(lead_row, c));
    }
    const FieldElement scale = field.inv(m.at(lead_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(lead_row, c) = field.mul(scale, m.at(lead_row, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m.at(r, col).is_zero()) continue;
      const FieldElement factor = field.neg(m.at(r, col));
      for (std::size_t c = col; c < m.cols(); ++c) {
        m.at(r, c) = field.add(m.at(r, c), field.mul(factor, m.at(lead_row, c)));
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Field& field, const Matrix& m) { return row_reduce(field, m).rank(); }

std::vector<std::size_t> independent_rows(const Field& field, const Matrix& m) {
  std::vector<std::size_t> keep;
  Matrix acc;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Matrix trial = acc;
    trial.append_row(m.row(r));
    if (rank(field, trial) == keep.size() + 1) {
      keep.push_back(r);
      acc = std::move(trial);
    }
  }
  return keep;
}

std::optional<std::vector<FieldElement>> solve_left(const Field& field, const Matrix& a,
                                                    const std::vector<FieldElement>& b) {
  if (b.size() != a.cols()) throw InputError("right-hand side length mismatch");
  // x A = b  <=>  A^T x^T = b^T; reduce the augmented [A^T | b^T].
  Matrix aug(a.cols(), a.rows() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(c, r) = a.at(r, c);
  }
  for (std::size_t c = 0; c < a.cols(); ++c) aug.at(c, a.rows()) = b[c];
  const EchelonForm ef = row_reduce(field, std::move(aug));
  std::vector<FieldElement> x(a.rows(), field.zero());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
    const std::size_t col = ef.pivots[i];
    if (col == a.rows()) return std::nullopt;
    x[col] = ef.reduced.at(i, a.rows());
  }
  return x;
}

}  // namespace orecalc
