#include "slopelab/linalg.hpp"

namespace slopelab {

Matrix row_reduce(Matrix rows, const Field& field) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  for (auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::InvalidArgument, "ragged matrix");
    for (auto& x : r) x = field.reduce(x);
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    const Rational inv = field.inverse(rows[pivot_row][c]);
    for (auto& x : rows[pivot_row]) x = field.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[pivot_row][k]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const Matrix& rows, const Field& field) { return row_reduce(rows, field).size(); }

Matrix nullspace(const Matrix& rows, std::size_t columns, const Field& field) {
  const Matrix rref = row_reduce(rows, field);
  std::vector<std::size_t> pivots;
  for (const auto& r : rref) {
    std::size_t c = 0;
    while (r[c].is_zero()) ++c;
    pivots.push_back(c);
  }
  Matrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    bool is_pivot = false;
    for (auto p : pivots) is_pivot |= (p == free);
    if (is_pivot) continue;
    Vector v(columns, Rational(0));
    v[free] = Rational(1);
    for (std::size_t i = 0; i < rref.size(); ++i) v[pivots[i]] = field.reduce(-rref[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const Matrix& rows, const Vector& v, const Field& field) {
  Matrix extended = rows;
  extended.push_back(v);
  return rank(extended, field) == rank(rows, field);
}

}  // namespace slopelab
