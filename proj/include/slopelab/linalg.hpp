#pragma once

#include <vector>

#include "slopelab/arith.hpp"

namespace slopelab {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Dense exact linear algebra over Q or F_p, sized for tangent spaces and
// facet normals (a handful of rows and columns).

/// Reduced row echelon form; zero rows are dropped.
Matrix row_reduce(Matrix rows, const Field& field);
std::size_t rank(const Matrix& rows, const Field& field);
/// Basis of { x : rows * x = 0 }.
Matrix nullspace(const Matrix& rows, std::size_t columns, const Field& field);
/// True when v lies in the row span of rows.
bool in_span(const Matrix& rows, const Vector& v, const Field& field);

}  // namespace slopelab
