#pragma once

#include <vector>

#include "slopelab/arith.hpp"
#include "slopelab/poly.hpp"

namespace slopelab::corpus {

/// Feasibility of A x = b, x >= 0 (b >= 0) by exact phase-one simplex with
/// Bland's rule.
bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

/// u lies in a * conv(vertices) + R^n_{>=0}: some lambda >= 0 with
/// sum lambda = a and sum lambda_i v_i <= u.  For monomial generators this is
/// x^u in the integral closure of I^a.
bool newton_point_member(const std::vector<Monomial>& vertices, const Monomial& u, unsigned a);

}  // namespace slopelab::corpus
