#pragma once

#include <cstddef>
#include <vector>

#include "slopelab/groebner.hpp"

namespace slopelab::corpus {

/// Number of nonzero linear forms l over F_p in the given variables with
/// l^k in the ideal generated by `cone` for some k <= max_power.  The forms
/// are enumerated one by one, so the kernel dimension is log_p(count + 1).
std::size_t nilpotent_linear_forms(const Field& field, std::size_t nvars, const VarSet& vars,
                                   const std::vector<Polynomial>& cone, unsigned max_power = 8);

/// r with p^r = count + 1, or -1 when count + 1 is not a power of p.
int dimension_from_count(std::size_t count, std::uint64_t p);

/// Brute-force ideal membership: f is a combination sum c_i g_i with every
/// c_i of degree <= D, solved as a linear system over the coefficient field.
bool brute_force_member(const Polynomial& f, const std::vector<Polynomial>& gens, unsigned D);

/// All monomials in nvars variables of total degree <= d, in a fixed order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d);

}  // namespace slopelab::corpus
