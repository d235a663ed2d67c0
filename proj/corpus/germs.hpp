#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopelab/elimpres.hpp"

namespace slopelab::corpus {

struct MonomialCase {
  std::string name;
  Ring ring;
  Ideal I;
};

/// Six monomial ideals in two and three variables.
std::vector<MonomialCase> monomial_ideals();

struct KernelCase {
  std::string name;
  LocalRing A;
  std::size_t expected_t;
  KernelClass expected_class;
  /// Prime used by the enumeration oracle (the ring's own characteristic, or
  /// a reduction prime for rings over Q).
  std::uint64_t oracle_prime;
};

std::vector<KernelCase> kernel_corpus();

struct TheoremCase {
  std::string name;
  TheoremCheckInput input;
  KernelClass expected_class;
  ExtendedRational expected_hord;
  ExtendedRational expected_ord;
  bool expect_samuel_exact;
};

/// Hypersurface germs in Weierstrass form for the theorem cross-checks.
std::vector<TheoremCase> theorem_corpus();

/// k[x,y]/<x^2 - y^3> at the origin.
LocalRing cusp(const Field& field);
/// Certificate w(x) = 3, w(y) = 2, w(m) = 2 for the cusp.
ValuationCertificate cusp_certificate();

/// x^p - y1^p y2 over F_p in variables x, y1, y2.
Ring whitney_ring(std::uint64_t p);
Polynomial whitney(std::uint64_t p);

}  // namespace slopelab::corpus
