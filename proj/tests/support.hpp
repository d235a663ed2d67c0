#pragma once

#include <random>
#include <vector>

#include "slopelab/poly.hpp"

namespace testing {

using namespace slopelab;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240601);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 9) {
  long d = 0;
  while (d == 0) d = uniform(1, bound);
  return Rational(uniform(-bound, bound)) / Rational(d);
}

inline Polynomial random_poly(const Field& field, std::size_t n, unsigned max_deg, unsigned terms) {
  Polynomial f(field, n);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(n);
    unsigned budget = static_cast<unsigned>(uniform(0, max_deg));
    for (std::size_t i = 0; i < n && budget; ++i) {
      const unsigned e = i + 1 == n ? budget : static_cast<unsigned>(uniform(0, budget));
      m.set(i, e);
      budget -= e;
    }
    f.add_term(m, field.is_prime_field() ? Rational(uniform(1, 50)) : random_rational(5));
  }
  return f;
}

}  // namespace testing
