#pragma once

#include <vector>

#include "slopelab/groebner.hpp"

namespace slopelab {

/// v(x^u) = <w, u>, extended to polynomials by the minimum over terms.
class MonomialValuation {
 public:
  /// Throws InvalidArgument unless the weights are >= 0 and not all zero.
  explicit MonomialValuation(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return w_; }
  Rational value(const Monomial& m) const;
  /// Infinity for f = 0.
  ExtendedRational value(const Polynomial& f) const;

  friend bool operator==(const MonomialValuation&, const MonomialValuation&) = default;

 private:
  std::vector<Rational> w_;
};

struct Facet {
  MonomialValuation valuation;  // primitive integer normal
  Rational threshold;           // min of the valuation over the generators, > 0
};

/// Newton polyhedron of a monomial ideal: conv(exponents) + R^n_{>=0},
/// described by its facets of positive threshold.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t nvars, std::vector<Monomial> generators, std::vector<Facet> facets);

  std::size_t nvars() const { return n_; }
  /// Minimal monomial generators.
  const std::vector<Monomial>& generators() const { return gens_; }
  const std::vector<Facet>& facets() const { return facets_; }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
  std::vector<Facet> facets_;
};

inline constexpr std::size_t kNewtonMaxVars = 4;

/// Throws NotMonomial, DimensionCap (n > 4), InvalidArgument for the zero or
/// unit ideal.
NewtonPolyhedron build_polyhedron(const Ideal& I);

/// min over facets of v(f) / threshold; infinity for f = 0.  Exact: each
/// facet valuation is a valuation of the polynomial ring.
ExtendedRational nubar_monomial(const NewtonPolyhedron& N, const Polynomial& f);
ExtendedRational nubar_monomial(const Ideal& I, const Polynomial& f);

/// f in the integral closure of I^a.
bool closure_member(const Polynomial& f, const NewtonPolyhedron& N, unsigned a);
bool closure_member(const Polynomial& f, const Ideal& I, unsigned a);

}  // namespace slopelab
