#include "slopelab/newton.hpp"

#include <algorithm>

#include "slopelab/linalg.hpp"

namespace slopelab {

MonomialValuation::MonomialValuation(std::vector<Rational> weights) : w_(std::move(weights)) {
  bool positive = false;
  for (const auto& x : w_) {
    if (x.sign() < 0) throw Error(Errc::InvalidArgument, "valuation weights must be non-negative");
    positive |= x.sign() > 0;
  }
  if (!positive) throw Error(Errc::InvalidArgument, "valuation weights are all zero");
}

Rational MonomialValuation::value(const Monomial& m) const {
  if (m.nvars() != w_.size()) throw Error(Errc::InvalidArgument, "valuation arity does not match the ring");
  Rational v(0);
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (m[i]) v += w_[i] * Rational(long(m[i]));
  return v;
}

ExtendedRational MonomialValuation::value(const Polynomial& f) const {
  ExtendedRational best = ExtendedRational::infinity();
  for (const auto& [m, c] : f.terms()) best = ext_min(best, ExtendedRational(value(m)));
  return best;
}

NewtonPolyhedron::NewtonPolyhedron(std::size_t nvars, std::vector<Monomial> generators, std::vector<Facet> facets)
    : n_(nvars), gens_(std::move(generators)), facets_(std::move(facets)) {}

namespace {

std::vector<Monomial> minimal_exponents(const Ideal& I) {
  if (!I.is_monomial()) throw Error(Errc::NotMonomial, "Newton polyhedron needs a monomial ideal");
  if (I.nvars() > kNewtonMaxVars)
    throw Error(Errc::DimensionCap, "Newton polyhedra are limited to " + std::to_string(kNewtonMaxVars) + " variables");
  if (I.is_zero()) throw Error(Errc::InvalidArgument, "zero ideal has no Newton polyhedron");
  std::vector<Monomial> all;
  for (const auto& g : I.generators()) all.push_back(g.leading_monomial());
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].is_one()) throw Error(Errc::InvalidArgument, "unit ideal has no proper Newton polyhedron");
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant; ++j)
      if (j != i && all[j].divides(all[i])) redundant = !(all[j] == all[i]) || j < i;
    if (!redundant) minimal.push_back(all[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  return minimal;
}

// Scales a non-negative rational vector to a primitive integer vector;
// returns the scale factor applied.
Rational make_primitive(std::vector<Rational>& w) {
  mpz_class den = 1, num = 0;
  for (const auto& x : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  for (const auto& x : w) {
    const mpz_class v = x.numerator() * (den / x.denominator());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  const Rational scale(den, num);
  for (auto& x : w) x *= scale;
  return scale;
}

// Calls visit(subset) for every k-subset of {0..n-1}.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

NewtonPolyhedron build_polyhedron(const Ideal& I) {
  const std::size_t n = I.nvars();
  const std::vector<Monomial> gens = minimal_exponents(I);
  const Field q = Field::rationals();
  std::vector<Facet> facets;

  // A facet with zero-weight coordinates Z is cut out by w_Z = 0 and
  // <w, u> = c on n - |Z| generators in general position.
  for (unsigned long zmask = 0; zmask < (1ul << n); ++zmask) {
    const VarSet Z(zmask);
    if (Z.count() == n) continue;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
      if (!Z.test(i)) free.push_back(i);
    const std::size_t m = free.size();
    for_each_subset(gens.size(), m, [&](const std::vector<std::size_t>& subset) {
      Matrix rows;
      for (auto g : subset) {
        Vector r;
        for (auto i : free) r.push_back(Rational(long(gens[g][i])));
        r.push_back(Rational(-1));
        rows.push_back(std::move(r));
      }
      if (rank(rows, q) != m) return;
      const Matrix ns = nullspace(rows, m + 1, q);
      if (ns.size() != 1) return;
      Vector sol = ns.front();
      if (sol.back().sign() < 0)
        for (auto& x : sol) x = -x;
      if (sol.back().sign() == 0) return;
      std::vector<Rational> w(n, Rational(0));
      for (std::size_t k = 0; k < m; ++k) {
        if (sol[k].sign() <= 0) return;  // zero weights belong to a larger Z
        w[free[k]] = sol[k];
      }
      Rational c = sol.back();
      const MonomialValuation trial(w);
      for (const auto& u : gens)
        if (trial.value(u) < c) return;
      c *= make_primitive(w);
      MonomialValuation v(std::move(w));
      for (const auto& f : facets)
        if (f.valuation == v) return;
      facets.push_back({std::move(v), c});
    });
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return std::lexicographical_compare(b.valuation.weights().begin(), b.valuation.weights().end(),
                                        a.valuation.weights().begin(), a.valuation.weights().end());
  });
  return NewtonPolyhedron(n, gens, std::move(facets));
}

ExtendedRational nubar_monomial(const NewtonPolyhedron& N, const Polynomial& f) {
  if (f.nvars() != N.nvars()) throw Error(Errc::InvalidArgument, "polynomial lives in a different ring");
  ExtendedRational best = ExtendedRational::infinity();
  for (const auto& facet : N.facets()) best = ext_min(best, ext_div(facet.valuation.value(f), facet.threshold));
  return best;
}

ExtendedRational nubar_monomial(const Ideal& I, const Polynomial& f) { return nubar_monomial(build_polyhedron(I), f); }

bool closure_member(const Polynomial& f, const NewtonPolyhedron& N, unsigned a) {
  if (a == 0 || f.is_zero()) return true;
  for (const auto& [m, c] : f.terms())
    for (const auto& facet : N.facets())
      if (facet.valuation.value(m) < facet.threshold * Rational(long(a))) return false;
  return true;
}

bool closure_member(const Polynomial& f, const Ideal& I, unsigned a) {
  if (a == 0 || f.is_zero()) return true;
  return closure_member(f, build_polyhedron(I), a);
}

}  // namespace slopelab
