#include <doctest.h>

#include "germs.hpp"
#include "lp_oracle.hpp"
#include "oracles.hpp"
#include "slopelab/newton.hpp"

using namespace slopelab;

namespace {

const Field Q = Field::rationals();

Ideal ideal(const Ring& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(R.parse(s));
  return Ideal(R.field, R.nvars(), std::move(g));
}

std::vector<Rational> W(std::initializer_list<long> w) {
  std::vector<Rational> out;
  for (long x : w) out.emplace_back(x);
  return out;
}

bool has_facet(const NewtonPolyhedron& N, std::initializer_list<long> w, long thr) {
  for (const auto& f : N.facets())
    if (f.valuation.weights() == W(w) && f.threshold == Rational(thr)) return true;
  return false;
}

}  // namespace

TEST_CASE("facets of small polyhedra") {
  const Ring R(Q, {"x", "y"});
  const NewtonPolyhedron A = build_polyhedron(ideal(R, {"x^2", "y^3"}));
  REQUIRE(A.facets().size() == 1);
  CHECK(has_facet(A, {3, 2}, 6));

  const NewtonPolyhedron B = build_polyhedron(ideal(R, {"x", "y"}));
  REQUIRE(B.facets().size() == 1);
  CHECK(has_facet(B, {1, 1}, 1));

  const NewtonPolyhedron C = build_polyhedron(ideal(R, {"x^2*y", "x*y^2"}));
  CHECK(C.facets().size() == 3);
  CHECK(has_facet(C, {1, 1}, 3));
  CHECK(has_facet(C, {1, 0}, 1));
  CHECK(has_facet(C, {0, 1}, 1));
}

TEST_CASE("non-minimal generators are dropped") {
  const Ring R(Q, {"x", "y"});
  const NewtonPolyhedron N = build_polyhedron(ideal(R, {"x^2", "x^3*y", "y^3"}));
  CHECK(N.generators().size() == 2);
}

TEST_CASE("polyhedron errors") {
  const Ring R(Q, {"x", "y"});
  CHECK_THROWS_AS(build_polyhedron(ideal(R, {"x + y"})), Error);
  CHECK_THROWS_AS(build_polyhedron(Ideal(Q, 2)), Error);
  CHECK_THROWS_AS(build_polyhedron(ideal(R, {"1"})), Error);
  const Ring R5(Q, {"a", "b", "c", "d", "e"});
  CHECK_THROWS_AS(build_polyhedron(ideal(R5, {"a", "b"})), Error);
}

TEST_CASE("nubar of monomials") {
  const Ring R(Q, {"x", "y"});
  const Ideal I = ideal(R, {"x^2", "y^3"});
  CHECK(nubar_monomial(I, R.parse("x*y")) == ExtendedRational(Rational(5, 6)));
  CHECK(nubar_monomial(I, R.var("x")) == ExtendedRational(Rational(1, 2)));
  CHECK(nubar_monomial(ideal(R, {"x", "y"}), R.constant(1)) == ExtendedRational(0));
  CHECK(nubar_monomial(I, R.zero()).is_infinite());
  CHECK(nubar_monomial(I, R.parse("x + y")) == ExtendedRational(Rational(1, 3)));
}

TEST_CASE("integral closure membership") {
  const Ring R(Q, {"x", "y"});
  const Ideal I = ideal(R, {"x^2", "y^2"});
  CHECK(closure_member(R.parse("x*y"), I, 1));
  CHECK(!closure_member(R.var("x"), I, 1));
  CHECK(closure_member(R.var("x"), I, 0));
  CHECK(closure_member(R.constant(1), I, 0));
}

TEST_CASE("facets cut out the polyhedron") {
  for (const auto& mc : corpus::monomial_ideals()) {
    const NewtonPolyhedron N = build_polyhedron(mc.I);
    for (const auto& f : N.facets())
      for (const auto& g : N.generators()) CHECK(!(f.valuation.value(g) < f.threshold));
    for (const auto& u : corpus::monomials_up_to(mc.ring.nvars(), 8)) {
      bool inside = true;
      for (const auto& f : N.facets()) inside = inside && !(f.valuation.value(u) < f.threshold);
      CHECK(inside == corpus::newton_point_member(N.generators(), u, 1));
    }
  }
}

TEST_CASE("order function axioms on monomial corpus") {
  for (const auto& mc : corpus::monomial_ideals()) {
    const NewtonPolyhedron N = build_polyhedron(mc.I);
    const auto monos = corpus::monomials_up_to(mc.ring.nvars(), 3);
    for (const auto& a : monos)
      for (const auto& b : monos) {
        const Polynomial f = Polynomial::term(Q, a, 1);
        const Polynomial g = Polynomial::term(Q, b, 1);
        const ExtendedRational vf = nubar_monomial(N, f);
        const ExtendedRational vg = nubar_monomial(N, g);
        CHECK(!(nubar_monomial(N, f + g) < ext_min(vf, vg)));
        // Additive exactly when one Rees valuation computes the ideal.
        if (N.facets().size() == 1)
          CHECK(nubar_monomial(N, f * g) == ext_add(vf, vg));
        else
          CHECK(!(nubar_monomial(N, f * g) < ext_add(vf, vg)));
        const Polynomial h = f + Polynomial::term(Q, b, 2) * g;
        CHECK(!(nubar_monomial(N, h * f) < ext_add(nubar_monomial(N, h), vf)));
      }
  }
}

TEST_CASE("two Rees valuations break additivity") {
  const Ring R(Q, {"x", "y"});
  const NewtonPolyhedron N = build_polyhedron(ideal(R, {"x^2*y", "x*y^2"}));
  CHECK(nubar_monomial(N, R.var("x")) == ExtendedRational(0));
  CHECK(nubar_monomial(N, R.var("y")) == ExtendedRational(0));
  CHECK(nubar_monomial(N, R.parse("x*y")) == ExtendedRational(Rational(2, 3)));
}

TEST_CASE("homogeneity and power rescaling") {
  for (const auto& mc : corpus::monomial_ideals())
    for (unsigned r = 1; r <= 3; ++r) {
      const NewtonPolyhedron Nr = build_polyhedron(ideal_power(mc.I, r));
      for (const auto& m : corpus::monomials_up_to(mc.ring.nvars(), 3)) {
        const Polynomial f = Polynomial::term(Q, m, 1);
        const ExtendedRational v = nubar_monomial(mc.I, f);
        CHECK(nubar_monomial(mc.I, f.pow(r)) == ExtendedRational(v.finite() * Rational(long(r))));
        CHECK(nubar_monomial(Nr, f) == ext_div(v, Rational(long(r))));
      }
    }
}

TEST_CASE("closure equivalence in two variables") {
  for (const auto& mc : corpus::monomial_ideals()) {
    if (mc.ring.nvars() != 2) continue;
    const NewtonPolyhedron N = build_polyhedron(mc.I);
    for (const auto& m : corpus::monomials_up_to(2, 6)) {
      const Polynomial f = Polynomial::term(Q, m, 1);
      const ExtendedRational v = nubar_monomial(N, f);
      for (unsigned a = 1; a <= 6; ++a)
        for (unsigned b = 1; b <= 6; ++b)
          CHECK((!(v < ExtendedRational(Rational(long(a), long(b))))) == closure_member(f.pow(b), N, a));
    }
  }
}

TEST_CASE("lp oracle sanity") {
  CHECK(corpus::lp_feasible({{Rational(1), Rational(1)}}, {Rational(2)}));
  CHECK(!corpus::lp_feasible({{Rational(1)}, {Rational(1)}}, {Rational(1), Rational(2)}));
  const std::vector<Monomial> v{Monomial{2, 0}, Monomial{0, 3}};
  CHECK(corpus::newton_point_member(v, Monomial{1, 2}, 1));
  CHECK(!corpus::newton_point_member(v, Monomial{1, 1}, 1));
}
