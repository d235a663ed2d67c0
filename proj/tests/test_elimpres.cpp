#include <doctest.h>

#include <algorithm>

#include "germs.hpp"
#include "slopelab/elimpres.hpp"

using namespace slopelab;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

ExtendedRational R_(long a, long b = 1) { return ExtendedRational(Rational(a, b)); }

VariableSplit split(const Ring& R, std::initializer_list<const char*> fiber) {
  VariableSplit s;
  for (const char* v : fiber) s.fiber.set(R.index_of(v));
  for (std::size_t i = 0; i < R.nvars(); ++i)
    if (!s.fiber.test(i)) s.base.set(i);
  return s;
}

bool contains(const std::vector<WeightedGenerator>& gens, const WeightedGenerator& g) {
  return std::find(gens.begin(), gens.end(), g) != gens.end();
}

}  // namespace

TEST_CASE("rees algebra validation") {
  const Ring R(Q, {"x"});
  CHECK_THROWS_AS(ReesAlgebra(Q, 1, {{R.zero(), 1}}), Error);
  CHECK_THROWS_AS(ReesAlgebra(Q, 1, {{R.var("x"), 0}}), Error);
  CHECK_THROWS_AS(ReesAlgebra(F2, 1, {{R.var("x"), 1}}), Error);
}

TEST_CASE("hironaka order") {
  const Ring R(F2, {"y"});
  CHECK(sing_order(ReesAlgebra(F2, 1, {{R.parse("y^2"), 1}}), PointSpec::origin(1)) == R_(2));
  for (std::uint64_t p : {2, 3, 5}) {
    const Ring Rp(Field::prime(p), {"y1", "y2"});
    const ReesAlgebra G(Rp.field, 2, {{Rp.var("y1").pow(unsigned(p)), unsigned(p - 1)}});
    CHECK(sing_order(G, PointSpec::prime(Rp.var_set({"y1"}), 2)) == R_(long(p), long(p - 1)));
  }
  const Ring RQ(Q, {"x", "y"});
  CHECK(sing_order(ReesAlgebra(Q, 2, {{RQ.parse("x^2"), 2}, {RQ.parse("y^3"), 3}}), PointSpec::origin(2)) == R_(1));
  CHECK(sing_order(std::vector<WeightedGenerator>{}, VarSet{}).is_infinite());
}

TEST_CASE("differential saturation") {
  const Ring R(F2, {"z", "y"});
  const ReesAlgebra G = diff_saturate_once(ReesAlgebra(F2, 2, {{R.parse("z^2 - y^3"), 2}}));
  const std::vector<WeightedGenerator> want{{R.parse("y^2"), 1}, {R.parse("z^2 + y^3"), 2}};
  CHECK(G.generators() == want);

  for (std::uint64_t p : {2, 3, 5}) {
    const Ring Rp = corpus::whitney_ring(p);
    const ReesAlgebra Gp = diff_saturate_once(ReesAlgebra(Rp.field, 3, {{corpus::whitney(p), unsigned(p)}}));
    CHECK(contains(Gp.generators(), {Rp.var("y1").pow(unsigned(p)), unsigned(p - 1)}));
  }

  const Ring RQ(Q, {"x"});
  const ReesAlgebra H = diff_saturate_once(ReesAlgebra(Q, 1, {{RQ.parse("x^2"), 2}}));
  CHECK(contains(H.generators(), {RQ.var("x"), 1}));
}

TEST_CASE("saturation preserves the order on the singular locus") {
  const Ring R(Field::prime(3), {"z", "y1", "y2"});
  const std::vector<std::pair<const char*, unsigned>> algebras{
      {"z^3 + y1^4", 3}, {"z^3 - y1^3*y2", 3}, {"z^2 + y1*y2^3", 2}, {"y1^5 + y2^7", 4}, {"z^3*y1 + y2^6", 3}};
  std::vector<PointSpec> points{PointSpec::origin(3), PointSpec::prime(R.var_set({"z", "y1"}), 3),
                                PointSpec::prime(R.var_set({"y1"}), 3)};
  for (const auto& [f, w] : algebras) {
    const ReesAlgebra G(R.field, 3, {{R.parse(f), w}});
    const ReesAlgebra D = diff_saturate_once(G);
    for (const auto& pt : points) {
      // Saturation keeps the singular locus; off it the order may drop.
      if (!(sing_order(G, pt) < ExtendedRational(1)))
        CHECK(sing_order(D, pt) == sing_order(G, pt));
      else
        CHECK(!(sing_order(G, pt) < sing_order(D, pt)));
    }
  }
}

TEST_CASE("p-presentations") {
  const Ring R(F2, {"z", "y"});
  const VariableSplit s = split(R, {"z"});
  CHECK(build_fiber(R.parse("z^6"), 0, s).h == R.parse("z^2"));
  CHECK(build_fiber(R.parse("z^6 + y^5"), 0, s).h == R.parse("z^2"));
  const Polynomial g = R.parse("z^2 + y^3");
  const Fiber f = build_fiber(g, 0, s);
  CHECK(f.h == g);
  CHECK(f.degree == 2);
  CHECK(f.ell == 1);
  CHECK(f.coeffs[0].is_zero());
  CHECK(f.coeffs[1] == R.parse("y^3"));
  CHECK(build_fiber(f.h, 0, s).h == f.h);

  CHECK_THROWS_AS(build_fiber(R.parse("z^3 + y^2"), 0, s), Error);
  CHECK_THROWS_AS(build_fiber(R.parse("y*z^2 + y^3"), 0, s), Error);
  CHECK_THROWS_AS(build_fiber(R.parse("y^3"), 0, s), Error);
  const Ring RQ(Q, {"z", "y"});
  CHECK_THROWS_AS(build_fiber(RQ.parse("z^2 - y^3"), 0, split(RQ, {"z"})), Error);
}

TEST_CASE("presentation building is idempotent at prime-power degree") {
  for (std::uint64_t p : {2, 3}) {
    const Ring R(Field::prime(p), {"z", "y1", "y2"});
    const VariableSplit s = split(R, {"z"});
    for (const char* tail : {"y1^5", "y1*y2^4 + y2^7", "y1^2*z + y2^9"}) {
      const unsigned q = unsigned(p * p);
      const Polynomial g = R.var("z").pow(q) + R.parse(tail);
      const Fiber once = build_fiber(g, 0, s);
      CHECK(once.h == g);
      CHECK(build_fiber(once.h, 0, s).h == once.h);
    }
  }
}

TEST_CASE("elimination generators") {
  const Ring R(F2, {"z", "y"});
  const PPresentation P = build_p_presentation(R.parse("z^2 + y^3"), 0, split(R, {"z"}));
  CHECK(P.elimination == std::vector<WeightedGenerator>{{R.parse("y^2"), 1}});
  for (std::uint64_t p : {2, 3, 5}) {
    const Ring Rp = corpus::whitney_ring(p);
    const PPresentation W = build_p_presentation(corpus::whitney(p), 0, split(Rp, {"x"}));
    CHECK(contains(W.elimination, {Rp.var("y1").pow(unsigned(p)), unsigned(p - 1)}));
  }
  const PPresentation Z = build_p_presentation(R.parse("z^2"), 0, split(R, {"z"}));
  CHECK(Z.elimination.empty());
}

TEST_CASE("slopes") {
  const Ring R(F2, {"z", "y"});
  const SlopeReport c = slope(build_p_presentation(R.parse("z^2 + y^3"), 0, split(R, {"z"})), PointSpec::origin(2));
  CHECK(c.slope == R_(3, 2));
  CHECK(c.case_label == SlopeCase::B1);
  CHECK(c.elimination_order == R_(2));
  CHECK(c.normal_form);

  for (std::uint64_t p : {2, 3, 5}) {
    const Ring Rp = corpus::whitney_ring(p);
    const SlopeReport w = slope(build_p_presentation(corpus::whitney(p), 0, split(Rp, {"x"})),
                                PointSpec::prime(Rp.var_set({"x", "y1"}), 3));
    CHECK(w.slope == R_(1));
    CHECK(w.case_label == SlopeCase::B2);
    CHECK(w.elimination_order == R_(long(p), long(p - 1)));
  }

  const SlopeReport z = slope(build_p_presentation(R.parse("z^2"), 0, split(R, {"z"})), PointSpec::origin(2));
  CHECK(z.slope.is_infinite());
  CHECK(z.degenerate);

  CHECK_THROWS_AS(slope(build_p_presentation(R.parse("z^2 + y"), 0, split(R, {"z"})), PointSpec::origin(2)), Error);
  CHECK_THROWS_AS(slope(build_p_presentation(R.parse("z^2 + y^3"), 0, split(R, {"z"})),
                        PointSpec::prime(R.var_set({"y"}), 2)),
                  Error);
}

TEST_CASE("cleaning") {
  const Ring R(F2, {"z", "y1", "y2"});
  const PPresentation P = build_p_presentation(R.parse("z^2 + y1^2*y2^2 + y1^5"), 0, split(R, {"z"}));
  const SlopeReport before = slope(P, PointSpec::origin(3));
  CHECK(before.slope == R_(2));
  CHECK(before.case_label == SlopeCase::B3);
  const SlopeReport s = clean(P, PointSpec::origin(3));
  REQUIRE(s.transcript.size() == 1);
  CHECK(s.transcript[0].shift == R.parse("y1*y2"));
  CHECK(s.equations.front() == R.parse("z^2 + y1^5"));
  CHECK(s.case_label == SlopeCase::B1);
  CHECK(s.hord == std::optional<ExtendedRational>(R_(5, 2)));
  CHECK(s.elimination_order == R_(4));

  try {
    clean(P, PointSpec::origin(3), 0);
    FAIL("expected the round budget to run out");
  } catch (const RoundsExhaustedError& e) {
    CHECK(e.code() == Errc::RoundsExhausted);
    CHECK(e.best().slope == R_(2));
    CHECK(!e.best().normal_form);
  }

  const Ring C(F2, {"z", "y"});
  const SlopeReport cusp = clean(build_p_presentation(C.parse("z^2 + y^3"), 0, split(C, {"z"})), PointSpec::origin(2));
  CHECK(cusp.transcript.empty());
  CHECK(cusp.hord == std::optional<ExtendedRational>(R_(3, 2)));

  for (std::uint64_t p : {2, 3, 5}) {
    const Ring Rp(Field::prime(p), {"z", "y"});
    const Polynomial g = Rp.var("z").pow(unsigned(p)) + Rp.var("y").pow(unsigned(p));
    const SlopeReport d = clean(build_p_presentation(g, 0, split(Rp, {"z"})), PointSpec::origin(2));
    CHECK(d.degenerate);
    CHECK(d.hord == std::optional<ExtendedRational>(ExtendedRational::infinity()));
  }
}

TEST_CASE("cleaning never lowers the slope") {
  const Ring R(F2, {"z", "y1", "y2"});
  for (const char* g : {"z^2 + y1^2*y2^2 + y1^5", "z^2 + y1^4 + y2^6 + y1^3*y2^4", "z^2 + y1^2 + y1^3",
                        "z^4 + y1^4*y2^4 + y1^9", "z^2 + y1^6*y2^2 + y2^7"}) {
    const SlopeReport s = clean(build_p_presentation(R.parse(g), 0, split(R, {"z"})), PointSpec::origin(3));
    for (const auto& t : s.transcript) CHECK(!(t.slope_after < t.slope_before));
    CHECK(s.normal_form);
  }
}

TEST_CASE("intermediate coefficients dominate or the report says so") {
  const Ring R(Field::prime(2), {"z", "y1", "y2"});
  for (const char* g : {"z^4 + y1^2*z^2 + y1^5", "z^4 + y1*y2*z^3 + y2^8", "z^4 + y1^3*z + y2^5", "z^2 + y1^3*z + y1^7"}) {
    const PPresentation P = build_p_presentation(R.parse(g), 0, split(R, {"z"}));
    const SlopeReport s = slope(P, PointSpec::origin(3));
    const auto& ratios = s.fibers.front().ratios;
    bool dominated = true;
    for (std::size_t j = 0; j + 1 < ratios.size(); ++j) dominated = dominated && !(ratios[j] < s.elimination_order);
    CHECK((dominated || s.intermediate_violation));
    CHECK(dominated != s.intermediate_violation);
    CHECK(s.elimination_approximate);
  }
}

TEST_CASE("unit rescaling of the fiber variable keeps H-ord and the case") {
  for (std::uint64_t p : {3, 5}) {
    const Field F = Field::prime(p);
    const Ring R(F, {"z", "y1", "y2"});
    const std::string P = std::to_string(p);
    const std::string P1 = std::to_string(p + 1);
    const std::string P2 = std::to_string(p + 2);
    for (const std::string& g : {"z^" + P + " + y1^" + P1, "z^" + P + " - y1^" + P + "*y2",
                                 "z^" + P + " + y1^" + P + "*y2^" + P + " + y2^" + P2, "z^" + P + " + y1^" + P + "*z + y2^" + P1}) {
      const Polynomial f = R.parse(g);
      const auto s1 = clean(build_p_presentation(f, 0, split(R, {"z"})), PointSpec::origin(3));
      for (long u = 2; u < long(p); ++u) {
        Rational uq(1);
        for (std::uint64_t k = 0; k < p; ++k) uq = F.mul(uq, Rational(u));
        const Polynomial scaled = substitute(f, {R.var("z") * Rational(u), R.var("y1"), R.var("y2")}) * F.inverse(uq);
        const auto s2 = clean(build_p_presentation(scaled, 0, split(R, {"z"})), PointSpec::origin(3));
        CHECK(s1.hord == s2.hord);
        CHECK(s1.case_label == s2.case_label);
      }
    }
  }
}

TEST_CASE("tschirnhausen order") {
  const Ring R(Q, {"z", "y"});
  CHECK(tschirnhausen_ord(R.parse("z^2 - y^3"), 0, PointSpec::origin(2)) == R_(3, 2));
  CHECK(tschirnhausen_ord(R.parse("z^2 + 2*y*z + y^3 + y^2"), 0, PointSpec::origin(2)) == R_(3, 2));
  CHECK(tschirnhausen_ord(R.parse("z^2 - y^2"), 0, PointSpec::origin(2)) == R_(1));
  CHECK_THROWS_AS(tschirnhausen_ord(R.parse("2*z^2 - y^3"), 0, PointSpec::origin(2)), Error);
  const Ring R2(F2, {"z", "y"});
  CHECK_THROWS_AS(tschirnhausen_ord(R2.parse("z^2 - y^3"), 0, PointSpec::origin(2)), Error);
}

TEST_CASE("theorem cross-checks on the corpus") {
  for (const auto& tc : corpus::theorem_corpus()) {
    CAPTURE(tc.name);
    const TheoremCheckReport r = cross_check_theorems(tc.input);
    CHECK(r.passed);
    CHECK(r.classification == tc.expected_class);
    CHECK(r.hord == tc.expected_hord);
    CHECK(r.ord == tc.expected_ord);
    CHECK(r.samuel_exact == tc.expect_samuel_exact);
  }
}

TEST_CASE("theorem cross-check input validation") {
  const Ring R(F2, {"x", "y"});
  const LocalRing A = corpus::cusp(F2);
  VariableSplit s = split(R, {"x"});
  TheoremCheckInput wrong{A, s, {{0, R.parse("x^2 + y^5")}}, std::nullopt, {}, {}, 16};
  CHECK_THROWS_AS(cross_check_theorems(wrong), Error);
  TheoremCheckInput degenerate{LocalRing::at_origin(R, Ideal(F2, 2, {R.parse("x^2 + y^2")})), s,
                               {{0, R.parse("x^2 + y^2")}}, std::nullopt, {}, {}, 16};
  try {
    cross_check_theorems(degenerate);
    FAIL("degenerate germ accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotApplicable);
  }
}
