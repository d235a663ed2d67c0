#include <doctest.h>

#include "germs.hpp"
#include "oracles.hpp"
#include "slopelab/samuel.hpp"

using namespace slopelab;

namespace {

const Field Q = Field::rationals();

LocalRing hyper(const Ring& R, const char* g) { return LocalRing::at_origin(R, Ideal(R.field, R.nvars(), {R.parse(g)})); }

NubarOptions certified(ValuationCertificate cert) {
  NubarOptions o;
  o.strategy = NubarStrategy::Certificate;
  o.certificate = std::move(cert);
  return o;
}

CertificateEntry entry(std::vector<long> w, long v) {
  CertificateEntry e;
  for (long x : w) e.weights.emplace_back(x);
  e.ideal_value = Rational(v);
  return e;
}

ExtendedRational R_(long a, long b = 1) { return ExtendedRational(Rational(a, b)); }

}  // namespace

TEST_CASE("local ring validation") {
  const Ring R(Q, {"x", "y"});
  CHECK_THROWS_AS(LocalRing::at_origin(R, Ideal(Q, 2, {R.parse("x + 1")})), Error);
  VarSet v;
  v.set(0);
  CHECK_THROWS_AS(LocalRing(R, Ideal(Q, 2, {R.parse("y^2")}), PointSpec::prime(v, 2)), Error);
  CHECK(LocalRing::at_origin(R, Ideal(Q, 2)).maximal_ideal().generators().size() == 2);
}

TEST_CASE("order values in the cusp") {
  const LocalRing A = corpus::cusp(Q);
  SamuelEngine E(A, A.maximal_ideal());
  const Polynomial x = A.ring.var("x");
  CHECK(E.nu(x).value == R_(1));
  CHECK(E.nu(x * x).value == R_(3));
  CHECK(E.nu(A.ring.constant(1)).value == R_(0));
  CHECK(E.nu(A.ring.parse("x^2 - y^3")).value.is_infinite());
  const OrderValue capped = E.nu(x.pow(10), 4);
  CHECK(capped.at_least);
  CHECK(capped.value == R_(4));
}

TEST_CASE("engine refuses ideals it cannot localize") {
  const Ring R(Q, {"x", "y"});
  const LocalRing A = LocalRing::at_origin(R, Ideal(Q, 2));
  CHECK_THROWS_AS(SamuelEngine(A, Ideal(Q, 2, {R.parse("x + x*y")})), Error);
  CHECK_NOTHROW(SamuelEngine(A, Ideal(Q, 2, {R.parse("x^2"), R.parse("y")})));
}

TEST_CASE("nubar strategies") {
  const LocalRing A = corpus::cusp(Q);
  const Polynomial x = A.ring.var("x");
  const NubarResult c = nubar(A, A.maximal_ideal(), x, certified(corpus::cusp_certificate()));
  CHECK(c.value == R_(3, 2));
  CHECK(c.exact());
  CHECK(c.source == "certificate");
  CHECK(c.confirmed_by_limit);

  const Ring R(Q, {"x", "y"});
  const LocalRing P = LocalRing::at_origin(R, Ideal(Q, 2));
  const Ideal I(Q, 2, {R.parse("x^2"), R.parse("y^3")});
  const NubarResult m = nubar(P, I, R.parse("x*y"));
  CHECK(m.value == R_(5, 6));
  CHECK(m.source == "monomial");
  CHECK(nubar(P, I, R.zero()).value.is_infinite());
  CHECK(nubar(A, A.maximal_ideal(), A.ring.parse("x^2 - y^3")).value.is_infinite());

  const NubarResult lim = nubar(A, A.maximal_ideal(), x);
  CHECK(lim.status == NubarStatus::LowerBound);
  CHECK(lim.value == R_(3, 2));
}

TEST_CASE("certificates are checked") {
  const LocalRing A = corpus::cusp(Q);
  const Polynomial x = A.ring.var("x");
  const Ideal m = A.maximal_ideal();
  CHECK_THROWS_AS(nubar(A, m, x, certified({std::nullopt, {entry({3, 2}, 3)}})), Error);
  CHECK_THROWS_AS(nubar(A, m, x, certified({std::nullopt, {entry({1, 1}, 1)}})), Error);
  CHECK_THROWS_AS(nubar(A, m, x, certified({std::nullopt, {entry({3, 0}, 2)}})), Error);
  CHECK_THROWS_AS(nubar(A, m, x, certified({std::nullopt, {}})), Error);
  const Polynomial y = A.ring.var("y");
  // x -> y, y -> x moves the curve away from weighted homogeneity.
  CHECK_THROWS_AS(nubar(A, m, x, certified({std::vector<Polynomial>{y, x}, {entry({3, 2}, 2)}})), Error);
  CHECK_THROWS_AS(nubar(A, m, x, certified({std::vector<Polynomial>{x + A.ring.constant(1), y}, {entry({3, 2}, 2)}})),
                  Error);
  CHECK_THROWS_AS(nubar(A, m, x, certified({std::vector<Polynomial>{x, x}, {entry({3, 2}, 2)}})), Error);
}

TEST_CASE("limit envelope is monotone and bounded by the certificate") {
  const LocalRing A = corpus::cusp(Q);
  SamuelEngine E(A, A.maximal_ideal());
  for (const char* s : {"x", "y", "x + y^2", "x*y"}) {
    const Polynomial f = A.ring.parse(s);
    const NubarResult exact = E.nubar(f, certified(corpus::cusp_certificate()));
    ExtendedRational prev(0);
    for (unsigned N = 1; N <= 12; ++N) {
      const NubarResult lim = E.nubar_limit(f, N);
      CHECK(!(lim.value < prev));
      CHECK(!(exact.value < lim.value));
      prev = lim.value;
    }
  }
  for (const auto& mc : corpus::monomial_ideals()) {
    if (mc.ring.nvars() != 2) continue;
    const LocalRing P = LocalRing::at_origin(mc.ring, Ideal(Q, 2));
    SamuelEngine EP(P, mc.I);
    for (const char* s : {"x", "x*y", "y^2"}) {
      const Polynomial f = mc.ring.parse(s);
      CHECK(!(nubar_monomial(mc.I, f) < EP.nubar_limit(f, 6).value));
    }
  }
}

TEST_CASE("nubar scales with powers") {
  const LocalRing A = corpus::cusp(Q);
  SamuelEngine E(A, A.maximal_ideal());
  for (const char* s : {"x", "y", "x + y"}) {
    const Polynomial f = A.ring.parse(s);
    const NubarResult v = E.nubar(f, certified(corpus::cusp_certificate()));
    for (unsigned r = 1; r <= 3; ++r) {
      const NubarResult vr = E.nubar(f.pow(r), certified(corpus::cusp_certificate()));
      if (v.exact() && vr.exact()) CHECK(vr.value == ExtendedRational(v.value.finite() * Rational(long(r))));
    }
  }
}

TEST_CASE("graded pieces") {
  const LocalRing A = corpus::cusp(Q);
  const Ideal m = A.maximal_ideal();
  const NubarOptions cert = certified(corpus::cusp_certificate());
  CHECK(graded_piece_member(A, m, A.ring.var("x"), 1, true, cert));
  CHECK(!graded_piece_member(A, m, A.ring.var("y"), 1, true, cert));
  CHECK(graded_piece_member(A, m, A.ring.parse("x + 7*y"), 0, false));
  CHECK(graded_piece_member(A, m, A.ring.var("x"), 1, true));
  CHECK_THROWS_AS(graded_piece_member(A, m, A.ring.var("x"), Rational(3, 2), true), Error);
}

TEST_CASE("kernels of lambda") {
  const Ring R(Q, {"x", "y"});
  const KernelReport cusp = kernel_lambda(corpus::cusp(Q));
  CHECK(cusp.r == 1);
  CHECK(cusp.t == 1);
  CHECK(cusp.classification == KernelClass::Extremal);
  CHECK(cusp.basis.front() == R.var("x"));
  CHECK(cusp.method == KernelMethod::Monomial);

  const KernelReport node = kernel_lambda(hyper(R, "x^2 - y^2"));
  CHECK(node.r == 0);
  CHECK(node.classification == KernelClass::NonExtremal);

  const KernelReport reg = kernel_lambda(LocalRing::at_origin(R, Ideal(Q, 2)));
  CHECK(reg.r == 0);
  CHECK(reg.t == 0);
  CHECK(reg.classification == KernelClass::Regular);

  const Ring R2(Field::prime(2), {"x", "y"});
  const KernelReport n2 = kernel_lambda(hyper(R2, "x^2 - y^2"));
  CHECK(n2.classification == KernelClass::Extremal);
  CHECK(n2.basis.front() == R2.parse("x + y"));

  const Ring R3(Q, {"x", "y", "w"});
  const KernelReport xy = kernel_lambda(hyper(R3, "x*y"));
  CHECK(xy.t == 1);
  CHECK(xy.r == 0);

  CHECK_THROWS_AS(kernel_lambda(hyper(R, "x + y^2")), Error);
}

TEST_CASE("kernel of a full square over a non-closed point") {
  const Ring R(Field::prime(2), {"x", "y1", "y2"});
  const LocalRing eta(R, Ideal(R.field, 3, {R.parse("x^2 + y1^2*y2")}), PointSpec::prime(R.var_set({"x", "y1"}), 3));
  const KernelReport k = kernel_lambda(eta);
  CHECK(k.d == 1);
  CHECK(k.t == 1);
  CHECK(k.r == 0);
  const LocalRing eta2(R, Ideal(R.field, 3, {R.parse("x^2 + y1^2*y2^2")}), PointSpec::prime(R.var_set({"x", "y1"}), 3));
  const KernelReport k2 = kernel_lambda(eta2);
  CHECK(k2.r == 1);
  CHECK(k2.basis.front() == R.parse("x + y1*y2"));
}

TEST_CASE("kernel enumeration matches brute force and forms a subspace") {
  const Ring R(Field::prime(2), {"x", "y", "z"});
  const LocalRing A = LocalRing::at_origin(R, Ideal(R.field, 3, {R.parse("x^2 + y^2"), R.parse("y*z")}));
  const KernelReport k = kernel_lambda(A);
  CHECK(k.method == KernelMethod::Enumeration);
  CHECK(k.presentation_relative);
  CHECK(k.d == 1);
  CHECK(k.t == 2);
  CHECK(k.r == 1);
  CHECK(k.classification == KernelClass::NonExtremal);
  std::vector<Polynomial> cone;
  for (const auto& g : A.J.generators()) cone.push_back(initial_form(g));
  const std::size_t count = corpus::nilpotent_linear_forms(R.field, 3, A.point.vars, cone);
  CHECK(corpus::dimension_from_count(count, 2) == int(k.r));

  const Ring RQ(Q, {"x", "y", "z"});
  const LocalRing B = LocalRing::at_origin(RQ, Ideal(Q, 3, {RQ.parse("x^2 + y^2"), RQ.parse("y*z")}));
  CHECK_THROWS_AS(kernel_lambda(B), Error);
  KernelOptions partial;
  partial.allow_partial = true;
  const KernelReport p = kernel_lambda(B, partial);
  CHECK(p.method == KernelMethod::Partial);
  CHECK(p.classification == KernelClass::Unknown);
}

TEST_CASE("kernel dimension never exceeds the excess") {
  for (const auto& kc : corpus::kernel_corpus()) {
    const KernelReport k = kernel_lambda(kc.A);
    CHECK(k.r <= k.t);
  }
}

TEST_CASE("samuel slope") {
  const LocalRing A = corpus::cusp(Q);
  SamuelSlopeOptions o;
  o.nubar = certified(corpus::cusp_certificate());
  const SamuelSlopeResult s = samuel_slope(A, {{A.ring.var("x")}}, o);
  CHECK(s.lower_bound == R_(3, 2));
  CHECK(!s.exact);
  CHECK(s.classification == KernelClass::Extremal);

  const Ring R(Q, {"x", "y"});
  const LocalRing node = hyper(R, "x^2 - y^2");
  const SamuelSlopeResult n1 = samuel_slope(node, {});
  CHECK(n1.lower_bound == R_(1));
  CHECK(n1.exact);
  const SamuelSlopeResult n2 = samuel_slope(node, {{R.var("x")}, {R.var("y")}}, o);
  CHECK(n2.lower_bound == R_(1));
  CHECK(n2.exact);

  CHECK_THROWS_AS(samuel_slope(LocalRing::at_origin(R, Ideal(Q, 2)), {}), Error);
  CHECK_THROWS_AS(samuel_slope(A, {{A.ring.var("y")}}, o), Error);
}

TEST_CASE("lambda-sequence elements lie above one") {
  for (const auto& tc : corpus::theorem_corpus()) {
    if (tc.expected_class != KernelClass::Extremal) continue;
    const SamuelSlopeResult s = samuel_slope(tc.input.A, tc.input.candidates, tc.input.samuel);
    for (const auto& v : s.witness_values) CHECK(ExtendedRational(1) < v.value);
    CHECK(ExtendedRational(1) < s.lower_bound);
  }
}

TEST_CASE("translations improve a poor lambda-sequence") {
  const Ring R(Field::prime(2), {"z", "y1", "y2"});
  const LocalRing A = hyper(R, "z^2 + y1^2*y2^2 + y1^5");
  SamuelSlopeOptions o;
  o.nubar = certified({std::vector<Polynomial>{R.parse("z + y1*y2"), R.var("y1"), R.var("y2")}, {entry({5, 2, 2}, 2)}});
  o.auto_translate = false;
  CHECK(samuel_slope(A, {{R.var("z")}}, o).lower_bound == R_(2));
  o.auto_translate = true;
  const SamuelSlopeResult s = samuel_slope(A, {{R.var("z")}}, o);
  CHECK(s.lower_bound == R_(5, 2));
  CHECK(s.witness.front() == R.parse("z + y1*y2"));
}

TEST_CASE("reductions by dim A elements") {
  const LocalRing A = corpus::cusp(Q);
  CHECK(check_reduction_by_d(A, {A.ring.var("y")}));
  CHECK(!check_reduction_by_d(A, {A.ring.var("x")}));
  const Ring R(Q, {"x", "y"});
  CHECK(check_reduction_by_d(hyper(R, "x^2 - y^2"), {R.var("y")}));
  CHECK_THROWS_AS(check_reduction_by_d(A, {A.ring.var("x"), A.ring.var("y")}), Error);
}

TEST_CASE("tangent cones") {
  const LocalRing A = corpus::cusp(Q);
  const Ideal c = tangent_cone_ideal(A);
  REQUIRE(c.generators().size() == 1);
  CHECK(c.generators().front() == A.ring.parse("x^2"));
}
