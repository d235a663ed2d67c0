#include "germs.hpp"

namespace slopelab::corpus {

namespace {

Ring ring_of(const Field& field, std::vector<std::string> vars) { return Ring(field, std::move(vars)); }

LocalRing hypersurface(const Ring& R, const std::string& g, std::optional<std::vector<std::string>> prime = {}) {
  Ideal J(R.field, R.nvars(), {R.parse(g)});
  PointSpec pt = prime ? PointSpec::prime(R.var_set(*prime), R.nvars()) : PointSpec::origin(R.nvars());
  return LocalRing(R, std::move(J), pt);
}

VariableSplit split_of(const Ring& R, const std::vector<std::string>& fiber) {
  VariableSplit s;
  s.fiber = R.var_set(fiber);
  for (std::size_t i = 0; i < R.nvars(); ++i)
    if (!s.fiber.test(i)) s.base.set(i);
  return s;
}

SamuelSlopeOptions with_certificate(ValuationCertificate cert) {
  SamuelSlopeOptions o;
  o.nubar.strategy = NubarStrategy::Certificate;
  o.nubar.certificate = std::move(cert);
  return o;
}

CertificateEntry entry(std::vector<long> weights, long value) {
  CertificateEntry e;
  for (long w : weights) e.weights.emplace_back(w);
  e.ideal_value = Rational(value);
  return e;
}

}  // namespace

LocalRing cusp(const Field& field) { return hypersurface(ring_of(field, {"x", "y"}), "x^2 - y^3"); }

ValuationCertificate cusp_certificate() { return {std::nullopt, {entry({3, 2}, 2)}}; }

Ring whitney_ring(std::uint64_t p) { return ring_of(Field::prime(p), {"x", "y1", "y2"}); }

Polynomial whitney(std::uint64_t p) {
  const Ring R = whitney_ring(p);
  return R.var("x").pow(unsigned(p)) - R.var("y1").pow(unsigned(p)) * R.var("y2");
}

std::vector<MonomialCase> monomial_ideals() {
  std::vector<MonomialCase> out;
  auto add = [&](std::string name, std::vector<std::string> vars, std::vector<std::string> gens) {
    Ring R = ring_of(Field::rationals(), std::move(vars));
    std::vector<Polynomial> g;
    for (const auto& s : gens) g.push_back(R.parse(s));
    Ideal I(R.field, R.nvars(), std::move(g));
    out.push_back({std::move(name), std::move(R), std::move(I)});
  };
  add("<x^2, y^3>", {"x", "y"}, {"x^2", "y^3"});
  add("<x, y>", {"x", "y"}, {"x", "y"});
  add("<x^2*y, x*y^2>", {"x", "y"}, {"x^2*y", "x*y^2"});
  add("<x^3, x*y, y^4>", {"x", "y"}, {"x^3", "x*y", "y^4"});
  add("<x*y, y*z, x*z>", {"x", "y", "z"}, {"x*y", "y*z", "x*z"});
  add("<x^2, y^3, z^4, x*y*z>", {"x", "y", "z"}, {"x^2", "y^3", "z^4", "x*y*z"});
  return out;
}

std::vector<KernelCase> kernel_corpus() {
  const Field Q = Field::rationals();
  std::vector<KernelCase> out;
  out.push_back({"cusp char 0", cusp(Q), 1, KernelClass::Extremal, 5});
  out.push_back({"cusp char 2", cusp(Field::prime(2)), 1, KernelClass::Extremal, 2});
  out.push_back({"node char 0", hypersurface(ring_of(Q, {"x", "y"}), "x^2 - y^2"), 1, KernelClass::NonExtremal, 5});
  out.push_back({"node char 3", hypersurface(ring_of(Field::prime(3), {"x", "y"}), "x^2 - y^2"), 1,
                 KernelClass::NonExtremal, 3});
  out.push_back({"x^2 - y^2 char 2", hypersurface(ring_of(Field::prime(2), {"x", "y"}), "x^2 - y^2"), 1,
                 KernelClass::Extremal, 2});
  {
    Ring R = ring_of(Q, {"x", "y"});
    out.push_back({"regular k[x,y]", LocalRing::at_origin(R, Ideal(Q, 2)), 0, KernelClass::Regular, 5});
  }
  out.push_back({"<xy> in 3 variables", hypersurface(ring_of(Q, {"x", "y", "w"}), "x*y"), 1,
                 KernelClass::NonExtremal, 5});
  return out;
}

std::vector<TheoremCase> theorem_corpus() {
  const Field Q = Field::rationals();
  std::vector<TheoremCase> out;
  auto add = [&](std::string name, LocalRing A, const std::string& fiber, SamuelSlopeOptions samuel,
                 std::vector<std::vector<std::string>> candidates, KernelClass cls, ExtendedRational hord,
                 ExtendedRational ord, bool exact) {
    const Ring& R = A.ring;
    TheoremCheckInput in{A, split_of(R, {fiber}), {{R.index_of(fiber), A.J.generators().front()}}, std::nullopt,
                         {}, std::move(samuel), 16};
    for (const auto& seq : candidates) {
      std::vector<Polynomial> s;
      for (const auto& f : seq) s.push_back(R.parse(f));
      in.candidates.push_back(std::move(s));
    }
    out.push_back({std::move(name), std::move(in), cls, hord, ord, exact});
  };

  // Non-extremal germs.
  add("node char 0", hypersurface(ring_of(Q, {"x", "y"}), "x^2 - y^2"), "x", {}, {}, KernelClass::NonExtremal, 1, 1,
      false);
  add("node char 3", hypersurface(ring_of(Field::prime(3), {"x", "y"}), "x^2 - y^2"), "x", {}, {},
      KernelClass::NonExtremal, 1, 1, false);
  for (std::uint64_t p : {2, 3, 5}) {
    const Ring R = whitney_ring(p);
    add("whitney p=" + std::to_string(p) + " at <x,y1>",
        LocalRing(R, Ideal(R.field, 3, {whitney(p)}), PointSpec::prime(R.var_set({"x", "y1"}), 3)), "x", {}, {},
        KernelClass::NonExtremal, 1, Rational(long(p), long(p - 1)), false);
  }

  // Extremal germs.
  add("cusp char 2", cusp(Field::prime(2)), "x", with_certificate(cusp_certificate()), {{"x"}},
      KernelClass::Extremal, Rational(3, 2), 2, true);
  add("cusp char 0", cusp(Q), "x", with_certificate(cusp_certificate()), {{"x"}}, KernelClass::Extremal,
      Rational(3, 2), Rational(3, 2), false);
  add("cusp char 3", cusp(Field::prime(3)), "x", with_certificate(cusp_certificate()), {{"x"}},
      KernelClass::Extremal, Rational(3, 2), Rational(3, 2), false);
  for (std::uint64_t p : {2, 3, 5}) {
    const Ring R = whitney_ring(p);
    const long q = long(p);
    add("whitney p=" + std::to_string(p) + " at origin", LocalRing::at_origin(R, Ideal(R.field, 3, {whitney(p)})),
        "x", with_certificate({std::nullopt, {entry({q + 1, q, q}, q)}}), {{"x"}}, KernelClass::Extremal,
        Rational(q + 1, q), Rational(q, q - 1), true);
  }
  {
    const Ring R = ring_of(Field::prime(2), {"z", "y1", "y2"});
    ValuationCertificate cert{std::vector<Polynomial>{R.parse("z + y1*y2"), R.var("y1"), R.var("y2")},
                              {entry({5, 2, 2}, 2)}};
    add("z^2 + y1^2*y2^2 + y1^5 char 2", hypersurface(R, "z^2 + y1^2*y2^2 + y1^5"), "z",
        with_certificate(std::move(cert)), {{"z"}}, KernelClass::Extremal, Rational(5, 2), 4, true);
  }
  return out;
}

}  // namespace slopelab::corpus
