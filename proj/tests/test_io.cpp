#include <doctest.h>

#include "germs.hpp"
#include "slopelab/io.hpp"

using namespace slopelab;

namespace {

Json parse_job(const char* text) { return Json::parse(text); }

Json wrap(const char* kind, const Ring& ring, const char* key, Json body) {
  return {{"report", kind}, {"ring", ring_to_json(ring)}, {key, std::move(body)}};
}

}  // namespace

TEST_CASE("scalars") {
  CHECK(to_json(Rational(2)) == Json("2"));
  CHECK(to_json(Rational(3, 2)) == Json("3/2"));
  CHECK(to_json(ExtendedRational::infinity()) == Json("inf"));
  CHECK(rational_from_json(Json("2/1")) == Rational(2));
  CHECK(rational_from_json(Json(4)) == Rational(4));
  CHECK(extended_from_json(Json("inf")).is_infinite());
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), Error);
}

TEST_CASE("job parsing") {
  const Job job = job_from_json(parse_job(R"({
    "schema": "slopelab-job/1",
    "ring": {"vars": ["z", "y"], "char": 2},
    "local_ring": {"ideal": ["z^2 - y^3"], "point": "origin"},
    "presentation": {"base": ["y"], "fibers": [{"var": "z", "g": "z^2 - y^3"}],
                     "elimination": [{"f": "y^2", "weight": 1}]},
    "samuel": {"candidates": [["z"]], "auto_translate": false,
               "certificate": {"valuations": [{"weights": ["3", "2"], "ideal_value": 2}]}},
    "kappa": ["y"]
  })"));
  CHECK(job.ring.field.characteristic() == 2);
  REQUIRE(job.local_ring);
  CHECK(job.local_ring->J.generators().size() == 1);
  REQUIRE(job.split);
  CHECK(job.split->fiber.test(0));
  REQUIRE(job.elimination);
  CHECK(job.elimination->front().weight == 1);
  CHECK(job.has_samuel);
  CHECK(!job.samuel.auto_translate);
  CHECK(job.samuel.nubar.strategy == NubarStrategy::Certificate);
  CHECK(job.samuel.nubar.certificate->entries.front().weights == std::vector<Rational>{3, 2});
  CHECK(job.candidates.size() == 1);
  CHECK(job.kappa.size() == 1);
}

TEST_CASE("certificates with coordinate changes") {
  const Ring R(Field::prime(2), {"z", "y1", "y2"});
  const ValuationCertificate c = certificate_from_json(Json::parse(R"({
    "coordinate_change": {"z": "z + y1*y2"},
    "valuations": [{"weights": {"z": "5", "y1": "2", "y2": "2"}, "ideal_value": "2"}]
  })"), R);
  REQUIRE(c.coordinate_change);
  CHECK((*c.coordinate_change)[0] == R.parse("z + y1*y2"));
  CHECK((*c.coordinate_change)[1] == R.var("y1"));
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"valuations": [{"weights": {"z": "5"}, "ideal_value": "2"}]})"), R),
                  Error);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"valuations": []})"), R), Error);
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS(job_from_json(parse_job(R"({"ring": {"vars": ["x"], "char": 0}})")), Error);
  CHECK_THROWS_AS(job_from_json(parse_job(R"({"schema": "slopelab-job/2", "ring": {"vars": ["x"], "char": 0}})")), Error);
  CHECK_THROWS_AS(job_from_json(parse_job(R"({"schema": "slopelab-job/1"})")), Error);
  CHECK_THROWS_AS(job_from_json(parse_job(R"({"schema": "slopelab-job/1", "ring": {"vars": ["x"], "char": 4}})")), Error);
  CHECK_THROWS_AS(job_from_json(parse_job(
                      R"({"schema": "slopelab-job/1", "ring": {"vars": ["x"], "char": 0}, "nubar": {"f": "w"}})")),
                  Error);
  CHECK_THROWS_AS(job_from_json(parse_job(R"({"schema": "slopelab-job/1", "ring": {"vars": ["x", "y"], "char": 0},
      "presentation": {"base": ["x"], "fibers": [{"var": "x", "g": "x^2"}]}})")),
                  Error);
  CHECK_THROWS_AS(load_job("/nonexistent/job.json"), Error);
}

TEST_CASE("reports survive a re-parse") {
  const LocalRing A = corpus::cusp(Field::prime(2));
  const Ring& R = A.ring;

  NubarOptions o;
  o.strategy = NubarStrategy::Certificate;
  o.certificate = corpus::cusp_certificate();
  const Json nb = wrap("nubar", R, "nubar", to_json(nubar(A, A.maximal_ideal(), R.var("x"), o)));
  CHECK(reparse_report(nb) == nb);

  const Json kr = wrap("kernel", R, "kernel", to_json(kernel_lambda(A), R));
  CHECK(reparse_report(kr) == kr);

  SamuelSlopeOptions so;
  so.nubar = o;
  Json ss = wrap("samuel-slope", R, "slope", to_json(samuel_slope(A, {{R.var("x")}}, so), R));
  ss["kernel"] = to_json(kernel_lambda(A), R);
  CHECK(reparse_report(ss) == ss);

  const Ring W(Field::prime(2), {"z", "y1", "y2"});
  VariableSplit wsplit;
  wsplit.fiber.set(0);
  wsplit.base.set(1);
  wsplit.base.set(2);
  const SlopeReport cleaned = clean(build_p_presentation(W.parse("z^2 + y1^2*y2^2 + y1^5"), 0, wsplit), PointSpec::origin(3));
  const Json sl = wrap("slope", W, "slope", to_json(cleaned, W));
  CHECK(reparse_report(sl) == sl);
  CHECK(sl["slope"]["Hord"] == "5/2");
  CHECK(sl["slope"]["transcript"].size() == 1);

  for (const auto& tc : corpus::theorem_corpus()) {
    const Json ck = wrap("check-theorems", tc.input.A.ring, "check", to_json(cross_check_theorems(tc.input), tc.input.A.ring));
    CHECK(reparse_report(ck) == ck);
  }

  CHECK_THROWS_AS(reparse_report(wrap("mystery", R, "x", Json::object())), Error);
  Json broken = nb;
  broken["nubar"].erase("status");
  CHECK_THROWS_AS(reparse_report(broken), Error);
}

TEST_CASE("serialization is deterministic") {
  const Ring W(Field::prime(2), {"z", "y1", "y2"});
  VariableSplit s;
  s.fiber.set(0);
  s.base.set(1);
  s.base.set(2);
  const Polynomial g = W.parse("z^2 + y1^2*y2^2 + y1^5");
  const std::string a = to_json(clean(build_p_presentation(g, 0, s), PointSpec::origin(3)), W).dump(2);
  const std::string b = to_json(clean(build_p_presentation(g, 0, s), PointSpec::origin(3)), W).dump(2);
  CHECK(a == b);
  CHECK(a.find("\"Hord\"") < a.find("\"case\""));
}
