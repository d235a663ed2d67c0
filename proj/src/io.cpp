#include "slopelab/io.hpp"

#include <fstream>
#include <sstream>

namespace slopelab {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(Errc::Parse, "job: " + what); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) schema_error(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Json poly_list(const std::vector<Polynomial>& v, const Ring& ring) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(ring.format(f));
  return a;
}

std::vector<Polynomial> polys_from_json(const Json& j, const Ring& ring) {
  if (!j.is_array()) schema_error("expected a list of polynomials");
  std::vector<Polynomial> out;
  for (const auto& x : j) out.push_back(polynomial_from_json(x, ring));
  return out;
}

std::string var_name(const Ring& ring, std::size_t i) { return ring.names.at(i); }

KernelClass kernel_class_from(const std::string& s) {
  for (auto c : {KernelClass::Regular, KernelClass::Extremal, KernelClass::NonExtremal, KernelClass::Unknown})
    if (s == to_string(c)) return c;
  schema_error("unknown kernel class '" + s + "'");
}

KernelMethod kernel_method_from(const std::string& s) {
  for (auto m : {KernelMethod::Monomial, KernelMethod::Factorization, KernelMethod::Enumeration, KernelMethod::Partial})
    if (s == to_string(m)) return m;
  schema_error("unknown kernel method '" + s + "'");
}

SlopeCase slope_case_from(const std::string& s) {
  for (auto c : {SlopeCase::A, SlopeCase::B1, SlopeCase::B2, SlopeCase::B3})
    if (s == to_string(c)) return c;
  schema_error("unknown slope case '" + s + "'");
}

NubarStrategy strategy_from(const std::string& s) {
  for (auto x : {NubarStrategy::Auto, NubarStrategy::Monomial, NubarStrategy::Certificate, NubarStrategy::Limit})
    if (s == to_string(x)) return x;
  schema_error("unknown nubar strategy '" + s + "'");
}

Json weighted_to_json(const std::vector<WeightedGenerator>& gens, const Ring& ring) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back({{"f", ring.format(g.f)}, {"weight", g.weight}});
  return a;
}

std::vector<WeightedGenerator> weighted_from_json(const Json& j, const Ring& ring) {
  if (!j.is_array()) schema_error("weighted generators must be a list");
  std::vector<WeightedGenerator> out;
  for (const auto& x : j) {
    const Json& w = require(x, "weight");
    if (!w.is_number_unsigned() || w.get<unsigned>() == 0) schema_error("weight must be a positive integer");
    out.push_back({polynomial_from_json(require(x, "f"), ring), w.get<unsigned>()});
  }
  return out;
}

std::vector<ExtendedRational> extended_list(const Json& j) {
  std::vector<ExtendedRational> out;
  for (const auto& x : j) out.push_back(extended_from_json(x));
  return out;
}

Json extended_list_json(const std::vector<ExtendedRational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

// ---------------------------------------------------------------- scalars

Json to_json(const Rational& r) { return r.to_string(); }
Json to_json(const ExtendedRational& e) { return e.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  schema_error("expected a rational as \"n/d\" or an integer");
}

ExtendedRational extended_from_json(const Json& j) {
  if (j.is_string()) return ExtendedRational::parse(j.get<std::string>());
  return ExtendedRational(rational_from_json(j));
}

Json ring_to_json(const Ring& ring) { return {{"vars", ring.names}, {"char", ring.field.characteristic()}}; }

Ring ring_from_json(const Json& j) {
  const Json& c = require(j, "char");
  if (!c.is_number_unsigned()) schema_error("char must be 0 or a prime");
  const auto p = c.get<std::uint64_t>();
  return Ring(p == 0 ? Field::rationals() : Field::prime(p), string_list(require(j, "vars"), "vars"));
}

Polynomial polynomial_from_json(const Json& j, const Ring& ring) {
  if (j.is_string()) return ring.parse(j.get<std::string>());
  if (j.is_number_integer()) return ring.constant(Rational(j.get<long>()));
  schema_error("polynomials are written as strings");
}

PointSpec point_from_json(const Json& j, const Ring& ring) {
  if (j.is_string() && j.get<std::string>() == "origin") return PointSpec::origin(ring.nvars());
  return PointSpec::prime(ring.var_set(string_list(j, "point")), ring.nvars());
}

Json point_to_json(const PointSpec& p, const Ring& ring) {
  if (p.is_closed(ring.nvars())) return "origin";
  Json a = Json::array();
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (p.vars.test(i)) a.push_back(ring.names[i]);
  return a;
}

// ---------------------------------------------------------------- reports

Json to_json(const NubarResult& r) {
  return {{"value", to_json(r.value)},
          {"status", to_string(r.status)},
          {"source", r.source},
          {"confirmed_by_limit", r.confirmed_by_limit},
          {"witness_n", r.witness_n}};
}

NubarResult nubar_from_json(const Json& j) {
  NubarResult r;
  r.value = extended_from_json(require(j, "value"));
  const auto status = require(j, "status").get<std::string>();
  if (status != "exact" && status != "lower-bound") schema_error("unknown status '" + status + "'");
  r.status = status == "exact" ? NubarStatus::Exact : NubarStatus::LowerBound;
  r.source = require(j, "source").get<std::string>();
  r.confirmed_by_limit = require(j, "confirmed_by_limit").get<bool>();
  r.witness_n = require(j, "witness_n").get<unsigned>();
  return r;
}

Json to_json(const NewtonPolyhedron& N, const Ring& ring) {
  Json facets = Json::array();
  for (const auto& f : N.facets()) {
    Json w = Json::array();
    for (const auto& x : f.valuation.weights()) w.push_back(to_json(x));
    facets.push_back({{"weights", w}, {"threshold", to_json(f.threshold)}});
  }
  Json gens = Json::array();
  for (const auto& m : N.generators()) gens.push_back(ring.format(Polynomial::term(ring.field, m, Rational(1))));
  return {{"generators", gens}, {"facets", facets}};
}

Json to_json(const KernelReport& k, const Ring& ring) {
  return {{"basis", poly_list(k.basis, ring)},
          {"r", k.r},
          {"t", k.t},
          {"d", k.d},
          {"embedding_dimension", k.embedding_dimension},
          {"class", to_string(k.classification)},
          {"method", to_string(k.method)},
          {"presentation_relative", k.presentation_relative}};
}

KernelReport kernel_from_json(const Json& j, const Ring& ring) {
  KernelReport k;
  k.basis = polys_from_json(require(j, "basis"), ring);
  k.r = require(j, "r").get<std::size_t>();
  k.t = require(j, "t").get<std::size_t>();
  k.d = require(j, "d").get<std::size_t>();
  k.embedding_dimension = require(j, "embedding_dimension").get<std::size_t>();
  k.classification = kernel_class_from(require(j, "class").get<std::string>());
  k.method = kernel_method_from(require(j, "method").get<std::string>());
  k.presentation_relative = require(j, "presentation_relative").get<bool>();
  if (k.r != k.basis.size()) schema_error("kernel dimension does not match its basis");
  return k;
}

Json to_json(const SamuelSlopeResult& s, const Ring& ring) {
  Json values = Json::array();
  for (const auto& v : s.witness_values) values.push_back(to_json(v));
  return {{"lower_bound", to_json(s.lower_bound)},
          {"exact", s.exact},
          {"class", to_string(s.classification)},
          {"witness_sequence", poly_list(s.witness, ring)},
          {"witness_values", values},
          {"sequences_tried", s.sequences_tried}};
}

SamuelSlopeResult samuel_slope_from_json(const Json& j, const Ring& ring) {
  SamuelSlopeResult s;
  s.lower_bound = extended_from_json(require(j, "lower_bound"));
  s.exact = require(j, "exact").get<bool>();
  s.classification = kernel_class_from(require(j, "class").get<std::string>());
  s.witness = polys_from_json(require(j, "witness_sequence"), ring);
  for (const auto& v : require(j, "witness_values")) s.witness_values.push_back(nubar_from_json(v));
  s.sequences_tried = require(j, "sequences_tried").get<std::size_t>();
  return s;
}

Json to_json(const SlopeReport& s, const Ring& ring) {
  Json fibers = Json::array();
  for (const auto& f : s.fibers)
    fibers.push_back({{"var", var_name(ring, f.var)},
                      {"ratios", extended_list_json(f.ratios)},
                      {"last", to_json(f.last)},
                      {"case", to_string(f.case_label)}});
  Json transcript = Json::array();
  for (const auto& t : s.transcript)
    transcript.push_back({{"round", t.round},
                          {"var", var_name(ring, t.var)},
                          {"shift", ring.format(t.shift)},
                          {"slope_before", to_json(t.slope_before)},
                          {"slope_after", to_json(t.slope_after)}});
  return {{"Hord", s.hord ? to_json(*s.hord) : Json(nullptr)},
          {"elim_ord", to_json(s.elimination_order)},
          {"slope", to_json(s.slope)},
          {"case", to_string(s.case_label)},
          {"normal_form", s.normal_form},
          {"status", s.normal_form ? "exact" : "lower-bound"},
          {"flag", s.degenerate ? "degenerate" : "none"},
          {"intermediate_violation", s.intermediate_violation},
          {"elimination",
           {{"label", s.elimination_approximate ? "approximate generating set (exact on corpus)" : "user-supplied"},
            {"generators", weighted_to_json(s.elimination, ring)}}},
          {"fibers", fibers},
          {"transcript", transcript},
          {"equations", poly_list(s.equations, ring)}};
}

SlopeReport slope_from_json(const Json& j, const Ring& ring) {
  SlopeReport s;
  const Json& h = require(j, "Hord");
  if (!h.is_null()) s.hord = extended_from_json(h);
  s.elimination_order = extended_from_json(require(j, "elim_ord"));
  s.slope = extended_from_json(require(j, "slope"));
  s.case_label = slope_case_from(require(j, "case").get<std::string>());
  s.normal_form = require(j, "normal_form").get<bool>();
  s.degenerate = require(j, "flag").get<std::string>() == "degenerate";
  s.intermediate_violation = require(j, "intermediate_violation").get<bool>();
  const Json& elim = require(j, "elimination");
  s.elimination_approximate = require(elim, "label").get<std::string>() != "user-supplied";
  s.elimination = weighted_from_json(require(elim, "generators"), ring);
  for (const auto& f : require(j, "fibers")) {
    FiberOrders fo;
    fo.var = ring.index_of(require(f, "var").get<std::string>());
    fo.ratios = extended_list(require(f, "ratios"));
    fo.last = extended_from_json(require(f, "last"));
    fo.case_label = slope_case_from(require(f, "case").get<std::string>());
    s.fibers.push_back(std::move(fo));
  }
  for (const auto& t : require(j, "transcript"))
    s.transcript.push_back({require(t, "round").get<unsigned>(), ring.index_of(require(t, "var").get<std::string>()),
                            polynomial_from_json(require(t, "shift"), ring),
                            extended_from_json(require(t, "slope_before")),
                            extended_from_json(require(t, "slope_after"))});
  s.equations = polys_from_json(require(j, "equations"), ring);
  return s;
}

Json to_json(const TheoremCheckReport& c, const Ring& ring) {
  Json j = {{"class", to_string(c.classification)},
            {"kernel", to_json(c.kernel, ring)},
            {"Hord", to_json(c.hord)},
            {"ord", to_json(c.ord)},
            {"hord_method", c.hord_method},
            {"samuel_exact", c.samuel_exact},
            {"passed", c.passed},
            {"failures", c.failures}};
  if (c.slope) j["slope_report"] = to_json(*c.slope, ring);
  if (c.samuel) j["samuel_slope"] = to_json(*c.samuel, ring);
  return j;
}

TheoremCheckReport check_from_json(const Json& j, const Ring& ring) {
  TheoremCheckReport c;
  c.classification = kernel_class_from(require(j, "class").get<std::string>());
  c.kernel = kernel_from_json(require(j, "kernel"), ring);
  c.hord = extended_from_json(require(j, "Hord"));
  c.ord = extended_from_json(require(j, "ord"));
  c.hord_method = require(j, "hord_method").get<std::string>();
  c.samuel_exact = require(j, "samuel_exact").get<bool>();
  c.passed = require(j, "passed").get<bool>();
  c.failures = string_list(require(j, "failures"), "failures");
  if (j.contains("slope_report")) c.slope = slope_from_json(j.at("slope_report"), ring);
  if (j.contains("samuel_slope")) c.samuel = samuel_slope_from_json(j.at("samuel_slope"), ring);
  return c;
}

Json reparse_report(const Json& report) {
  const std::string kind = require(report, "report").get<std::string>();
  const Ring ring = ring_from_json(require(report, "ring"));
  Json out = {{"report", kind}, {"ring", ring_to_json(ring)}};
  if (kind == "nubar") {
    out["nubar"] = to_json(nubar_from_json(require(report, "nubar")));
    if (report.contains("polyhedron")) out["polyhedron"] = report.at("polyhedron");
  } else if (kind == "kernel") {
    out["kernel"] = to_json(kernel_from_json(require(report, "kernel"), ring), ring);
  } else if (kind == "samuel-slope") {
    out["kernel"] = to_json(kernel_from_json(require(report, "kernel"), ring), ring);
    out["slope"] = to_json(samuel_slope_from_json(require(report, "slope"), ring), ring);
  } else if (kind == "slope") {
    out["slope"] = to_json(slope_from_json(require(report, "slope"), ring), ring);
    if (report.contains("samuel_slope"))
      out["samuel_slope"] = to_json(samuel_slope_from_json(report.at("samuel_slope"), ring), ring);
  } else if (kind == "check-theorems") {
    out["check"] = to_json(check_from_json(require(report, "check"), ring), ring);
  } else {
    schema_error("unknown report kind '" + kind + "'");
  }
  for (const char* key : {"point", "error", "reduction_by_d"})
    if (report.contains(key)) out[key] = report.at(key);
  return out;
}

// -------------------------------------------------------------------- jobs

ValuationCertificate certificate_from_json(const Json& j, const Ring& ring) {
  ValuationCertificate cert;
  if (j.contains("coordinate_change")) {
    const Json& cc = j.at("coordinate_change");
    if (!cc.is_object()) schema_error("coordinate_change maps variable names to images");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring.nvars(); ++i) images.push_back(ring.var(ring.names[i]));
    for (auto it = cc.begin(); it != cc.end(); ++it) images[ring.index_of(it.key())] = polynomial_from_json(it.value(), ring);
    cert.coordinate_change = std::move(images);
  }
  const Json& vals = require(j, "valuations");
  if (!vals.is_array() || vals.empty()) schema_error("valuations must be a non-empty list");
  for (const auto& v : vals) {
    CertificateEntry e;
    const Json& w = require(v, "weights");
    if (w.is_object()) {
      e.weights.assign(ring.nvars(), Rational(0));
      std::vector<bool> set(ring.nvars(), false);
      for (auto it = w.begin(); it != w.end(); ++it) {
        const auto idx = ring.index_of(it.key());
        e.weights[idx] = rational_from_json(it.value());
        set[idx] = true;
      }
      for (std::size_t i = 0; i < set.size(); ++i)
        if (!set[i]) schema_error("weight for variable '" + ring.names[i] + "' missing");
    } else if (w.is_array()) {
      for (const auto& x : w) e.weights.push_back(rational_from_json(x));
    } else {
      schema_error("weights must be a list or an object");
    }
    e.ideal_value = rational_from_json(require(v, "ideal_value"));
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

Job job_from_json(const Json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  const Json& schema = require(j, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kJobSchema)
    schema_error(std::string("schema must be \"") + kJobSchema + "\"");
  Job job(ring_from_json(require(j, "ring")));
  const Ring& ring = job.ring;

  if (j.contains("point")) job.point = point_from_json(j.at("point"), ring);
  if (j.contains("local_ring")) {
    const Json& lr = j.at("local_ring");
    std::vector<Polynomial> gens;
    if (lr.contains("ideal")) gens = polys_from_json(lr.at("ideal"), ring);
    PointSpec pt = lr.contains("point") ? point_from_json(lr.at("point"), ring)
                                        : job.point.value_or(PointSpec::origin(ring.nvars()));
    job.local_ring.emplace(ring, Ideal(ring.field, ring.nvars(), std::move(gens)), pt);
  }
  if (j.contains("nubar")) {
    const Json& nb = j.at("nubar");
    job.nubar_f = polynomial_from_json(require(nb, "f"), ring);
    if (nb.contains("ideal")) job.nubar_ideal = Ideal(ring.field, ring.nvars(), polys_from_json(nb.at("ideal"), ring));
    if (nb.contains("strategy")) job.nubar.strategy = strategy_from(nb.at("strategy").get<std::string>());
    if (nb.contains("certificate")) job.nubar.certificate = certificate_from_json(nb.at("certificate"), ring);
  }
  if (j.contains("presentation")) {
    const Json& pr = j.at("presentation");
    VariableSplit split;
    split.base = ring.var_set(string_list(require(pr, "base"), "base"));
    for (const auto& f : require(pr, "fibers")) {
      const auto var = ring.index_of(require(f, "var").get<std::string>());
      split.fiber.set(var);
      job.fibers.push_back({var, polynomial_from_json(require(f, "g"), ring)});
    }
    split.validate(ring.nvars());
    job.split = split;
    if (pr.contains("elimination")) job.elimination = weighted_from_json(pr.at("elimination"), ring);
  }
  if (j.contains("samuel")) {
    job.has_samuel = true;
    const Json& s = j.at("samuel");
    if (s.contains("candidates"))
      for (const auto& seq : s.at("candidates")) job.candidates.push_back(polys_from_json(seq, ring));
    if (s.contains("certificate")) {
      job.samuel.nubar.certificate = certificate_from_json(s.at("certificate"), ring);
      job.samuel.nubar.strategy = NubarStrategy::Certificate;
    }
    if (s.contains("auto_translate")) job.samuel.auto_translate = s.at("auto_translate").get<bool>();
    if (s.contains("allow_partial")) job.samuel.kernel.allow_partial = s.at("allow_partial").get<bool>();
  }
  if (j.contains("kappa")) job.kappa = polys_from_json(j.at("kappa"), ring);
  return job;
}

Job load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open job file " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, std::string("job file is not valid JSON: ") + e.what());
  }
  return job_from_json(j);
}

}  // namespace slopelab
