#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slopelab/elimpres.hpp"

namespace slopelab {

using Json = nlohmann::json;  // std::map objects: keys come out sorted

inline constexpr const char* kJobSchema = "slopelab-job/1";

// Scalars.  Integers print as "n", other rationals as "n/d"; both parse.
Json to_json(const Rational& r);
Json to_json(const ExtendedRational& e);
Rational rational_from_json(const Json& j);
ExtendedRational extended_from_json(const Json& j);

Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, const Ring& ring);
/// "origin" or a list of variable names.
PointSpec point_from_json(const Json& j, const Ring& ring);
Json point_to_json(const PointSpec& p, const Ring& ring);

Json to_json(const NubarResult& r);
NubarResult nubar_from_json(const Json& j);
Json to_json(const NewtonPolyhedron& N, const Ring& ring);
Json to_json(const KernelReport& k, const Ring& ring);
KernelReport kernel_from_json(const Json& j, const Ring& ring);
Json to_json(const SamuelSlopeResult& s, const Ring& ring);
SamuelSlopeResult samuel_slope_from_json(const Json& j, const Ring& ring);
Json to_json(const SlopeReport& s, const Ring& ring);
SlopeReport slope_from_json(const Json& j, const Ring& ring);
Json to_json(const TheoremCheckReport& c, const Ring& ring);
TheoremCheckReport check_from_json(const Json& j, const Ring& ring);

/// Re-parses an emitted report document and serializes it again.
Json reparse_report(const Json& report);

/// A parsed job file.  Sections are optional; each command checks the ones
/// it needs.
struct Job {
  explicit Job(Ring r) : ring(std::move(r)) {}

  Ring ring;
  std::optional<LocalRing> local_ring;
  std::optional<Polynomial> nubar_f;
  std::optional<Ideal> nubar_ideal;
  NubarOptions nubar{};
  std::optional<VariableSplit> split;
  std::vector<FiberInput> fibers;
  std::optional<std::vector<WeightedGenerator>> elimination;
  std::optional<PointSpec> point;
  std::vector<std::vector<Polynomial>> candidates;
  SamuelSlopeOptions samuel{};
  bool has_samuel = false;
  std::vector<Polynomial> kappa;
};

/// Throws Parse or InvalidArgument on schema violations.
Job job_from_json(const Json& j);
Job load_job(const std::string& path);

ValuationCertificate certificate_from_json(const Json& j, const Ring& ring);

}  // namespace slopelab
