#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "slopelab/io.hpp"

using namespace slopelab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInexact = 2;

struct Flags {
  std::string job_path;
  bool json = false;
  bool require_exact = false;
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_rounds;
  std::string filter;
  bool inject_failure = false;
};

struct Outcome {
  Json report;
  std::string text;
  bool exact = true;
  bool failed = false;
};

Json envelope(const char* kind, const Job& job, const PointSpec& at) {
  return {{"report", kind}, {"ring", ring_to_json(job.ring)}, {"point", point_to_json(at, job.ring)}};
}

const LocalRing& need_local_ring(const Job& job) {
  if (!job.local_ring) throw Error(Errc::InvalidArgument, "job has no local_ring section");
  return *job.local_ring;
}

void need_presentation(const Job& job) {
  if (!job.split || job.fibers.empty()) throw Error(Errc::InvalidArgument, "job has no presentation section");
}

void apply_flags(Job& job, const Flags& flags) {
  if (flags.max_n) job.nubar.max_n = job.samuel.nubar.max_n = *flags.max_n;
}

LocalRing ring_or_default(const Job& job) {
  if (job.local_ring) return *job.local_ring;
  return LocalRing::at_origin(job.ring, Ideal(job.ring.field, job.ring.nvars()));
}

Outcome run_nubar(const Job& job) {
  if (!job.nubar_f) throw Error(Errc::InvalidArgument, "job has no nubar section");
  const LocalRing A = ring_or_default(job);
  const Ideal I = job.nubar_ideal.value_or(A.maximal_ideal());
  const NubarResult r = nubar(A, I, *job.nubar_f, job.nubar);
  Outcome out;
  out.report = envelope("nubar", job, A.point);
  out.report["nubar"] = to_json(r);
  if (A.J.is_zero() && I.is_monomial() && !I.is_zero() && I.nvars() <= kNewtonMaxVars) {
    try {
      out.report["polyhedron"] = to_json(build_polyhedron(I), job.ring);
    } catch (const Error&) {
      // unit ideal: no facets to show
    }
  }
  out.exact = r.exact();
  out.text = "nubar(" + job.ring.format(*job.nubar_f) + ") = " + r.value.to_string() + " [" + to_string(r.status) +
             ", " + r.source + "]\n";
  return out;
}

std::string slope_text(const SlopeReport& s, const Ring& ring) {
  std::string t = "H-ord = " + (s.hord ? s.hord->to_string() : std::string("not reached")) + "\n";
  t += "slope = " + s.slope.to_string() + ", case " + to_string(s.case_label) + "\n";
  t += "elimination order = " + s.elimination_order.to_string() +
       (s.elimination_approximate ? " (approximate generating set)" : " (user-supplied)") + "\n";
  for (const auto& tr : s.transcript)
    t += "round " + std::to_string(tr.round) + ": " + ring.names[tr.var] + " -> " + ring.names[tr.var] + " + " +
         ring.format(tr.shift) + ", slope " + tr.slope_before.to_string() + " -> " + tr.slope_after.to_string() + "\n";
  for (const auto& h : s.equations) t += "equation: " + ring.format(h) + "\n";
  if (s.degenerate) t += "flag: degenerate (non-reduced)\n";
  if (s.intermediate_violation) t += "note: an intermediate coefficient lies below the elimination order\n";
  return t;
}

Outcome run_slope(const Job& job, const Flags& flags) {
  need_presentation(job);
  const PointSpec at = job.point.value_or(job.local_ring ? job.local_ring->point : PointSpec::origin(job.ring.nvars()));
  const PPresentation P = build_p_presentation(job.fibers, *job.split, job.elimination);
  Outcome out;
  out.report = envelope("slope", job, at);
  SlopeReport s;
  try {
    s = clean(P, at, flags.max_rounds.value_or(16));
  } catch (const RoundsExhaustedError& e) {
    s = e.best();
    out.exact = false;
    out.text = std::string("warning: ") + e.what() + "; slope is a lower bound\n";
  }
  out.report["slope"] = to_json(s, job.ring);
  out.text += slope_text(s, job.ring);
  if (job.has_samuel) {
    const SamuelSlopeResult r = samuel_slope(need_local_ring(job), job.candidates, job.samuel);
    out.report["samuel_slope"] = to_json(r, job.ring);
    out.text += "Samuel slope " + std::string(r.exact ? "= " : ">= ") + r.lower_bound.to_string() + "\n";
  }
  return out;
}

Outcome run_kernel(const Job& job) {
  const LocalRing& A = need_local_ring(job);
  const KernelReport k = kernel_lambda(A, job.samuel.kernel);
  Outcome out;
  out.report = envelope("kernel", job, A.point);
  out.report["kernel"] = to_json(k, job.ring);
  out.exact = k.method != KernelMethod::Partial;
  out.text = "dim ker = " + std::to_string(k.r) + ", t = " + std::to_string(k.t) + ", d = " + std::to_string(k.d) +
             ", " + to_string(k.classification) + " [" + to_string(k.method) + "]\n";
  for (const auto& b : k.basis) out.text += "kernel form: " + job.ring.format(b) + "\n";
  if (!job.kappa.empty()) {
    const bool red = check_reduction_by_d(A, job.kappa, job.samuel.kernel.groebner);
    out.report["reduction_by_d"] = red;
    out.text += std::string("kappa generates a reduction: ") + (red ? "yes" : "no") + "\n";
  }
  return out;
}

Outcome run_samuel_slope(const Job& job) {
  const LocalRing& A = need_local_ring(job);
  const KernelReport k = kernel_lambda(A, job.samuel.kernel);
  const SamuelSlopeResult r = samuel_slope(A, job.candidates, job.samuel);
  Outcome out;
  out.report = envelope("samuel-slope", job, A.point);
  out.report["kernel"] = to_json(k, job.ring);
  out.report["slope"] = to_json(r, job.ring);
  out.exact = r.exact;
  out.text = "Samuel slope " + std::string(r.exact ? "= " : ">= ") + r.lower_bound.to_string() + " (" +
             to_string(r.classification) + ", " + std::to_string(r.sequences_tried) + " sequences tried)\n";
  for (const auto& g : r.witness) out.text += "witness: " + job.ring.format(g) + "\n";
  return out;
}

Outcome run_check(const Job& job, const Flags& flags) {
  need_presentation(job);
  TheoremCheckInput in{need_local_ring(job), *job.split, job.fibers, job.elimination, job.candidates, job.samuel,
                       flags.max_rounds.value_or(16)};
  const TheoremCheckReport c = cross_check_theorems(in);
  Outcome out;
  out.report = envelope("check-theorems", job, in.A.point);
  out.report["check"] = to_json(c, job.ring);
  out.failed = !c.passed;
  out.text = std::string(to_string(c.classification)) + ": H-ord = " + c.hord.to_string() + " (" + c.hord_method +
             "), ord = " + c.ord.to_string();
  if (c.samuel) out.text += ", Samuel slope " + std::string(c.samuel_exact ? "= " : ">= ") + c.samuel->lower_bound.to_string();
  out.text += std::string("\n") + (c.passed ? "PASS" : "FAIL") + "\n";
  for (const auto& f : c.failures) out.text += "  " + f + "\n";
  return out;
}

int run_corpus(const Flags& flags) {
  Json rows = Json::array();
  bool all = true;
  std::size_t ran = 0;
  for (const auto& c : corpus::acceptance_criteria(flags.inject_failure)) {
    if (!c.matches(flags.filter)) continue;
    ++ran;
    corpus::CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.computed = "error";
      r.detail = e.what();
    }
    all = all && r.passed;
    rows.push_back({{"id", c.id}, {"name", c.name}, {"passed", r.passed}, {"expected", r.expected},
                    {"computed", r.computed}, {"detail", r.detail}});
    if (!flags.json) {
      std::printf("%-4d %-4s %-42s\n     expected: %s\n     computed: %s\n", c.id, r.passed ? "PASS" : "FAIL",
                  c.name.c_str(), r.expected.c_str(), r.computed.c_str());
      if (!r.detail.empty()) std::printf("     detail:   %s\n", r.detail.c_str());
    }
  }
  if (ran == 0) {
    std::cerr << "error: no criterion matches filter '" << flags.filter << "'\n";
    return kExitInvalid;
  }
  if (flags.json)
    std::cout << Json{{"report", "corpus"}, {"criteria", rows}, {"passed", all}}.dump(2) << "\n";
  else
    std::printf("%zu criteria, %s\n", ran, all ? "all passed" : "FAILURES");
  return all ? kExitOk : kExitInvalid;
}

int run_job(const std::string& cmd, const Flags& flags) {
  Job job = load_job(flags.job_path);
  apply_flags(job, flags);
  Outcome out;
  if (cmd == "nubar") out = run_nubar(job);
  else if (cmd == "slope") out = run_slope(job, flags);
  else if (cmd == "kernel") out = run_kernel(job);
  else if (cmd == "samuel-slope") out = run_samuel_slope(job);
  else out = run_check(job, flags);
  if (flags.json)
    std::cout << out.report.dump(2) << "\n";
  else
    std::cout << out.text;
  if (out.failed) return kExitInvalid;
  if (flags.require_exact && !out.exact) return kExitInexact;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact singularity invariants: asymptotic Samuel function, Samuel slope, H-ord"};
  app.require_subcommand(1);
  Flags flags;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command job_commands[] = {
      {"nubar", "asymptotic Samuel function of a job's nubar section"},
      {"slope", "slope, cleaning and H-ord of a p-presentation"},
      {"kernel", "kernel of lambda at the maximal ideal"},
      {"samuel-slope", "Samuel slope bound over candidate lambda-sequences"},
      {"check-theorems", "cross-check H-ord against the kernel class and Samuel slope"},
  };
  for (const auto& c : job_commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("job", flags.job_path, "job file (JSON, schema slopelab-job/1)")->required();
    sub->add_flag("--json", flags.json, "emit the JSON report");
    sub->add_flag("--require-exact", flags.require_exact, "exit 2 when a value is only a lower bound");
    sub->add_option("--max-n", flags.max_n, "largest power used by the limit estimator")->check(CLI::PositiveNumber);
    sub->add_option("--max-rounds", flags.max_rounds, "cleaning rounds before giving up")->check(CLI::PositiveNumber);
  }
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run the built-in acceptance suite");
  corpus_cmd->add_flag("--json", flags.json, "emit a JSON table");
  corpus_cmd->add_option("--filter", flags.filter, "only criteria whose name or tags contain this text");
  corpus_cmd->add_flag("--inject-failure", flags.inject_failure, "negative control: corrupt one expected value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "corpus") return run_corpus(flags);
    return run_job(cmd, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
