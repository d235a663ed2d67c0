#include "slopelab/elimpres.hpp"

#include <algorithm>

namespace slopelab {

const char* to_string(SlopeCase c) {
  switch (c) {
    case SlopeCase::A: return "A";
    case SlopeCase::B1: return "B1";
    case SlopeCase::B2: return "B2";
    case SlopeCase::B3: return "B3";
  }
  return "?";
}

// ------------------------------------------------------------ Rees algebras

ReesAlgebra::ReesAlgebra(Field field, std::size_t nvars, std::vector<WeightedGenerator> gens)
    : field_(field), n_(nvars), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.f.is_zero()) throw Error(Errc::InvalidArgument, "Rees generators must be nonzero");
    if (g.weight == 0) throw Error(Errc::InvalidArgument, "Rees weights must be positive");
    if (!(g.f.field() == field_) || g.f.nvars() != n_)
      throw Error(Errc::InvalidArgument, "generator lives in a different ring");
  }
}

ExtendedRational sing_order(const std::vector<WeightedGenerator>& gens, const VarSet& vars) {
  ExtendedRational best = ExtendedRational::infinity();
  for (const auto& g : gens) best = ext_min(best, ext_div(g.f.order_in(vars), Rational(long(g.weight))));
  return best;
}

ExtendedRational sing_order(const ReesAlgebra& G, const PointSpec& at) { return sing_order(G.generators(), at.vars); }

namespace {

bool divides(const Polynomial& f, const Polynomial& g) {
  const GroebnerBasis principal(f.field(), f.nvars(), MonomialOrder::Grevlex, {f.monic()});
  return principal.contains(g);
}

bool dominated(const std::vector<WeightedGenerator>& gens, const WeightedGenerator& cand) {
  return std::any_of(gens.begin(), gens.end(), [&](const WeightedGenerator& g) {
    return g.weight >= cand.weight && divides(g.f, cand.f);
  });
}

void sort_generators(std::vector<WeightedGenerator>& gens) {
  std::stable_sort(gens.begin(), gens.end(), [](const WeightedGenerator& a, const WeightedGenerator& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.f.is_zero() || b.f.is_zero()) return false;
    return grlex_less(b.f.leading_monomial(), a.f.leading_monomial());
  });
}

}  // namespace

ReesAlgebra diff_saturate_once(const ReesAlgebra& G) {
  std::vector<WeightedGenerator> gens = G.generators();
  std::size_t next = 0;
  while (next < gens.size()) {
    const WeightedGenerator cur = gens[next++];
    for (std::size_t v = 0; v < G.nvars(); ++v)
      for (unsigned b = 1; b < cur.weight; ++b) {
        Polynomial d = hasse_derivative(cur.f, v, b);
        if (d.is_zero()) continue;
        WeightedGenerator cand{d.monic(), cur.weight - b};
        if (!dominated(gens, cand)) gens.push_back(std::move(cand));
      }
  }
  sort_generators(gens);
  return ReesAlgebra(G.field(), G.nvars(), std::move(gens));
}

// ---------------------------------------------------------- p-presentations

namespace {

// Coefficients of f in var, checked to be free of every fiber variable.
std::vector<Polynomial> base_coefficients(const Polynomial& f, std::size_t var, const VariableSplit& split) {
  auto c = f.coefficients_in(var);
  for (const auto& a : c)
    if ((a.support() & split.fiber).any())
      throw Error(Errc::InvalidArgument, "coefficients must lie in the base ring");
  return c;
}

void check_monic(const std::vector<Polynomial>& c, std::size_t n) {
  if (!(c.back() == Polynomial::constant(c.back().field(), n, Rational(1))))
    throw Error(Errc::NotMonic, "equation is not monic in the fiber variable");
}

}  // namespace

Fiber make_fiber(const Polynomial& h, std::size_t var, const VariableSplit& split) {
  split.validate(h.nvars());
  if (!split.fiber.test(var)) throw Error(Errc::InvalidArgument, "not a fiber variable");
  const std::uint64_t p = h.field().characteristic();
  if (p == 0) throw Error(Errc::NotApplicable, "p-presentations need positive characteristic");
  const auto c = base_coefficients(h, var, split);
  const unsigned q = static_cast<unsigned>(c.size() - 1);
  unsigned ell = 0, pow = 1;
  while (pow < q) {
    pow *= static_cast<unsigned>(p);
    ++ell;
  }
  if (q == 0 || pow != q || ell == 0) throw Error(Errc::BadDegree, "degree " + std::to_string(q) + " is not a positive power of p");
  check_monic(c, h.nvars());
  Fiber fb{var, ell, q, h, {}};
  for (unsigned j = 1; j <= q; ++j) fb.coeffs.push_back(c[q - j]);
  return fb;
}

Fiber build_fiber(const Polynomial& g, std::size_t var, const VariableSplit& split) {
  split.validate(g.nvars());
  if (!split.fiber.test(var)) throw Error(Errc::InvalidArgument, "not a fiber variable");
  const Field& field = g.field();
  const std::uint64_t p = field.characteristic();
  if (p == 0) throw Error(Errc::NotApplicable, "p-presentations need positive characteristic");
  const auto c = base_coefficients(g, var, split);
  const unsigned N = static_cast<unsigned>(c.size() - 1);
  if (N == 0) throw Error(Errc::BadDegree, "equation has degree 0 in the fiber variable");
  check_monic(c, g.nvars());
  unsigned np = N, q = 1;
  while (np % p == 0) {
    np /= static_cast<unsigned>(p);
    q *= static_cast<unsigned>(p);
  }
  if (q == 1) throw Error(Errc::BadDegree, "p does not divide the degree " + std::to_string(N));
  const unsigned r = (np - 1) * q;
  const Polynomial h = hasse_derivative(g, var, r) * field.inverse(Rational(long(np)));
  return make_fiber(h, var, split);
}

std::vector<WeightedGenerator> elimination_generators(const PPresentation& P) {
  std::vector<WeightedGenerator> out;
  auto add = [&](const Polynomial& f, unsigned w) {
    if (f.is_zero()) return;
    WeightedGenerator g{f.monic(), w};
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
  };
  for (const auto& fb : P.fibers) {
    for (unsigned j = 1; j <= fb.degree; ++j) {
      const Polynomial& a = fb.coeffs[j - 1];
      if (j < fb.degree) add(a, j);
      for (std::size_t y = 0; y < P.nvars; ++y) {
        if (!P.split.base.test(y)) continue;
        for (unsigned b = 1; b < j; ++b) add(hasse_derivative(a, y, b), j - b);
      }
    }
  }
  sort_generators(out);
  return out;
}

PPresentation build_p_presentation(const std::vector<FiberInput>& fibers, const VariableSplit& split,
                                   std::optional<std::vector<WeightedGenerator>> elimination) {
  if (fibers.empty()) throw Error(Errc::InvalidArgument, "presentation needs at least one fiber");
  PPresentation P;
  P.field = fibers.front().g.field();
  P.nvars = fibers.front().g.nvars();
  P.split = split;
  split.validate(P.nvars);
  VarSet seen;
  for (const auto& f : fibers) {
    if (seen.test(f.var)) throw Error(Errc::InvalidArgument, "fiber variable used twice");
    seen.set(f.var);
    P.fibers.push_back(build_fiber(f.g, f.var, split));
  }
  if (seen != split.fiber) throw Error(Errc::InvalidArgument, "one equation per fiber variable required");
  if (elimination) {
    for (const auto& g : *elimination)
      if ((g.f.support() & split.fiber).any() || g.weight == 0)
        throw Error(Errc::InvalidArgument, "elimination generators must be weighted base polynomials");
    P.elimination = *elimination;
    P.elimination_user_supplied = true;
  } else {
    P.elimination = elimination_generators(P);
  }
  return P;
}

PPresentation build_p_presentation(const Polynomial& g, std::size_t var, const VariableSplit& split) {
  return build_p_presentation(std::vector<FiberInput>{{var, g}}, split);
}

// ------------------------------------------------------------------ slope

SlopeReport slope(const PPresentation& P, const PointSpec& at) {
  if ((P.split.fiber & ~at.vars).any()) throw Error(Errc::InvalidArgument, "the prime must contain every fiber variable");
  const VarSet base_at = at.vars & P.split.base;
  SlopeReport rep;
  rep.elimination = P.elimination;
  rep.elimination_approximate = !P.elimination_user_supplied;
  rep.elimination_order = sing_order(P.elimination, base_at);
  rep.degenerate = true;

  ExtendedRational min_last = ExtendedRational::infinity();
  for (const auto& fb : P.fibers) {
    FiberOrders fo;
    fo.var = fb.var;
    for (unsigned j = 1; j <= fb.degree; ++j) {
      const Polynomial& a = fb.coeffs[j - 1];
      if (!a.is_zero()) rep.degenerate = false;
      const ExtendedRational ratio = ext_div(a.order_in(base_at), Rational(long(j)));
      if (ratio < ExtendedRational(1))
        throw Error(Errc::PointNotSingular, "nu(a_" + std::to_string(j) + ")/" + std::to_string(j) + " = " +
                                                ratio.to_string() + " < 1");
      if (j < fb.degree && ratio < rep.elimination_order) rep.intermediate_violation = true;
      fo.ratios.push_back(ratio);
    }
    fo.last = fo.ratios.back();
    min_last = ext_min(min_last, fo.last);
    rep.fibers.push_back(std::move(fo));
    rep.equations.push_back(fb.h);
  }
  rep.slope = ext_min(min_last, rep.elimination_order);

  if (rep.slope == rep.elimination_order) {
    rep.case_label = SlopeCase::A;
    for (auto& fo : rep.fibers) fo.case_label = SlopeCase::A;
  } else {
    bool all_b3 = true;
    std::optional<SlopeCase> first_other;
    for (std::size_t i = 0; i < rep.fibers.size(); ++i) {
      auto& fo = rep.fibers[i];
      if (!(fo.last == min_last)) {
        fo.case_label = SlopeCase::A;
        continue;
      }
      if (!fo.last.finite().is_integer()) {
        fo.case_label = SlopeCase::B1;
      } else {
        const Fiber& fb = P.fibers[i];
        const Polynomial in = initial_form_at(fb.coeffs.back(), base_at);
        fo.case_label = pth_power_root(in, fb.ell) ? SlopeCase::B3 : SlopeCase::B2;
      }
      if (fo.case_label != SlopeCase::B3) {
        all_b3 = false;
        if (!first_other) first_other = fo.case_label;
      }
    }
    rep.case_label = all_b3 ? SlopeCase::B3 : *first_other;
  }
  rep.normal_form = rep.case_label != SlopeCase::B3;
  if (rep.normal_form) rep.hord = rep.slope;
  return rep;
}

SlopeReport clean(PPresentation P, const PointSpec& at, unsigned max_rounds) {
  const VarSet base_at = at.vars & P.split.base;
  SlopeReport rep = slope(P, at);
  std::vector<Translation> transcript;
  for (unsigned round = 1; rep.case_label == SlopeCase::B3; ++round) {
    if (round > max_rounds) {
      rep.transcript = transcript;
      throw RoundsExhaustedError("no normal form after " + std::to_string(max_rounds) + " rounds", rep);
    }
    std::vector<Translation> step;
    for (std::size_t i = 0; i < P.fibers.size(); ++i) {
      if (rep.fibers[i].case_label != SlopeCase::B3) continue;
      Fiber& fb = P.fibers[i];
      const Polynomial in = initial_form_at(fb.coeffs.back(), base_at);
      const Polynomial shift = -*pth_power_root(in, fb.ell);
      fb = make_fiber(translate(fb.h, fb.var, shift), fb.var, P.split);
      step.push_back({round, fb.var, shift, rep.slope, rep.slope});
    }
    if (!P.elimination_user_supplied) P.elimination = elimination_generators(P);
    rep = slope(P, at);
    for (auto& t : step) t.slope_after = rep.slope;
    transcript.insert(transcript.end(), step.begin(), step.end());
  }
  rep.transcript = std::move(transcript);
  return rep;
}

ExtendedRational tschirnhausen_ord(const Polynomial& f, std::size_t var, const PointSpec& at) {
  const Field& field = f.field();
  auto c = f.coefficients_in(var);
  const unsigned m = static_cast<unsigned>(c.size() - 1);
  if (m == 0) throw Error(Errc::BadDegree, "equation has degree 0 in the fiber variable");
  if (!(c.back() == Polynomial::constant(field, f.nvars(), Rational(1))))
    throw Error(Errc::NotMonic, "equation is not monic in the fiber variable");
  for (const auto& a : c)
    if (a.depends_on(var)) throw Error(Errc::InvalidArgument, "coefficient involves the fiber variable");
  const std::uint64_t p = field.characteristic();
  if (p != 0 && m % p == 0) throw Error(Errc::CharDividesDegree, "characteristic divides the degree " + std::to_string(m));
  const Polynomial shift = c[m - 1] * field.inverse(Rational(long(m))) * Rational(-1);
  const auto t = translate(f, var, shift).coefficients_in(var);
  VarSet base_at = at.vars;
  base_at.reset(var);
  ExtendedRational best = ExtendedRational::infinity();
  for (unsigned i = 2; i <= m; ++i) best = ext_min(best, ext_div(t[m - i].order_in(base_at), Rational(long(i))));
  return best;
}

// ------------------------------------------------------- theorem checks

TheoremCheckReport cross_check_theorems(const TheoremCheckInput& in) {
  const LocalRing& A = in.A;
  const std::size_t n = A.nvars();
  const Field& field = A.ring.field;
  const PointSpec& at = A.point;
  in.split.validate(n);
  if (in.fibers.empty()) throw Error(Errc::Inconsistent, "no fiber equations given");
  if (A.J.generators().size() != in.fibers.size())
    throw Error(Errc::Inconsistent, "defining ideal must have one generator per fiber equation");
  for (const auto& fb : in.fibers) {
    if (!(fb.g.field() == field) || fb.g.nvars() != n) throw Error(Errc::Inconsistent, "equation lives in a different ring");
    const bool listed = std::any_of(A.J.generators().begin(), A.J.generators().end(),
                                    [&](const Polynomial& j) { return j.monic() == fb.g.monic(); });
    if (!listed) throw Error(Errc::Inconsistent, "equation " + A.ring.format(fb.g) + " is not a generator of J");
    const ExtendedRational mult = fb.g.order_in(at.vars);
    const ExtendedRational deg(long(fb.g.degree_in(fb.var)));
    if (!(mult == deg)) throw Error(Errc::Inconsistent, "equation is not in Weierstrass form at the point");
    if (!(ExtendedRational(1) < mult)) throw Error(Errc::Inconsistent, "point has multiplicity 1");
  }

  TheoremCheckReport rep;
  const std::uint64_t p = field.characteristic();
  const bool p_divides = p != 0 && std::all_of(in.fibers.begin(), in.fibers.end(), [&](const FiberInput& f) {
    return f.g.degree_in(f.var) % p == 0;
  });
  if (p_divides) {
    SlopeReport s = clean(build_p_presentation(in.fibers, in.split, in.elimination), at, in.max_rounds);
    if (s.degenerate) throw Error(Errc::NotApplicable, "cleaning reached a non-reduced equation");
    rep.hord = *s.hord;
    rep.ord = s.elimination_order;
    rep.hord_method = "p-presentation";
    rep.slope = std::move(s);
  } else {
    if (in.fibers.size() != 1) throw Error(Errc::NotApplicable, "Tschirnhausen form is handled for one fiber");
    rep.ord = tschirnhausen_ord(in.fibers.front().g, in.fibers.front().var, at);
    rep.hord = rep.ord;
    rep.hord_method = "tschirnhausen";
  }

  rep.kernel = kernel_lambda(A, in.samuel.kernel);
  rep.classification = rep.kernel.classification;
  switch (rep.classification) {
    case KernelClass::NonExtremal:
      if (!(rep.hord == ExtendedRational(1))) rep.failures.push_back("H-ord is " + rep.hord.to_string() + ", expected 1");
      if (at.is_closed(n) && !(rep.ord == ExtendedRational(1)))
        rep.failures.push_back("ord at a closed point is " + rep.ord.to_string() + ", expected 1");
      break;
    case KernelClass::Extremal: {
      SamuelSlopeResult s = samuel_slope(A, in.candidates, in.samuel);
      const ExtendedRational expected = ext_min(s.lower_bound, rep.ord);
      if (!(rep.hord == expected))
        rep.failures.push_back("H-ord is " + rep.hord.to_string() + " but min(Samuel slope bound, ord) is " +
                               expected.to_string());
      else if (rep.hord < rep.ord)
        rep.samuel_exact = s.exact = true;
      rep.samuel = std::move(s);
      break;
    }
    case KernelClass::Regular: throw Error(Errc::Inconsistent, "regular point");
    case KernelClass::Unknown: throw Error(Errc::UnknownKernel, "kernel is only partially known");
  }
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace slopelab
