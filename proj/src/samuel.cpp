#include "slopelab/samuel.hpp"

#include <algorithm>

#include "slopelab/linalg.hpp"

namespace slopelab {

const char* to_string(NubarStrategy s) {
  switch (s) {
    case NubarStrategy::Auto: return "auto";
    case NubarStrategy::Monomial: return "monomial";
    case NubarStrategy::Certificate: return "certificate";
    case NubarStrategy::Limit: return "limit";
  }
  return "?";
}

const char* to_string(NubarStatus s) { return s == NubarStatus::Exact ? "exact" : "lower-bound"; }

const char* to_string(KernelClass c) {
  switch (c) {
    case KernelClass::Regular: return "regular";
    case KernelClass::Extremal: return "extremal";
    case KernelClass::NonExtremal: return "non-extremal";
    case KernelClass::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(KernelMethod m) {
  switch (m) {
    case KernelMethod::Monomial: return "monomial";
    case KernelMethod::Factorization: return "factorization";
    case KernelMethod::Enumeration: return "enumeration-Fp";
    case KernelMethod::Partial: return "partial";
  }
  return "?";
}

// --------------------------------------------------------------- LocalRing

LocalRing::LocalRing(Ring r, Ideal j, PointSpec p) : ring(std::move(r)), J(std::move(j)), point(p) {
  if (!(J.field() == ring.field) || J.nvars() != ring.nvars())
    throw Error(Errc::InvalidArgument, "defining ideal lives in a different ring");
  for (std::size_t i = ring.nvars(); i < kMaxVars; ++i)
    if (point.vars.test(i)) throw Error(Errc::InvalidArgument, "point uses a variable outside the ring");
  if (point.vars.none()) throw Error(Errc::InvalidArgument, "point has no variables");
  for (const auto& g : J.generators())
    if (g.order_in(point.vars) < ExtendedRational(1))
      throw Error(Errc::InvalidArgument, "generator " + ring.format(g) + " does not vanish at the point");
}

LocalRing LocalRing::at_origin(Ring ring, Ideal J) {
  const std::size_t n = ring.nvars();
  return LocalRing(std::move(ring), std::move(J), PointSpec::origin(n));
}

Ideal LocalRing::maximal_ideal() const { return Ideal::generated_by_variables(ring.field, nvars(), point.vars); }

Ideal tangent_cone_ideal(const LocalRing& A) {
  std::vector<Polynomial> forms;
  for (const auto& g : A.J.generators()) forms.push_back(initial_form_at(g, A.point.vars));
  return Ideal(A.ring.field, A.nvars(), std::move(forms));
}

// ------------------------------------------------------------ SamuelEngine

namespace {

// Drops monomial generators divisible by another generator.
std::vector<Polynomial> prune_monomials(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& a = gens[j].leading_monomial();
      const Monomial& b = gens[i].leading_monomial();
      if (a.divides(b)) redundant = !(a == b) || j < i;
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

SamuelEngine::SamuelEngine(LocalRing A, Ideal I, GroebnerOptions options)
    : A_(std::move(A)), I_(std::move(I)), opts_(options) {
  if (!A_.point.is_closed(A_.nvars()))
    throw Error(Errc::NotApplicable, "Samuel functions are computed at the origin only");
  if (!(I_.field() == A_.ring.field) || I_.nvars() != A_.nvars())
    throw Error(Errc::InvalidArgument, "ideal lives in a different ring");
  if (I_.is_zero()) throw Error(Errc::InvalidArgument, "the zero ideal has no Samuel function");
  if (!I_.vanishes_at_origin()) throw Error(Errc::InvalidArgument, "ideal is not contained in the maximal ideal");
  const bool monomial_case = A_.J.is_zero() && I_.is_monomial();
  if (!monomial_case && krull_dimension(ideal_sum(I_, A_.J), opts_) != 0)
    throw Error(Errc::NotApplicable, "I + J is not primary to the maximal ideal");
}

bool SamuelEngine::is_zero_class(const Polynomial& f) {
  if (f.is_zero()) return true;
  if (A_.J.is_zero()) return false;
  if (!j_basis_) j_basis_ = buchberger(A_.J, opts_);
  return j_basis_->contains(f);
}

const GroebnerBasis& SamuelEngine::power_basis(unsigned k) {
  if (auto it = bases_.find(k); it != bases_.end()) return it->second;
  while (powers_.size() < k) {
    Ideal next = powers_.empty() ? I_ : ideal_product(powers_.back(), I_);
    if (next.is_monomial()) next = Ideal(next.field(), next.nvars(), prune_monomials(next.generators()));
    powers_.push_back(std::move(next));
  }
  return bases_.emplace(k, buchberger(ideal_sum(powers_[k - 1], A_.J), opts_)).first->second;
}

OrderValue SamuelEngine::nu(const Polynomial& f, unsigned cap) {
  if (cap == 0) throw Error(Errc::InvalidArgument, "cap must be at least 1");
  if (is_zero_class(f)) return {ExtendedRational::infinity(), false};
  if (!f.constant_term().is_zero()) return {ExtendedRational(0), false};
  for (unsigned k = 1; k <= cap; ++k)
    if (!power_basis(k).contains(f)) return {ExtendedRational(long(k - 1)), false};
  return {ExtendedRational(long(cap)), true};
}

NubarResult SamuelEngine::nubar_limit(const Polynomial& f, unsigned max_n, unsigned cap) {
  if (max_n == 0) throw Error(Errc::InvalidArgument, "max_n must be at least 1");
  NubarResult r{ExtendedRational(0), NubarStatus::LowerBound, "limit", false, 1};
  Polynomial power = f;
  for (unsigned n = 1; n <= max_n; ++n) {
    if (n > 1) power *= f;
    const OrderValue v = nu(power, cap);
    if (v.value.is_infinite()) return {ExtendedRational::infinity(), NubarStatus::Exact, "limit", false, n};
    const ExtendedRational ratio = ext_div(v.value, Rational(long(n)));
    if (r.value < ratio) {
      r.value = ratio;
      r.witness_n = n;
    }
    if (v.at_least) break;  // later powers are capped too and only give cap/n
  }
  return r;
}

namespace {

// Weighted degree of x^u.
Rational weighted_degree(const Monomial& m, const std::vector<Rational>& w) {
  Rational d(0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (m[i]) d += w[i] * Rational(long(m[i]));
  return d;
}

// Smallest weighted degree whose component of f is not in J'.
ExtendedRational weighted_class_order(const Polynomial& f, const std::vector<Rational>& w,
                                      const std::optional<GroebnerBasis>& jbasis) {
  std::map<Rational, Polynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto it = parts.try_emplace(weighted_degree(m, w), f.field(), f.nvars()).first;
    it->second.add_term(m, c);
  }
  for (const auto& [deg, part] : parts)
    if (!jbasis || !jbasis->contains(part)) return ExtendedRational(deg);
  return ExtendedRational::infinity();
}

}  // namespace

NubarResult SamuelEngine::nubar_certificate(const Polynomial& f, const ValuationCertificate& cert) {
  const std::size_t n = A_.nvars();
  const Field& field = A_.ring.field;
  if (cert.entries.empty()) throw Error(Errc::CertificateRejected, "certificate has no valuations");

  std::vector<Polynomial> phi;
  if (cert.coordinate_change) {
    phi = *cert.coordinate_change;
    if (phi.size() != n) throw Error(Errc::CertificateRejected, "coordinate change needs one image per variable");
    Matrix linear;
    for (const auto& img : phi) {
      if (!(img.field() == field) || img.nvars() != n)
        throw Error(Errc::CertificateRejected, "coordinate change lives in a different ring");
      if (!img.constant_term().is_zero()) throw Error(Errc::CertificateRejected, "coordinate change moves the origin");
      Vector row(n, Rational(0));
      const Polynomial lin = img.homogeneous_component(1);
      for (const auto& [m, c] : lin.terms())
        for (std::size_t i = 0; i < n; ++i)
          if (m[i]) row[i] = c;
      linear.push_back(std::move(row));
    }
    if (rank(linear, field) != n) throw Error(Errc::CertificateRejected, "coordinate change is not invertible at the origin");
  }
  auto apply = [&](const Polynomial& g) { return phi.empty() ? g : substitute(g, phi); };

  std::vector<Polynomial> jgens;
  for (const auto& g : A_.J.generators()) jgens.push_back(apply(g));
  std::optional<GroebnerBasis> jbasis;
  if (!jgens.empty()) jbasis = buchberger(Ideal(field, n, jgens), opts_);

  const Polynomial fp = apply(f);
  ExtendedRational value = ExtendedRational::infinity();
  for (const auto& e : cert.entries) {
    if (e.weights.size() != n) throw Error(Errc::CertificateRejected, "valuation arity does not match the ring");
    for (const auto& w : e.weights)
      if (w.sign() <= 0) throw Error(Errc::CertificateRejected, "valuation weights must be positive");
    for (const auto& g : jgens) {
      const Rational d0 = weighted_degree(g.terms().begin()->first, e.weights);
      for (const auto& [m, c] : g.terms())
        if (weighted_degree(m, e.weights) != d0)
          throw Error(Errc::CertificateRejected, "defining equation " + A_.ring.format(g) + " is not weighted homogeneous");
    }
    ExtendedRational vi = ExtendedRational::infinity();
    for (const auto& g : I_.generators()) vi = ext_min(vi, weighted_class_order(apply(g), e.weights, jbasis));
    if (vi.is_infinite() || vi.finite().is_zero())
      throw Error(Errc::CertificateRejected, "valuation does not take a positive finite value on the ideal");
    if (vi.finite() != e.ideal_value)
      throw Error(Errc::CertificateRejected,
                  "claimed ideal value " + e.ideal_value.to_string() + " but the generators give " + vi.to_string());
    value = ext_min(value, ext_div(weighted_class_order(fp, e.weights, jbasis), vi.finite()));
  }

  const NubarResult lower = nubar_limit(f, 6, 24);
  if (value < lower.value)
    throw Error(Errc::CertificateRejected, "limit estimator gives " + lower.value.to_string() +
                                               ", above the certified value " + value.to_string());
  NubarResult r{value, NubarStatus::Exact, "certificate", lower.value == value, lower.witness_n};
  return r;
}

NubarResult SamuelEngine::nubar(const Polynomial& f, const NubarOptions& options) {
  if (is_zero_class(f)) return {ExtendedRational::infinity(), NubarStatus::Exact, "trivial", false, 0};
  if (!f.constant_term().is_zero()) return {ExtendedRational(0), NubarStatus::Exact, "trivial", false, 0};
  NubarStrategy s = options.strategy;
  const bool monomial_ok = A_.J.is_zero() && I_.is_monomial() && A_.nvars() <= kNewtonMaxVars;
  if (s == NubarStrategy::Auto)
    s = monomial_ok ? NubarStrategy::Monomial
                    : (options.certificate ? NubarStrategy::Certificate : NubarStrategy::Limit);
  switch (s) {
    case NubarStrategy::Monomial:
      if (!A_.J.is_zero() || !I_.is_monomial())
        throw Error(Errc::NotApplicable, "monomial strategy needs J = 0 and a monomial ideal");
      return {nubar_monomial(I_, f), NubarStatus::Exact, "monomial", false, 0};
    case NubarStrategy::Certificate:
      if (!options.certificate) throw Error(Errc::InvalidArgument, "certificate strategy without a certificate");
      return nubar_certificate(f, *options.certificate);
    default: return nubar_limit(f, options.max_n, options.cap);
  }
}

NubarResult nubar(const LocalRing& A, const Ideal& I, const Polynomial& f, const NubarOptions& options) {
  SamuelEngine engine(A, I);
  return engine.nubar(f, options);
}

bool graded_piece_member(const LocalRing& A, const Ideal& I, const Polynomial& f, const Rational& b, bool strict,
                         const NubarOptions& options) {
  if (!strict && b.sign() <= 0) return true;
  const NubarResult r = nubar(A, I, f, options);
  const ExtendedRational bound = b.sign() <= 0 ? ExtendedRational(0) : ExtendedRational(b);
  const bool holds = b.sign() < 0 || (strict ? bound < r.value : bound <= r.value);
  if (r.exact() || holds) return holds;
  throw Error(Errc::InexactNubar, "only the lower bound " + r.value.to_string() + " is available");
}

// ---------------------------------------------------------------- kernel

namespace {

std::vector<std::size_t> indices_of(const VarSet& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

// Splits f by its exponent in the variables of S: X_S-monomial -> coefficient
// polynomial in the remaining variables.
std::map<Monomial, Polynomial, GrlexGreater> split_by(const Polynomial& f, const VarSet& S) {
  std::map<Monomial, Polynomial, GrlexGreater> out;
  for (const auto& [m, c] : f.terms()) {
    Monomial xs(m.nvars()), rest(m.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i) (S.test(i) ? xs : rest).set(i, m[i]);
    auto it = out.try_emplace(xs, f.field(), f.nvars()).first;
    it->second.add_term(rest, c);
  }
  return out;
}

// L with g = c * L^m over the residue field of the prime S, if one exists.
// L is returned with polynomial coefficients (cleared denominators).
std::optional<Polynomial> power_of_linear_form(const Polynomial& g, const VarSet& S) {
  const Field& field = g.field();
  const std::size_t n = g.nvars();
  const auto parts = split_by(g, S);
  const unsigned m = parts.begin()->first.degree();
  const auto vars = indices_of(S, n);

  auto coeff = [&](const Monomial& xs) {
    auto it = parts.find(xs);
    return it == parts.end() ? Polynomial(field, n) : it->second;
  };
  auto xpow = [&](std::size_t i, unsigned e, std::size_t j = 0, unsigned f = 0) {
    Monomial x(n);
    x.set(i, e);
    if (f) x.set(j, f);
    return x;
  };

  std::size_t lead = n;
  for (auto i : vars)
    if (!coeff(xpow(i, m)).is_zero()) {
      lead = i;
      break;
    }
  if (lead == n) return std::nullopt;
  const Polynomial c = coeff(xpow(lead, m));

  unsigned k0 = 1;
  while (binomial_in(field, m, k0).is_zero()) ++k0;
  unsigned e = 0;
  if (k0 > 1) {
    for (unsigned q = 1; q < k0; q *= static_cast<unsigned>(field.characteristic())) ++e;
  }

  Polynomial L = c * Polynomial::variable(field, n, lead);
  for (auto j : vars) {
    if (j == lead) continue;
    const Polynomial num = coeff(xpow(lead, m - k0, j, k0)) * field.inverse(binomial_in(field, m, k0));
    Polynomial root(field, n);
    if (k0 == 1) {
      root = num;
    } else {
      auto r = pth_power_root(num * c.pow(k0 - 1), e);
      if (!r) return std::nullopt;
      root = *r;
    }
    L += root * Polynomial::variable(field, n, j);
  }
  if (!(c.pow(m - 1) * g == L.pow(m))) return std::nullopt;
  return c.is_constant() ? L.monic() : L;
}

Vector linear_vector(const Polynomial& f, const std::vector<std::size_t>& vars) {
  Vector v;
  for (auto i : vars) {
    Monomial x(f.nvars());
    x.set(i, 1);
    v.push_back(f.coefficient(x));
  }
  return v;
}

Polynomial linear_form(const Vector& v, const std::vector<std::size_t>& vars, const Field& field, std::size_t n) {
  Polynomial L(field, n);
  for (std::size_t k = 0; k < vars.size(); ++k) L += v[k] * Polynomial::variable(field, n, vars[k]);
  return L;
}

// Linear part of f in the given variables, coefficients read at the point.
Polynomial linear_part(const Polynomial& f, const VarSet& S) {
  Polynomial out(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.degree_in(S) == 1 && m.degree() == 1) out.add_term(m, c);
  return out;
}

}  // namespace

KernelReport kernel_lambda(const LocalRing& A, const KernelOptions& options) {
  const std::size_t n = A.nvars();
  const VarSet& S = A.point.vars;
  const Field& field = A.ring.field;
  const auto vars = indices_of(S, n);
  KernelReport rep;
  rep.embedding_dimension = vars.size();

  const Ideal cone = tangent_cone_ideal(A);
  for (std::size_t k = 0; k < cone.generators().size(); ++k)
    if (A.J.generators()[k].order_in(S) == ExtendedRational(1))
      throw Error(Errc::NotApplicable, "generator " + A.ring.format(A.J.generators()[k]) +
                                           " has a linear initial form; eliminate that variable first");
  rep.presentation_relative = !(A.J.is_zero() || A.J.is_principal() || A.J.is_monomial());

  if (A.J.is_zero()) {
    rep.d = vars.size();
  } else if (A.point.is_closed(n)) {
    rep.d = static_cast<std::size_t>(krull_dimension(cone, options.groebner));
  } else if (A.J.is_principal()) {
    rep.d = vars.size() - 1;
  } else {
    throw Error(Errc::NotApplicable, "dimension at a non-closed point needs a principal defining ideal");
  }
  rep.t = rep.embedding_dimension - rep.d;

  auto finish = [&](KernelMethod method) {
    rep.method = method;
    rep.r = rep.basis.size();
    if (rep.t == 0)
      rep.classification = KernelClass::Regular;
    else if (rep.r == rep.t)
      rep.classification = KernelClass::Extremal;
    else
      rep.classification = method == KernelMethod::Partial ? KernelClass::Unknown : KernelClass::NonExtremal;
    return rep;
  };

  if (cone.is_monomial()) {
    for (auto i : vars) {
      for (const auto& g : cone.generators()) {
        const VarSet supp = g.leading_monomial().support() & S;
        if (supp.count() == 1 && supp.test(i)) {
          rep.basis.push_back(Polynomial::variable(field, n, i));
          break;
        }
      }
    }
    return finish(KernelMethod::Monomial);
  }

  if (cone.is_principal()) {
    if (auto L = power_of_linear_form(cone.generators().front(), S)) rep.basis.push_back(*L);
    return finish(KernelMethod::Factorization);
  }

  if (field.is_prime_field() && A.point.is_closed(n) && n <= 3) {
    const auto p = field.characteristic();
    Matrix found;
    std::size_t count = 0;

    // Projective points: first nonzero coordinate is 1.
    for (std::size_t lead = 0; lead < n; ++lead) {
      std::vector<std::uint64_t> digits(n - lead - 1, 0);
      for (;;) {
        Vector w(n, Rational(0));
        w[lead] = Rational(1);
        for (std::size_t k = 0; k < digits.size(); ++k) w[lead + 1 + k] = Rational(long(digits[k]));
        if (radical_member(linear_form(w, vars, field, n), cone, options.groebner)) {
          found.push_back(w);
          ++count;
        }
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
        if (k == digits.size()) break;
      }
    }
    const Matrix basis = row_reduce(found, field);
    std::uint64_t expected = 0;
    for (std::size_t k = 0, q = 1; k < basis.size(); ++k, q *= p) expected += q;
    if (count != expected)
      throw Error(Errc::Inconsistent, "nilpotent linear forms do not form a subspace");
    for (const auto& row : basis) rep.basis.push_back(linear_form(row, vars, field, n));
    return finish(KernelMethod::Enumeration);
  }

  if (!options.allow_partial)
    throw Error(Errc::UnknownKernel, "no exact kernel method applies; allow partial results to test candidates");
  Matrix found;
  std::vector<Polynomial> tests;
  for (auto i : vars) tests.push_back(Polynomial::variable(field, n, i));
  for (const auto& c : options.candidates) tests.push_back(linear_part(c, S));
  for (const auto& L : tests) {
    if (L.is_zero()) continue;
    const Vector v = linear_vector(L, vars);
    if (!found.empty() && in_span(found, v, field)) continue;
    if (radical_member(L, cone, options.groebner)) found.push_back(v);
  }
  for (const auto& row : row_reduce(found, field)) rep.basis.push_back(linear_form(row, vars, field, n));
  return finish(KernelMethod::Partial);
}

// ---------------------------------------------------------- Samuel slope

void validate_lambda_sequence(const LocalRing& A, const KernelReport& kernel, const std::vector<Polynomial>& seq) {
  const std::size_t n = A.nvars();
  const auto vars = indices_of(A.point.vars, n);
  const Field& field = A.ring.field;
  if (seq.size() != kernel.r)
    throw Error(Errc::NotALambdaSequence, "sequence has " + std::to_string(seq.size()) + " elements; kernel dimension is " +
                                              std::to_string(kernel.r));
  Matrix kernel_rows;
  for (const auto& L : kernel.basis) kernel_rows.push_back(linear_vector(L, vars));
  Matrix rows;
  for (const auto& g : seq) {
    if (g.order_in(A.point.vars) < ExtendedRational(1))
      throw Error(Errc::NotALambdaSequence, A.ring.format(g) + " is not in the maximal ideal");
    const Vector v = linear_vector(g, vars);
    if (!in_span(kernel_rows, v, field))
      throw Error(Errc::NotALambdaSequence, "class of " + A.ring.format(g) + " is not in the kernel");
    rows.push_back(v);
  }
  if (rank(rows, field) != kernel.r) throw Error(Errc::NotALambdaSequence, "classes are not linearly independent");
}

namespace {

struct Evaluated {
  ExtendedRational value;
  std::vector<NubarResult> parts;
  bool exact = true;
};

Evaluated evaluate(SamuelEngine& engine, const std::vector<Polynomial>& seq, const NubarOptions& options) {
  Evaluated e{ExtendedRational::infinity(), {}, true};
  for (const auto& g : seq) {
    NubarResult r = engine.nubar(g, options);
    e.value = ext_min(e.value, r.value);
    e.exact = e.exact && r.exact();
    e.parts.push_back(std::move(r));
  }
  return e;
}

// Monomials of degree 1 and 2 in n variables.
std::vector<Monomial> small_monomials(std::size_t n) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m(n);
    m.set(i, 1);
    out.push_back(m);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Monomial m(n);
      m.set(i, 1);
      m.set(j, m[j] + 1);
      out.push_back(m);
    }
  return out;
}

}  // namespace

SamuelSlopeResult samuel_slope(const LocalRing& A, const std::vector<std::vector<Polynomial>>& candidates,
                               const SamuelSlopeOptions& options) {
  if (!A.point.is_closed(A.nvars())) throw Error(Errc::NotApplicable, "the Samuel slope is computed at the origin");
  const KernelReport kernel = kernel_lambda(A, options.kernel);
  SamuelSlopeResult res;
  res.classification = kernel.classification;
  if (kernel.t == 0) throw Error(Errc::NotApplicable, "regular local ring (t = 0)");
  if (kernel.classification == KernelClass::Unknown)
    throw Error(Errc::UnknownKernel, "kernel is only partially known");
  if (kernel.classification == KernelClass::NonExtremal) {
    res.lower_bound = ExtendedRational(1);
    res.exact = true;
    return res;
  }

  for (const auto& seq : candidates) validate_lambda_sequence(A, kernel, seq);
  std::vector<std::vector<Polynomial>> seqs = candidates;
  seqs.push_back(kernel.basis);

  const std::size_t n = A.nvars();
  const Field& field = A.ring.field;
  SamuelEngine engine(A, A.maximal_ideal());
  bool have = false;
  auto consider = [&](const std::vector<Polynomial>& seq, const Evaluated& e) {
    ++res.sequences_tried;
    if (!have || res.lower_bound < e.value) {
      have = true;
      res.lower_bound = e.value;
      res.witness = seq;
      res.witness_values = e.parts;
    }
  };

  std::vector<Evaluated> base_values;
  for (const auto& seq : seqs) {
    base_values.push_back(evaluate(engine, seq, options.nubar));
    consider(seq, base_values.back());
  }

  const bool exact_strategy =
      std::all_of(base_values.begin(), base_values.end(), [](const Evaluated& e) { return e.exact; });
  if (!options.auto_translate || !exact_strategy) return res;

  // Complement of the kernel inside the coordinate directions.
  const auto vars = indices_of(A.point.vars, n);
  Matrix rows;
  for (const auto& L : kernel.basis) rows.push_back(linear_vector(L, vars));
  std::vector<std::size_t> complement;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    Vector e(vars.size(), Rational(0));
    e[k] = Rational(1);
    if (!in_span(rows, e, field)) {
      rows.push_back(e);
      complement.push_back(vars[k]);
    }
  }
  std::vector<Rational> scalars;
  if (field.is_prime_field())
    for (std::uint64_t c = 1; c < field.characteristic(); ++c) scalars.push_back(Rational(long(c)));
  else
    scalars = {Rational(1), Rational(-1)};
  const auto monos = small_monomials(n);

  // Greedy climb: apply the best single-element translation while it helps.
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    std::vector<Polynomial> current = seqs[s];
    ExtendedRational current_value = base_values[s].value;
    for (int round = 0; round < 4; ++round) {
      bool improved = false;
      for (std::size_t i = 0; i < current.size() && !improved; ++i)
        for (auto j : complement) {
          for (const auto& mono : monos) {
            for (const auto& c : scalars) {
              Monomial shift = mono;
              shift.set(j, shift[j] + 1);
              std::vector<Polynomial> trial = current;
              trial[i] += Polynomial::term(field, shift, c);
              Evaluated e;
              try {
                e = evaluate(engine, trial, options.nubar);
              } catch (const Error& err) {
                if (err.code() == Errc::CertificateRejected || err.code() == Errc::InexactNubar) continue;
                throw;
              }
              if (!e.exact) continue;
              consider(trial, e);
              if (current_value < e.value) {
                current = trial;
                current_value = e.value;
                improved = true;
              }
            }
          }
        }
      if (!improved) break;
    }
  }
  return res;
}

bool check_reduction_by_d(const LocalRing& A, const std::vector<Polynomial>& kappa, const GroebnerOptions& options) {
  if (!A.point.is_closed(A.nvars())) throw Error(Errc::NotApplicable, "reduction check runs at the origin");
  const Ideal cone = tangent_cone_ideal(A);
  const int d = A.J.is_zero() ? static_cast<int>(A.nvars()) : krull_dimension(cone, options);
  if (static_cast<int>(kappa.size()) != d)
    throw Error(Errc::InvalidArgument, "need exactly dim A = " + std::to_string(d) + " elements");
  std::vector<Polynomial> gens = cone.generators();
  for (const auto& k : kappa) {
    if (!k.constant_term().is_zero()) throw Error(Errc::InvalidArgument, "element is not in the maximal ideal");
    gens.push_back(k.homogeneous_component(1));
  }
  return krull_dimension(Ideal(A.ring.field, A.nvars(), std::move(gens)), options) == 0;
}

}  // namespace slopelab
