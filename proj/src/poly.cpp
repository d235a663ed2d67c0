#include "slopelab/poly.hpp"

#include <algorithm>
#include <limits>

namespace slopelab {

// --------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars)
    throw Error(Errc::InvalidArgument, "ring has " + std::to_string(nvars) + " variables; cap is " +
                                           std::to_string(kMaxVars));
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= n_) throw Error(Errc::InvalidArgument, "variable index out of range");
  if (e > std::numeric_limits<std::uint16_t>::max()) throw Error(Errc::InvalidArgument, "exponent overflow");
  deg_ = deg_ - e_[i] + e;
  e_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree_in(const VarSet& vars) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (vars.test(i)) d += e_[i];
  return d;
}

VarSet Monomial::support() const {
  VarSet s;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) s.set(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned(e_[i]) + o.e_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!o.divides(*this)) throw Error(Errc::InvalidArgument, "monomial does not divide");
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned(e_[i]) - o.e_[i]);
  return r;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] * k);
  return r;
}

Monomial Monomial::extended(std::size_t nvars) const {
  if (nvars < n_) throw Error(Errc::InvalidArgument, "cannot shrink a monomial");
  Monomial r(nvars);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::min(a.e_[i], b.e_[i]));
  return r;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return lex_less(a, b);
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// ------------------------------------------------------------- Polynomial

Polynomial::Polynomial(Field field, std::size_t nvars) : field_(field), n_(nvars) {
  (void)Monomial(nvars);  // throws with the cap message
}

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Rational& c) {
  Polynomial p(field, nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.set(index, 1);
  return term(field, m, Rational(1));
}

Polynomial Polynomial::term(Field field, const Monomial& m, const Rational& c) {
  Polynomial p(field, m.nvars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(n_)); }

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading monomial of zero");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of zero");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != n_) throw Error(Errc::InvalidArgument, "monomial arity does not match the ring");
  const Rational r = field_.reduce(c);
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, r);
  if (!inserted) {
    it->second = field_.add(it->second, r);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.degree()));
  return d;
}

ExtendedRational Polynomial::order() const {
  if (terms_.empty()) return ExtendedRational::infinity();
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return ExtendedRational(long(d));
}

ExtendedRational Polynomial::order_in(const VarSet& vars) const {
  if (terms_.empty()) return ExtendedRational::infinity();
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree_in(vars));
  return ExtendedRational(long(d));
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool Polynomial::depends_on(std::size_t var) const { return degree_in(var) > 0; }

VarSet Polynomial::support() const {
  VarSet s;
  for (const auto& [m, c] : terms_) s |= m.support();
  return s;
}

Polynomial Polynomial::homogeneous_component(unsigned degree) const {
  Polynomial r(field_, n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) r.terms_.emplace(m, c);
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(degree_in(var) + 1, Polynomial(field_, n_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.set(var, 0);
    out[m[var]].terms_.emplace(rest, c);
  }
  return out;
}

Polynomial Polynomial::extended(std::size_t nvars) const {
  Polynomial r(field_, nvars);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.extended(nvars), c);
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * field_.inverse(leading_coefficient());
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(field_ == o.field_) || n_ != o.n_)
    throw Error(Errc::InvalidArgument, "polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.reduce(-c));
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  const Rational r = field_.reduce(c);
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x = field_.mul(x, r);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.field_, a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(field_, n_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// ------------------------------------------------------------ ring helpers

Ring::Ring(Field f, std::vector<std::string> vars) : field(f), names(std::move(vars)) {
  if (names.size() > kMaxVars)
    throw Error(Errc::InvalidArgument, "ring has " + std::to_string(names.size()) + " variables; cap is " +
                                           std::to_string(kMaxVars));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw Error(Errc::InvalidArgument, "duplicate variable '" + names[i] + "'");
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw Error(Errc::InvalidArgument, "unknown variable '" + std::string(name) + "'");
}

VarSet Ring::var_set(const std::vector<std::string>& vars) const {
  VarSet s;
  for (const auto& v : vars) s.set(index_of(v));
  return s;
}

Polynomial Ring::var(std::string_view name) const { return Polynomial::variable(field, nvars(), index_of(name)); }

Polynomial Ring::parse(std::string_view text) const { return parse_polynomial(text, *this); }

std::string Ring::format(const Polynomial& f) const { return to_string(f, names); }

void VariableSplit::validate(std::size_t nvars) const {
  if ((base & fiber).any()) throw Error(Errc::InvalidArgument, "base and fiber variables overlap");
  VarSet all;
  for (std::size_t i = 0; i < nvars; ++i) all.set(i);
  if ((base | fiber) != all) throw Error(Errc::InvalidArgument, "base and fiber variables must cover the ring");
  if (fiber.none()) throw Error(Errc::InvalidArgument, "no fiber variables");
}

PointSpec PointSpec::origin(std::size_t nvars) {
  PointSpec p;
  for (std::size_t i = 0; i < nvars; ++i) p.vars.set(i);
  p.is_origin = true;
  return p;
}

PointSpec PointSpec::prime(const VarSet& vars, std::size_t nvars) {
  if (vars.none()) throw Error(Errc::InvalidArgument, "a coordinate prime needs at least one variable");
  PointSpec p;
  p.vars = vars;
  p.is_origin = vars.count() == nvars;
  return p;
}

// -------------------------------------------------------------- operations

Polynomial initial_form(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "initial form of zero");
  return f.homogeneous_component(static_cast<unsigned>(f.order().finite().numerator().get_ui()));
}

Polynomial initial_form_at(const Polynomial& f, const VarSet& vars) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "initial form of zero");
  const unsigned d = static_cast<unsigned>(f.order_in(vars).finite().numerator().get_ui());
  Polynomial r(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.degree_in(vars) == d) r.add_term(m, c);
  return r;
}

Rational binomial_in(const Field& field, unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return field.reduce(Rational(b, mpz_class(1)));
}

Polynomial hasse_derivative(const Polynomial& f, std::size_t var, unsigned order) {
  if (var >= f.nvars()) throw Error(Errc::InvalidArgument, "variable index out of range");
  Polynomial r(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] < order) continue;
    Monomial lowered = m;
    lowered.set(var, m[var] - order);
    r.add_term(lowered, c * binomial_in(f.field(), m[var], order));
  }
  return r;
}

Polynomial translate(const Polynomial& f, std::size_t var, const Polynomial& s) {
  if (s.depends_on(var)) throw Error(Errc::IllegalSubstitution, "translation involves the substituted variable");
  // Taylor expansion: f(var + s) = sum_b D^b_var(f) * s^b.
  Polynomial result(f.field(), f.nvars());
  Polynomial s_power = Polynomial::constant(f.field(), f.nvars(), Rational(1));
  const unsigned top = f.degree_in(var);
  for (unsigned b = 0; b <= top; ++b) {
    result += hasse_derivative(f, var, b) * s_power;
    if (b < top) s_power *= s;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (images.size() != f.nvars()) throw Error(Errc::InvalidArgument, "one image per variable required");
  if (images.empty()) return f;
  const Field& field = images.front().field();
  const std::size_t n_out = images.front().nvars();
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(field, n_out, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(field, n_out);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(field, n_out, c);
    for (std::size_t i = 0; i < f.nvars(); ++i)
      if (m[i]) t *= power_of(i, m[i]);
    result += t;
  }
  return result;
}

std::optional<Polynomial> pth_power_root(const Polynomial& H, unsigned e) {
  const std::uint64_t p = H.field().characteristic();
  if (p == 0) throw Error(Errc::NotApplicable, "p-th power roots need a prime field");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, e);
  if (!q.fits_uint_p()) return std::nullopt;
  const unsigned step = static_cast<unsigned>(q.get_ui());
  Polynomial root(H.field(), H.nvars());
  for (const auto& [m, c] : H.terms()) {
    Monomial r(m.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] % step != 0) return std::nullopt;
      r.set(i, m[i] / step);
    }
    // Frobenius fixes every element of F_p, so c is its own p^e-th root.
    root.add_term(r, c);
  }
  return root;
}

}  // namespace slopelab
