#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slopelab/arith.hpp"

#ifndef SLOPELAB_MAX_VARS
#define SLOPELAB_MAX_VARS 8
#endif

namespace slopelab {

inline constexpr std::size_t kMaxVars = SLOPELAB_MAX_VARS;

using VarSet = std::bitset<kMaxVars>;

/// Dense exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const unsigned> exps);

  std::size_t nvars() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return deg_; }
  unsigned degree_in(const VarSet& vars) const;
  bool is_one() const { return deg_ == 0; }
  VarSet support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial pow(unsigned k) const;
  Monomial extended(std::size_t nvars) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

bool grlex_less(const Monomial& a, const Monomial& b);
bool grevlex_less(const Monomial& a, const Monomial& b);
bool lex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/// Exact multivariate polynomial over Q or F_p.  Terms are kept in
/// descending graded-lex order with no zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() : field_(Field::rationals()), n_(0) {}
  Polynomial(Field field, std::size_t nvars);

  static Polynomial constant(Field field, std::size_t nvars, const Rational& c);
  static Polynomial variable(Field field, std::size_t nvars, std::size_t index);
  static Polynomial term(Field field, const Monomial& m, const Rational& c);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Leading term under graded lex.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  /// Adds c * m in place (c is reduced into the field first).
  void add_term(const Monomial& m, const Rational& c);

  int total_degree() const;  // -1 for zero
  /// Minimal total degree of a term; infinity for zero.
  ExtendedRational order() const;
  /// Minimal degree of a term in the given variables; infinity for zero.
  ExtendedRational order_in(const VarSet& vars) const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;
  VarSet support() const;

  Polynomial homogeneous_component(unsigned degree) const;
  /// Coefficients c_k with f = sum_k c_k * var^k; c_k free of var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  /// Same polynomial viewed in a ring with more variables.
  Polynomial extended(std::size_t nvars) const;
  /// Scalar multiple making the leading coefficient 1 (zero stays zero).
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  Field field_;
  std::size_t n_;
  TermMap terms_;
};

/// Variable names and coefficient field of a polynomial ring.
struct Ring {
  Field field;
  std::vector<std::string> names;

  Ring(Field f, std::vector<std::string> vars);
  std::size_t nvars() const { return names.size(); }
  /// Throws InvalidArgument for unknown names.
  std::size_t index_of(std::string_view name) const;
  VarSet var_set(const std::vector<std::string>& vars) const;
  Polynomial var(std::string_view name) const;
  Polynomial constant(const Rational& c) const { return Polynomial::constant(field, nvars(), c); }
  Polynomial zero() const { return Polynomial(field, nvars()); }
  /// Parses the text syntax, e.g. "z^2 - y1^3*y2".
  Polynomial parse(std::string_view text) const;
  std::string format(const Polynomial& f) const;
};

Polynomial parse_polynomial(std::string_view text, const Ring& ring);
std::string to_string(const Polynomial& f, const std::vector<std::string>& names);

/// Base/fiber partition of the ring variables encoding a projection.
struct VariableSplit {
  VarSet base;
  VarSet fiber;

  /// Throws InvalidArgument unless the sets are disjoint and cover nvars.
  void validate(std::size_t nvars) const;
};

/// The origin, or a coordinate prime <x_i : i in vars>.
struct PointSpec {
  VarSet vars;
  bool is_origin = true;

  static PointSpec origin(std::size_t nvars);
  static PointSpec prime(const VarSet& vars, std::size_t nvars);
  /// Closed point of the ring: every variable is in the prime.
  bool is_closed(std::size_t nvars) const { return vars.count() == nvars; }
};

/// Lowest-degree homogeneous component.  Throws ZeroPolynomial for f = 0.
Polynomial initial_form(const Polynomial& f);
/// Part of f of minimal degree in the given variables (initial form at the
/// coordinate prime they generate).
Polynomial initial_form_at(const Polynomial& f, const VarSet& vars);

/// Hasse derivative: coefficient of T^order in f(.., var + T, ..).
Polynomial hasse_derivative(const Polynomial& f, std::size_t var, unsigned order);

/// f with var replaced by var + s.  Throws IllegalSubstitution if s involves var.
Polynomial translate(const Polynomial& f, std::size_t var, const Polynomial& s);

/// f(images[0], ..., images[n-1]).
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

/// G with G^(p^e) = H over F_p, if one exists.
std::optional<Polynomial> pth_power_root(const Polynomial& H, unsigned e);

/// binomial(n, k) reduced into the field.
Rational binomial_in(const Field& field, unsigned n, unsigned k);

}  // namespace slopelab
