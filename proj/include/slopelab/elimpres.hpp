#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopelab/samuel.hpp"

namespace slopelab {

/// f W^weight
struct WeightedGenerator {
  Polynomial f;
  unsigned weight = 1;
  friend bool operator==(const WeightedGenerator&, const WeightedGenerator&) = default;
};

/// R[f_1 W^{n_1}, ..., f_r W^{n_r}] over a polynomial ring.
class ReesAlgebra {
 public:
  /// Throws InvalidArgument for zero generators, zero weights or ring mismatch.
  ReesAlgebra(Field field, std::size_t nvars, std::vector<WeightedGenerator> gens);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const std::vector<WeightedGenerator>& generators() const { return gens_; }

 private:
  Field field_;
  std::size_t n_;
  std::vector<WeightedGenerator> gens_;
};

/// min over generators of nu_P(f_i)/n_i, nu_P being the order in the prime's
/// variables; infinity for no generators.  The point is in Sing iff >= 1.
ExtendedRational sing_order(const std::vector<WeightedGenerator>& gens, const VarSet& vars);
ExtendedRational sing_order(const ReesAlgebra& G, const PointSpec& at);

/// Adds D^b_v(f) W^{n-b} for every generator, variable v and 0 < b < n, until
/// nothing new appears.  New generators are made monic; a new g W^m is dropped
/// when some f W^n with f | g and n >= m is already present.
ReesAlgebra diff_saturate_once(const ReesAlgebra& G);

/// h = z^q + a_1 z^{q-1} + ... + a_q in the fiber variable z, q = p^ell.
struct Fiber {
  std::size_t var = 0;
  unsigned ell = 0;
  unsigned degree = 0;           // q
  Polynomial h;
  std::vector<Polynomial> coeffs;  // coeffs[j-1] = a_j, j = 1..q
};

struct FiberInput {
  std::size_t var;
  Polynomial g;
};

struct PPresentation {
  Field field = Field::rationals();
  std::size_t nvars = 0;
  VariableSplit split;
  std::vector<Fiber> fibers;
  std::vector<WeightedGenerator> elimination;
  bool elimination_user_supplied = false;

  std::uint64_t p() const { return field.characteristic(); }
};

/// Reads the coefficients of a monic h of degree p^ell in var.
Fiber make_fiber(const Polynomial& h, std::size_t var, const VariableSplit& split);

/// h = (1/N') D^r_z(g) with N = N' p^ell, r = (N'-1) p^ell.  Throws
/// NotApplicable in characteristic 0, NotMonic, BadDegree when N = 0 or
/// p does not divide N, InvalidArgument when a coefficient involves a fiber
/// variable.
Fiber build_fiber(const Polynomial& g, std::size_t var, const VariableSplit& split);
PPresentation build_p_presentation(const std::vector<FiberInput>& fibers, const VariableSplit& split,
                                   std::optional<std::vector<WeightedGenerator>> elimination = std::nullopt);
PPresentation build_p_presentation(const Polynomial& g, std::size_t var, const VariableSplit& split);

/// Approximate generating set of the elimination algebra: a_j W^j for j < q,
/// and D^b_y(a_j) W^{j-b} for base variables y and 0 < b < j <= q.
std::vector<WeightedGenerator> elimination_generators(const PPresentation& P);

enum class SlopeCase { A, B1, B2, B3 };
const char* to_string(SlopeCase c);

struct FiberOrders {
  std::size_t var = 0;
  std::vector<ExtendedRational> ratios;  // nu(a_j)/j, j = 1..q
  ExtendedRational last;                 // nu(a_q)/q
  SlopeCase case_label = SlopeCase::A;
};

/// var -> var + shift applied to the fiber equation.
struct Translation {
  unsigned round = 0;
  std::size_t var = 0;
  Polynomial shift;
  ExtendedRational slope_before;
  ExtendedRational slope_after;
};

struct SlopeReport {
  std::vector<FiberOrders> fibers;
  ExtendedRational elimination_order;
  ExtendedRational slope;
  SlopeCase case_label = SlopeCase::A;
  bool normal_form = false;
  std::optional<ExtendedRational> hord;
  std::vector<Translation> transcript;
  bool intermediate_violation = false;  // some nu(a_j)/j, j < q, is below the elimination order
  bool elimination_approximate = true;
  bool degenerate = false;              // every coefficient vanished
  std::vector<WeightedGenerator> elimination;
  std::vector<Polynomial> equations;    // final h per fiber
};

/// The prime must contain every fiber variable.  Throws PointNotSingular when
/// some nu(a_j)/j < 1.
SlopeReport slope(const PPresentation& P, const PointSpec& at);

class RoundsExhaustedError : public Error {
 public:
  RoundsExhaustedError(const std::string& what, SlopeReport best)
      : Error(Errc::RoundsExhausted, what), best_(std::move(best)) {}
  /// Last report; its slope is a lower bound for the maximal slope.
  const SlopeReport& best() const { return best_; }

 private:
  SlopeReport best_;
};

/// Translates away B3 situations until a normal form is reached, then sets
/// hord = slope.  Throws RoundsExhaustedError after max_rounds translations.
SlopeReport clean(PPresentation P, const PointSpec& at, unsigned max_rounds = 16);

/// Order of the elimination algebra in Tschirnhausen form: shift var by
/// -a_1/m, then min_{i>=2} nu(a'_i)/i at the base image of the point.
/// Throws CharDividesDegree, NotMonic.
ExtendedRational tschirnhausen_ord(const Polynomial& f, std::size_t var, const PointSpec& at);

struct TheoremCheckInput {
  LocalRing A;  // evaluated at A.point
  VariableSplit split;
  std::vector<FiberInput> fibers;
  std::optional<std::vector<WeightedGenerator>> elimination;
  std::vector<std::vector<Polynomial>> candidates;
  SamuelSlopeOptions samuel{};
  unsigned max_rounds = 16;
};

struct TheoremCheckReport {
  KernelClass classification = KernelClass::Unknown;
  KernelReport kernel;
  ExtendedRational hord;
  ExtendedRational ord;
  std::string hord_method;  // "p-presentation" | "tschirnhausen"
  std::optional<SlopeReport> slope;
  std::optional<SamuelSlopeResult> samuel;
  bool samuel_exact = false;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Non-extremal: H-ord = 1, and ord = 1 as well at a closed point.
/// Extremal: H-ord = min(Samuel slope lower bound, ord); when that holds with
/// H-ord < ord the Samuel slope is pinned and reported exact.
/// Throws Inconsistent when the presentation does not match A, NotApplicable
/// for non-reduced (degenerate) germs.
TheoremCheckReport cross_check_theorems(const TheoremCheckInput& in);

}  // namespace slopelab
