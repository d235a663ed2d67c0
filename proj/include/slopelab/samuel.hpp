#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopelab/groebner.hpp"
#include "slopelab/newton.hpp"

namespace slopelab {

/// k[x]/J localized at the origin or at a coordinate prime.
struct LocalRing {
  Ring ring;
  Ideal J;
  PointSpec point;

  /// Throws InvalidArgument unless every generator of J lies in the point's prime.
  LocalRing(Ring ring, Ideal J, PointSpec point);
  static LocalRing at_origin(Ring ring, Ideal J);

  std::size_t nvars() const { return ring.nvars(); }
  /// Generators x_i of the point's prime.
  Ideal maximal_ideal() const;
};

/// nu_I(f), or a lower bound once the search hits the cap.
struct OrderValue {
  ExtendedRational value;
  bool at_least = false;  // value is the cap, the true order is >= value
};

enum class NubarStrategy { Auto, Monomial, Certificate, Limit };
enum class NubarStatus { Exact, LowerBound };

const char* to_string(NubarStrategy s);
const char* to_string(NubarStatus s);

struct CertificateEntry {
  std::vector<Rational> weights;  // all > 0
  Rational ideal_value;           // claimed v(I)
};

/// Weighted-degree valuations, read in coordinates obtained by substituting
/// x_i -> coordinate_change[i] into every polynomial.
struct ValuationCertificate {
  std::optional<std::vector<Polynomial>> coordinate_change;
  std::vector<CertificateEntry> entries;
};

struct NubarOptions {
  NubarStrategy strategy = NubarStrategy::Auto;
  std::optional<ValuationCertificate> certificate;
  unsigned max_n = 20;
  unsigned cap = 24;
};

struct NubarResult {
  ExtendedRational value;
  NubarStatus status = NubarStatus::LowerBound;
  std::string source;              // "monomial" | "certificate" | "limit" | "trivial"
  bool confirmed_by_limit = false;  // certificate value reached by the limit estimator
  unsigned witness_n = 0;           // limit strategy: the n attaining the maximum

  bool exact() const { return status == NubarStatus::Exact; }
};

/// Computes nu_I by membership in I^k + J, caching one Groebner basis per k.
/// Works at the origin; membership is decided in the polynomial ring, which
/// matches the local ring when I + J is primary to the maximal ideal, or J = 0
/// and I is monomial (NotApplicable otherwise).
class SamuelEngine {
 public:
  SamuelEngine(LocalRing A, Ideal I, GroebnerOptions options = {});

  const LocalRing& ring() const { return A_; }
  const Ideal& ideal() const { return I_; }

  /// Zero in A (f in J).
  bool is_zero_class(const Polynomial& f);
  OrderValue nu(const Polynomial& f, unsigned cap = 24);
  /// max over n <= max_n of nu(f^n)/n, with capped values used as bounds.
  NubarResult nubar_limit(const Polynomial& f, unsigned max_n = 20, unsigned cap = 24);
  NubarResult nubar(const Polynomial& f, const NubarOptions& options = {});

 private:
  const GroebnerBasis& power_basis(unsigned k);
  NubarResult nubar_certificate(const Polynomial& f, const ValuationCertificate& cert);

  LocalRing A_;
  Ideal I_;
  GroebnerOptions opts_;
  std::optional<GroebnerBasis> j_basis_;
  std::vector<Ideal> powers_;  // powers_[k-1] = I^k
  std::map<unsigned, GroebnerBasis> bases_;
};

NubarResult nubar(const LocalRing& A, const Ideal& I, const Polynomial& f, const NubarOptions& options = {});

/// f in I^(>=b), or I^(>b) when strict.  A lower bound that already settles
/// the question is accepted; otherwise an inexact value raises InexactNubar.
bool graded_piece_member(const LocalRing& A, const Ideal& I, const Polynomial& f, const Rational& b, bool strict,
                         const NubarOptions& options = {});

enum class KernelClass { Regular, Extremal, NonExtremal, Unknown };
enum class KernelMethod { Monomial, Factorization, Enumeration, Partial };

const char* to_string(KernelClass c);
const char* to_string(KernelMethod m);

struct KernelReport {
  /// Linear forms in the prime's variables; coefficients may involve the
  /// remaining variables (they are units in the residue field).
  std::vector<Polynomial> basis;
  std::size_t r = 0;          // dim ker
  std::size_t t = 0;          // embedding dimension - dim A
  std::size_t d = 0;          // dim A
  std::size_t embedding_dimension = 0;
  KernelClass classification = KernelClass::Unknown;
  KernelMethod method = KernelMethod::Partial;
  /// Tangent cone taken from the initial forms of the given generators
  /// without a standard-basis check.
  bool presentation_relative = false;
};

struct KernelOptions {
  bool allow_partial = false;
  std::vector<Polynomial> candidates;  // extra forms tested by the partial method
  GroebnerOptions groebner{};
};

/// Throws NotApplicable when a generator of J has a linear initial form
/// (the embedding dimension would drop), UnknownKernel when no exact method
/// applies and partial results are not allowed.
KernelReport kernel_lambda(const LocalRing& A, const KernelOptions& options = {});

struct SamuelSlopeOptions {
  NubarOptions nubar{};
  bool auto_translate = true;
  KernelOptions kernel{};
};

struct SamuelSlopeResult {
  ExtendedRational lower_bound;
  bool exact = false;
  KernelClass classification = KernelClass::Unknown;
  std::vector<Polynomial> witness;  // best sequence found
  std::vector<NubarResult> witness_values;
  std::size_t sequences_tried = 0;
};

/// Samuel slope at the origin.  Non-extremal rings give exactly 1; extremal
/// ones give the best min over candidate sequences (the kernel basis itself
/// is always tried), plus automatic translations when the nubar strategy is
/// exact.
SamuelSlopeResult samuel_slope(const LocalRing& A, const std::vector<std::vector<Polynomial>>& candidates,
                               const SamuelSlopeOptions& options = {});

/// Throws NotALambdaSequence unless the linear parts of seq form a basis of
/// the kernel span.
void validate_lambda_sequence(const LocalRing& A, const KernelReport& kernel, const std::vector<Polynomial>& seq);

/// The linear parts of kappa generate a reduction of the maximal ideal:
/// Krull dimension of k[x]/(in(J) + <linear parts>) is 0.  Needs |kappa| = dim A.
bool check_reduction_by_d(const LocalRing& A, const std::vector<Polynomial>& kappa,
                          const GroebnerOptions& options = {});

/// Ideal generated by the initial forms (at the point) of J's generators.
Ideal tangent_cone_ideal(const LocalRing& A);

}  // namespace slopelab
