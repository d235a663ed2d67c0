#include "slopelab/arith.hpp"

#include <cctype>

namespace slopelab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::IllegalSubstitution: return "IllegalSubstitution";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotMonomial: return "NotMonomial";
    case Errc::DimensionCap: return "DimensionCap";
    case Errc::CertificateRejected: return "CertificateRejected";
    case Errc::InexactNubar: return "InexactNubar";
    case Errc::UnknownKernel: return "UnknownKernel";
    case Errc::NotALambdaSequence: return "NotALambdaSequence";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::NotMonic: return "NotMonic";
    case Errc::BadDegree: return "BadDegree";
    case Errc::PointNotSingular: return "PointNotSingular";
    case Errc::RoundsExhausted: return "RoundsExhausted";
    case Errc::CharDividesDegree: return "CharDividesDegree";
    case Errc::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(Errc::Parse, "not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  return Rational(mpz_class(n), mpz_class(std::string(den)));
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------------------------------------------------------- prime fields

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (!is_prime(modulus)) throw Error(Errc::InvalidArgument, "modulus " + std::to_string(modulus) + " is not prime");
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  residue_ = static_cast<std::uint64_t>(r);
}

void PrimeFieldElement::check_same(const PrimeFieldElement& o) const {
  if (o.modulus_ != modulus_) throw Error(Errc::InvalidArgument, "mixed prime field moduli");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check_same(o);
  std::uint64_t s = residue_ + o.residue_;
  if (s >= modulus_) s -= modulus_;
  return {Raw{}, s, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check_same(o);
  return *this + (-o);
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return {Raw{}, residue_ == 0 ? 0 : modulus_ - residue_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check_same(o);
  const auto prod = static_cast<unsigned __int128>(residue_) * o.residue_;
  return {Raw{}, static_cast<std::uint64_t>(prod % modulus_), modulus_};
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  PrimeFieldElement result(Raw{}, 1 % modulus_, modulus_);
  PrimeFieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (residue_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(" + std::to_string(modulus_) + ")");
  return pow(modulus_ - 2);
}

PrimeFieldElement PrimeFieldElement::operator/(const PrimeFieldElement& o) const {
  check_same(o);
  return *this * o.inverse();
}

// ------------------------------------------------------- ExtendedRational

ExtendedRational::ExtendedRational(Rational r) : v_(std::move(r)) {
  if (std::get<Rational>(v_).sign() < 0)
    throw Error(Errc::InvalidArgument, "extended rationals are non-negative");
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtendedRational(Rational::parse(text));
}

const Rational& ExtendedRational::finite() const {
  if (is_infinite()) throw Error(Errc::InvalidArgument, "value is infinite");
  return std::get<Rational>(v_);
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) { return a.v_ == b.v_; }

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.finite() <=> b.finite();
}

std::string ExtendedRational::to_string() const { return is_infinite() ? "inf" : finite().to_string(); }

ExtendedRational ext_add(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtendedRational::infinity();
  return ExtendedRational(a.finite() + b.finite());
}

ExtendedRational ext_min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }
ExtendedRational ext_max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }

ExtendedRational ext_div(const ExtendedRational& a, const Rational& d) {
  if (d.sign() <= 0) throw Error(Errc::InvalidArgument, "division of an order value by a non-positive number");
  if (a.is_infinite()) return a;
  return ExtendedRational(a.finite() / d);
}

// ------------------------------------------------------------------ Field

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw Error(Errc::InvalidArgument, "prime exceeds machine-word limit");
  return Field(p);
}

Rational Field::reduce(const Rational& x) const {
  if (p_ == 0) return x;
  const mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = x.numerator() % p;
  if (num < 0) num += p;
  mpz_class den = x.denominator() % p;
  if (den == 0) throw Error(Errc::DivisionByZero, "denominator vanishes in " + to_string());
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return Rational(num, mpz_class(1));
}

Rational Field::add(const Rational& a, const Rational& b) const { return reduce(a + b); }
Rational Field::sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
Rational Field::mul(const Rational& a, const Rational& b) const { return reduce(a * b); }

Rational Field::inverse(const Rational& a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return reduce(Rational(1) / a);
}

Rational Field::div(const Rational& a, const Rational& b) const { return mul(a, inverse(b)); }

}  // namespace slopelab
