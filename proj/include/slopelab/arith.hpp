#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "slopelab/error.hpp"

namespace slopelab {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design of arithmetic literals
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Accepts "n" or "n/d" with optional sign.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Canonical text: "n" for integers, "n/d" otherwise.
  std::string to_string() const;

 private:
  mpq_class q_{0};
};

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::uint64_t modulus);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator/(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t e) const;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

 private:
  struct Raw {};
  PrimeFieldElement(Raw, std::uint64_t r, std::uint64_t m) : residue_(r), modulus_(m) {}
  void check_same(const PrimeFieldElement& o) const;

  std::uint64_t residue_;
  std::uint64_t modulus_;
};

/// Value in Q>=0 together with a distinguished INFINITY.
class ExtendedRational {
 public:
  ExtendedRational() : v_(Rational(0)) {}
  ExtendedRational(Rational r);  // NOLINT: finite values convert implicitly
  ExtendedRational(long n) : ExtendedRational(Rational(n)) {}  // NOLINT

  static ExtendedRational infinity() {
    ExtendedRational e;
    e.v_ = Infinity{};
    return e;
  }
  /// Accepts "inf" or a non-negative rational.
  static ExtendedRational parse(std::string_view text);

  bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }
  bool is_finite() const { return !is_infinite(); }
  /// Throws InvalidArgument when infinite.
  const Rational& finite() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  std::string to_string() const;

 private:
  struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
  };
  std::variant<Rational, Infinity> v_;
};

ExtendedRational ext_add(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational ext_min(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational ext_max(const ExtendedRational& a, const ExtendedRational& b);
/// a / d for a positive rational d; infinity stays infinity.
ExtendedRational ext_div(const ExtendedRational& a, const Rational& d);

/// Coefficient field: Q (characteristic 0) or F_p.  Coefficients of either
/// field are carried as Rational; over F_p they are integers in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is prime.
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }

  /// Canonical representative of a rational in this field.  Over F_p the
  /// denominator must be invertible (DivisionByZero otherwise).
  Rational reduce(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational inverse(const Rational& a) const;

  std::string to_string() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

}  // namespace slopelab
