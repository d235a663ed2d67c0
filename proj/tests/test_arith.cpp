#include <doctest.h>

#include <algorithm>

#include "slopelab/arith.hpp"
#include "support.hpp"

using namespace slopelab;
using testing::random_rational;

TEST_CASE("extended addition") {
  CHECK(ext_add(Rational(3, 2), Rational(1, 3)) == ExtendedRational(Rational(11, 6)));
  CHECK(ext_add(ExtendedRational::infinity(), 5).is_infinite());
  CHECK(ext_add(0, 0) == ExtendedRational(0));
}

TEST_CASE("extended minimum") {
  CHECK(ext_min(Rational(3, 2), 2) == ExtendedRational(Rational(3, 2)));
  CHECK(ext_min(ExtendedRational::infinity(), Rational(7, 3)) == ExtendedRational(Rational(7, 3)));
  CHECK(ext_min(ExtendedRational::infinity(), ExtendedRational::infinity()).is_infinite());
  CHECK(ext_max(1, ExtendedRational::infinity()).is_infinite());
}

TEST_CASE("extended division and finite access") {
  CHECK(ext_div(3, Rational(2)) == ExtendedRational(Rational(3, 2)));
  CHECK(ext_div(ExtendedRational::infinity(), Rational(2)).is_infinite());
  CHECK_THROWS_AS(ExtendedRational::infinity().finite(), Error);
}

TEST_CASE("rational text") {
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-4/2").to_string() == "-2");
  CHECK(Rational::parse("2/1") == Rational(2));
  CHECK(ExtendedRational::parse("inf").is_infinite());
  CHECK(ExtendedRational::parse("5/6").to_string() == "5/6");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational inverse pairs multiply to one") {
  for (int k = 0; k < 500; ++k) {
    const Rational a = random_rational(1000);
    if (a.is_zero()) continue;
    CHECK((a * (Rational(1) / a)) == Rational(1));
  }
}

TEST_CASE("extended order is total with infinity on top") {
  std::vector<ExtendedRational> xs;
  for (int k = 0; k < 40; ++k) xs.push_back(ExtendedRational(Rational(testing::uniform(0, 50), testing::uniform(1, 7))));
  xs.push_back(ExtendedRational::infinity());
  for (const auto& a : xs) {
    CHECK(!(ExtendedRational::infinity() < a));
    for (const auto& b : xs)
      for (const auto& c : xs)
        if (a <= b && b <= c) CHECK(a <= c);
  }
  CHECK(std::count_if(xs.begin(), xs.end(), [](const ExtendedRational& e) { return e.is_infinite(); }) == 1);
}

TEST_CASE("prime field axioms hold exhaustively") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const Field F = Field::prime(p);
    for (long a = 0; a < long(p); ++a)
      for (long b = 0; b < long(p); ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(F.add(a, b), b) == F.reduce(a));
        if (b != 0) CHECK(F.mul(F.div(a, b), b) == F.reduce(a));
        for (long c = 0; c < long(p); ++c) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
      }
  }
}

TEST_CASE("prime field elements") {
  const Field F11 = Field::prime(11);
  for (long a = 1; a < 11; ++a) CHECK(F11.mul(a, F11.inverse(a)) == Rational(1));
  CHECK(F11.reduce(Rational(1, 2)) == Rational(6));
  CHECK(F11.reduce(Rational(-1)) == Rational(10));
  CHECK_THROWS_AS(F11.reduce(Rational(1, 11)), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  const PrimeFieldElement x(3, 7);
  CHECK((x * x.inverse()).residue() == 1);
  CHECK(x.pow(6).residue() == 1);
  CHECK((-x).residue() == 4);
  CHECK_THROWS(PrimeFieldElement(0, 7).inverse());
  CHECK_THROWS(x + PrimeFieldElement(1, 5));
}
