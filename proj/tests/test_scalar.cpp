#include <stdexcept>

#include "doctest.h"
#include "hopfkit/error.hpp"
#include "hopfkit/scalar.hpp"

using namespace hopfkit;

TEST_CASE("field parsing") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("GF:7").characteristic() == 7);
  CHECK_THROWS_AS(FieldSpec::parse("GF:4"), Error);
  try {
    FieldSpec::prime(4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_field);
  }
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("rational arithmetic stays reduced") {
  auto a = Scalar::rational(2, 4);
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 2);
  auto b = Scalar::rational(1, -3);
  CHECK(b.numerator() == -1);
  CHECK(b.denominator() == 3);
  CHECK((a + b) == Scalar::rational(1, 6));
  CHECK((a * b) == Scalar::rational(-1, 6));
  CHECK((a / b) == Scalar::rational(-3, 2));
  CHECK(a.inverse() == Scalar(FieldSpec::rationals(), 2));
  CHECK_THROWS(Scalar(FieldSpec::rationals(), 0).inverse());
}

TEST_CASE("rational overflow is reported, not wrapped") {
  Scalar big(FieldSpec::rationals(), std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("prime field arithmetic matches integer residues") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    auto F = FieldSpec::prime(p);
    for (std::int64_t x = -20; x <= 20; ++x) {
      for (std::int64_t y = -5; y <= 5; ++y) {
        auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
        Scalar sx(F, x), sy(F, y);
        CHECK((sx + sy).numerator() == mod(x + y));
        CHECK((sx * sy).numerator() == mod(x * y));
        CHECK((sx - sy).numerator() == mod(x - y));
        if (mod(y) != 0) CHECK(((sx / sy) * sy) == sx);
      }
    }
  }
}

TEST_CASE("scalar parsing") {
  auto F = FieldSpec::prime(5);
  CHECK(Scalar::parse(F, "1/2") == Scalar(F, 3));
  CHECK(Scalar::parse(F, "-1") == Scalar(F, 4));
  CHECK(Scalar::parse(FieldSpec::rationals(), "-3/6") == Scalar::rational(-1, 2));
  CHECK_THROWS_AS(Scalar::parse(FieldSpec::rationals(), "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(FieldSpec::rationals(), "abc"), Error);
  CHECK(Scalar::rational(-1, 2).to_string() == "-1/2");
}

TEST_CASE("mixing fields is rejected") {
  Scalar a(FieldSpec::prime(3), 1), b(FieldSpec::rationals(), 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}
