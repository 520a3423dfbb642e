#include <catch_amalgamated.hpp>

#include "eisencoh/half_int.hpp"

using eisencoh::HalfInt;

TEST_CASE("HalfInt arithmetic is exact") {
  const HalfInt half = HalfInt::fromTwice(1);
  CHECK((half + half) == 1);
  CHECK((HalfInt::fromInt(2) - HalfInt::fromTwice(3)) == half);
  CHECK(-HalfInt::fromTwice(3) == HalfInt::fromTwice(-3));
  CHECK((1 - half) == half);
  CHECK(HalfInt::fromTwice(-3) < HalfInt::fromTwice(-1));
  CHECK_FALSE(half.isInteger());
  CHECK(HalfInt::fromTwice(-4).isInteger());
  CHECK(HalfInt::fromTwice(-4).toInt() == -2);
}

TEST_CASE("HalfInt floor and ceil") {
  CHECK(HalfInt::fromTwice(-3).floor() == -2);
  CHECK(HalfInt::fromTwice(-3).ceil() == -1);
  CHECK(HalfInt::fromTwice(3).floor() == 1);
  CHECK(HalfInt::fromTwice(3).ceil() == 2);
  CHECK(HalfInt::fromTwice(-2).floor() == -1);
  CHECK(HalfInt::fromTwice(-2).ceil() == -1);
  CHECK(HalfInt{}.floor() == 0);
}

TEST_CASE("HalfInt prints fractions, never decimals") {
  CHECK(HalfInt::fromTwice(-3).str() == "-3/2");
  CHECK(HalfInt::fromTwice(1).str() == "1/2");
  CHECK(HalfInt::fromInt(-2).str() == "-2");
  CHECK(HalfInt{}.str() == "0");

  for (std::int64_t t = -41; t <= 41; ++t) {
    HalfInt parsed;
    REQUIRE(eisencoh::parseHalfInt(HalfInt::fromTwice(t).str(), parsed));
    CHECK(parsed.twice() == t);
  }
  HalfInt junk;
  CHECK_FALSE(eisencoh::parseHalfInt("1.5", junk));
  CHECK_FALSE(eisencoh::parseHalfInt("3/4", junk));
  CHECK_FALSE(eisencoh::parseHalfInt("", junk));
}
