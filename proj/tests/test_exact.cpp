#include <slee/exact.hpp>

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

using slee::BigNat;

TEST_SUITE_BEGIN("exact");

TEST_CASE("small values round-trip through to_string and to_u64") {
  CHECK(BigNat(0).to_string() == "0");
  CHECK(BigNat(1).to_string() == "1");
  CHECK(BigNat(9).to_string() == "9");
  CHECK(BigNat(10).to_string() == "10");
  CHECK(BigNat(18446744073709551615ULL).to_string() == "18446744073709551615");
  CHECK(BigNat(0).is_zero());
  CHECK_FALSE(BigNat(1).is_zero());
  CHECK(BigNat(42).fits_u64());
  CHECK(BigNat(42).to_u64() == 42);
}

TEST_CASE("addition carries across limbs") {
  const std::uint64_t max64 = ~std::uint64_t{0};
  BigNat a(max64);
  BigNat sum = a + BigNat(1);
  // 2^64
  CHECK(sum.to_string() == "18446744073709551616");
  CHECK_FALSE(sum.fits_u64());

  // 2^128 = (2^64)^2, cross-checked externally
  BigNat two64 = sum;
  CHECK((two64 * two64).to_string() == "340282366920938463463374607431768211456");
}

TEST_CASE("multiplication matches externally computed products") {
  // (2^64 - 1)^2
  BigNat m(~std::uint64_t{0});
  CHECK((m * m).to_string() == "340282366920938463426481119284349108225");

  // two 39-digit operands, product computed externally
  auto from_decimal = [](const std::string& s) {
    BigNat v(0);
    for (char c : s) v = v * BigNat(10) + BigNat(std::uint64_t(c - '0'));
    return v;
  };
  BigNat x = from_decimal("123456789012345678901234567890123456789");
  BigNat y = from_decimal("987654321098765432109876543210987654321");
  CHECK((x * y).to_string() ==
        "1219326311370217952261850327338667885944871208653362292333223746380111"
        "12635269");
  CHECK((x + y).to_string() == "1111111110111111111011111111101111111110");
  CHECK(x.to_string() == "123456789012345678901234567890123456789");
}

TEST_CASE("factorial of 40 built by repeated multiplication") {
  BigNat f(1);
  for (std::uint64_t i = 2; i <= 40; ++i) f *= BigNat(i);
  CHECK(f.to_string() == "815915283247897734345611269596115894272000000000");
}

TEST_CASE("comparisons order values of different limb counts") {
  BigNat small(7);
  BigNat big = BigNat(~std::uint64_t{0}) + BigNat(1);
  CHECK(small < big);
  CHECK(big > small);
  CHECK(small <= BigNat(7));
  CHECK(small >= BigNat(7));
  CHECK(small == BigNat(7));
  CHECK(small != BigNat(8));
  CHECK(BigNat(0) == BigNat(0));
}

TEST_CASE("from_u128 splits into limbs correctly") {
  unsigned __int128 v = (unsigned __int128)0x0123456789abcdefULL << 64 |
                        0xfedcba9876543210ULL;
  BigNat b = BigNat::from_u128(v);
  // 0x0123456789abcdef * 2^64 + 0xfedcba9876543210
  CHECK(b.to_string() == "1512366075204170947332355369683137040");
}

TEST_CASE("to_long_double is accurate for values near 2^80") {
  BigNat v = BigNat(1);
  for (int i = 0; i < 80; ++i) v *= BigNat(2);
  const long double got = v.to_long_double();
  CHECK(got == std::exp2l(80.0L));
}

TEST_CASE("stream output matches to_string") {
  std::ostringstream os;
  os << (BigNat(1000000000000000000ULL) * BigNat(1000));
  CHECK(os.str() == "1000000000000000000000");
}

TEST_SUITE_END();
