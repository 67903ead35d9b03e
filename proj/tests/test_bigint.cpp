#include <doctest.h>

#include <random>

#include "hgr/bigint.hpp"

using hgr::BigInt;

TEST_CASE("bigint decimal round trip") {
    CHECK(BigInt(0).to_decimal() == "0");
    CHECK(BigInt(-1).to_decimal() == "-1");
    CHECK(BigInt(1234567890123456789LL).to_decimal() == "1234567890123456789");
    CHECK(BigInt::from_decimal("-987654321098765432109876543210").to_decimal() ==
          "-987654321098765432109876543210");
    CHECK(BigInt::from_decimal("000123").to_decimal() == "123");
    CHECK(BigInt::from_decimal("-0") == BigInt(0));
    CHECK_THROWS_AS(BigInt::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_decimal("12x"), std::invalid_argument);
}

TEST_CASE("bigint arithmetic agrees with native on small values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int it = 0; it < 2000; ++it) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q == BigInt(a / b));
            CHECK(r == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint divmod reconstruction on wide values") {
    std::mt19937_64 rng(11);
    auto random_big = [&](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i)
            v = v * BigInt(4294967296LL) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
        return rng() & 1 ? -v : v;
    };
    for (int it = 0; it < 200; ++it) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 3));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(7), BigInt(0)) == BigInt(7));
    BigInt a = BigInt::from_decimal("123456789012345678901234567890");
    BigInt b = BigInt::from_decimal("9876543210987654321");
    BigInt g = BigInt::gcd(a, b);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
}

TEST_CASE("bigint to_double and int64 bounds") {
    CHECK(BigInt(42).to_double() == doctest::Approx(42.0));
    CHECK(BigInt::from_decimal("-1000000000000").to_double() == doctest::Approx(-1e12));
    CHECK(BigInt(42).fits_int64());
    CHECK(BigInt(42).to_int64() == 42);
    CHECK(BigInt::from_decimal("-9223372036854775808").to_int64() ==
          std::numeric_limits<long long>::min());
    CHECK(!BigInt::from_decimal("9223372036854775808").fits_int64());
}
