#include "doctest.h"

#include "braidstat/bigint.hpp"

using braidstat::BigInt;
using braidstat::Rational;

namespace {
// Deterministic generator for property-style checks; test-only.
struct Lcg {
    unsigned long long s = 0x2545F4914F6CDD1DULL;
    long long next(long long lo, long long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (long long)((s >> 17) % (unsigned long long)(hi - lo + 1));
    }
};
}  // namespace

TEST_CASE("bigint small arithmetic matches int64") {
    Lcg rng;
    for (int i = 0; i < 2000; ++i) {
        long long a = rng.next(-1000000, 1000000);
        long long b = rng.next(-1000000, 1000000);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
    }
}

TEST_CASE("bigint large multiplication and division round trip") {
    BigInt a("123456789012345678901234567890123456789");
    BigInt b("987654321098765432109876543210");
    BigInt p = a * b;
    CHECK(p.to_string() == "121932631137021795226185032733744855963362292333223746380111126352690");
    BigInt q, r;
    BigInt::divmod(p, b, q, r);
    CHECK(q == a);
    CHECK(r.is_zero());
    BigInt::divmod(p + BigInt(17), b, q, r);
    CHECK(q == a);
    CHECK(r == BigInt(17));
}

TEST_CASE("bigint gcd and pow") {
    CHECK(BigInt::gcd(BigInt(462), BigInt(1071)).to_int64() == 21);
    CHECK(BigInt::pow(BigInt(3), 40).to_string() == "12157665459056928801");
    CHECK(BigInt::gcd(BigInt(0), BigInt(-5)).to_int64() == 5);
}

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(BigInt(6), BigInt(4));
    CHECK(a.num().to_int64() == 3);
    CHECK(a.den().to_int64() == 2);
    Rational b(BigInt(1), BigInt(6));
    CHECK((a + b).to_string() == "5/3");
    CHECK((a * b).to_string() == "1/4");
    CHECK((a - a).is_zero());
    CHECK((a / b).to_string() == "9");
    CHECK(Rational::parse("-7/21").to_string() == "-1/3");
    CHECK(Rational(BigInt(1), BigInt(-3)).to_string() == "-1/3");
    CHECK(Rational(2) > Rational(BigInt(3), BigInt(2)));
}
