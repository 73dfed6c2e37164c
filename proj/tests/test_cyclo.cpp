#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lritt/cyclo.hpp"

#include <random>

using namespace lritt;

namespace {

CycloScalar zeta(long n, long k = 1) { return root_of_unity(n, k); }

// Random monomial-type scalar c * zeta_N^k with small c.
CycloScalar random_scalar(std::mt19937& rng, long max_conductor = 12) {
    std::uniform_int_distribution<long> cond(1, max_conductor);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    long n = cond(rng);
    long k = std::uniform_int_distribution<long>(0, n - 1)(rng);
    long p = num(rng);
    if (p == 0) p = 1;
    return CycloScalar(Rational(p, den(rng))) * zeta(n, k);
}

}  // namespace

TEST_CASE("basic roots of unity") {
    CHECK(zeta(4) * zeta(4) == CycloScalar(-1));
    CHECK(zeta(3) + zeta(3, 2) == CycloScalar(-1));
    CHECK(zeta(6, 3) == CycloScalar(-1));
    CHECK(zeta(1, 0) == CycloScalar(1));
    CHECK(zeta(4, 1) * zeta(4, 3) == CycloScalar(1));
    CycloScalar s8 = zeta(8) + zeta(8, -1);
    CHECK(s8 * s8 == CycloScalar(2));
}

TEST_CASE("orders of powers of roots of unity") {
    for (long n : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 15L}) {
        for (long k = 0; k < n; ++k) {
            auto ord = root_of_unity_order(zeta(n, k));
            REQUIRE(ord.has_value());
            long expected = k == 0 ? 1 : n / gcd_long(n, k);
            CHECK(*ord == expected);
            CHECK(zeta(n, k).pow(expected) == CycloScalar(1));
            for (long j = 1; j < expected; ++j) CHECK(zeta(n, k).pow(j) != CycloScalar(1));
        }
    }
}

TEST_CASE("field arithmetic across conductors") {
    CycloScalar a = zeta(3), b = zeta(4);
    CycloScalar p = a * b;
    CHECK(p == zeta(12, 7));  // zeta_3 * zeta_4 = zeta_12^4 * zeta_12^3
    CHECK(p / b == a);
    CHECK((a + b) - b == a);
    CHECK((a - b) + b == a);
    CHECK(a.inverse() * a == CycloScalar(1));
    CHECK_THROWS_AS(CycloScalar::zero().inverse(), division_by_zero);
}

TEST_CASE("embedding commutes with arithmetic") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        CycloScalar a = random_scalar(rng), b = random_scalar(rng);
        long l = lcm_long(a.conductor(), b.conductor());
        long m = l * (48 / gcd_long(l, 48));  // a multiple of both, <= 48 * l
        if (m > 48) m = l;                    // keep it cheap
        CycloScalar ae = a.embedded(m), be = b.embedded(m);
        CHECK(ae + be == a + b);
        CHECK(ae - be == a - b);
        CHECK(ae * be == a * b);
        if (!b.is_zero()) CHECK(ae / be == a / b);
    }
}

TEST_CASE("minimization") {
    CHECK(zeta(6).minimized().conductor() == 3);   // zeta_6 = 1 + zeta_3
    CHECK(zeta(8, 2).minimized().conductor() == 4);
    CHECK((zeta(5) * zeta(5, 4)).minimized().conductor() == 1);
    CycloScalar v = zeta(12, 3);  // = i
    CHECK(v.minimized().conductor() == 4);
    CHECK(v == zeta(4));
}

TEST_CASE("sqrt_integer") {
    CHECK(sqrt_integer(Integer(-1)) == zeta(4));
    CHECK(sqrt_integer(Integer(4)) == CycloScalar(2));
    CycloScalar r2 = sqrt_integer(Integer(2));
    CHECK(r2 == zeta(8) + zeta(8, -1));
    for (long d = -30; d <= 30; ++d) {
        if (d == 0) continue;
        CycloScalar s = sqrt_integer(Integer(d));
        CHECK(s * s == CycloScalar(d));
    }
}

TEST_CASE("sqrt_integer principal branch is multiplicative on squares") {
    // (sqrt 2)(sqrt 3) must equal sqrt 6: all three have positive embeddings.
    CHECK(sqrt_integer(Integer(2)) * sqrt_integer(Integer(3)) == sqrt_integer(Integer(6)));
    CHECK(sqrt_integer(Integer(5)) * sqrt_integer(Integer(5)) == CycloScalar(5));
}

TEST_CASE("try_nth_root examples") {
    auto r = try_nth_root(CycloScalar(-1), 2);
    REQUIRE(r);
    CHECK(*r == zeta(4));
    r = try_nth_root(CycloScalar(8), 3);
    REQUIRE(r);
    CHECK(*r == CycloScalar(2));
    r = try_nth_root(zeta(3), 2);
    REQUIRE(r);
    CHECK(*r == zeta(6));
    CHECK(r->pow(2) == zeta(3));
    // A conductor-growing square root of a rational.
    r = try_nth_root(CycloScalar(2), 2);
    REQUIRE(r);
    CHECK(*r == sqrt_integer(Integer(2)));
    // No cyclotomic cube root of 2.
    CHECK(!try_nth_root(CycloScalar(2), 3));
}

TEST_CASE("try_nth_root recovers roots of n-th powers") {
    std::mt19937 rng(7);
    for (int i = 0; i < 80; ++i) {
        CycloScalar a = random_scalar(rng);
        long n = std::uniform_int_distribution<long>(1, 6)(rng);
        CycloScalar an = a.pow(n);
        auto r = try_nth_root(an, n);
        REQUIRE_MESSAGE(r.has_value(), "no root for " << an.str() << " n=" << n);
        CHECK(r->pow(n) == an);
    }
}

TEST_CASE("galois substitution is a field automorphism") {
    CycloScalar a = zeta(12) + CycloScalar(Rational(1, 2)) * zeta(12, 5);
    CycloScalar b = zeta(12, 7) - CycloScalar(3);
    for (long t : {5L, 7L, 11L}) {
        CHECK(a.galois(t) * b.galois(t) == (a * b).galois(t));
        CHECK(a.galois(t) + b.galois(t) == (a + b).galois(t));
    }
}

TEST_CASE("scalar ordering is total and consistent") {
    CycloScalar a = zeta(3), b = zeta(4), c = CycloScalar(Rational(1, 2));
    CHECK(CycloScalar::compare(a, a) == 0);
    CHECK(CycloScalar::compare(a, b) == -CycloScalar::compare(b, a));
    CHECK(CycloScalar::compare(c, c) == 0);
    // equal elements in different conductors compare equal
    CHECK(CycloScalar::compare(zeta(6, 3), CycloScalar(-1)) == 0);
}
