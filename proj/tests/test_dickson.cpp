#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lritt/dickson.hpp"

#include <random>

using namespace lritt;

namespace {
const LaurentPoly X = LaurentPoly::variable();
LaurentPoly xpow(long e) { return LaurentPoly::monomial(e, CycloScalar::one()); }

CycloScalar random_alpha(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-3, 3), den(1, 2), cond(1, 8);
    long p = num(rng);
    if (p == 0) p = 2;
    long n = cond(rng);
    return CycloScalar(Rational(p, den(rng))) * root_of_unity(n, std::uniform_int_distribution<long>(0, n - 1)(rng));
}
}  // namespace

TEST_CASE("small Dickson polynomials") {
    CycloScalar a = CycloScalar(5) * root_of_unity(3, 1);
    CHECK(dickson(0, a) == LaurentPoly(2));
    CHECK(dickson(1, a) == X);
    CHECK(dickson(2, a) == X * X - CycloScalar(2) * LaurentPoly(a));
    CHECK(dickson(3, CycloScalar(1)) == X * X * X - CycloScalar(3) * X);
}

TEST_CASE("functional equation D_n(x + 1/x) = x^n + x^-n") {
    LaurentPoly zinv = X + xpow(-1);
    for (long n = 0; n <= 50; ++n) {
        CHECK(poly_compose_laurent(dickson(n), zinv) == xpow(n) + xpow(-n));
    }
}

TEST_CASE("general functional equation with parameter") {
    // D_n(z + a/z, a) = z^n + (a/z)^n, checked as Laurent identities in z
    std::mt19937 rng(5);
    for (int it = 0; it < 5; ++it) {
        CycloScalar a = random_alpha(rng);
        for (long n = 1; n <= 12; ++n) {
            LaurentPoly arg = X + a * xpow(-1);
            LaurentPoly rhs = xpow(n) + a.pow(n) * xpow(-n);
            CHECK(poly_compose_laurent(dickson(n, a), arg) == rhs);
        }
    }
}

TEST_CASE("composition law D_m(D_n(x,a), a^n) = D_mn(x,a)") {
    std::mt19937 rng(6);
    for (int it = 0; it < 5; ++it) {
        CycloScalar a = random_alpha(rng);
        for (long m = 2; m <= 10; ++m) {
            for (long n = 2; n * m <= 60 && n <= 10; ++n) {
                CHECK(poly_compose_laurent(dickson(m, a.pow(n)), dickson(n, a)) == dickson(m * n, a));
            }
        }
    }
}

TEST_CASE("scaling law b^n D_n(x,a) = D_n(bx, b^2 a)") {
    std::mt19937 rng(7);
    for (int it = 0; it < 5; ++it) {
        CycloScalar a = random_alpha(rng), b = random_alpha(rng);
        for (long n = 1; n <= 20; ++n) {
            LaurentPoly lhs = b.pow(n) * dickson(n, a);
            LaurentPoly rhs = dickson(n, b * b * a).substitute_scale(b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("second kind: values and defining equation") {
    CHECK(dickson_second(1) == X);
    CHECK(dickson_second(2) == X * X - LaurentPoly(1));
    // E_{n-1}(x + 1/x) * (x - 1/x) = x^n - x^-n
    LaurentPoly zinv = X + xpow(-1);
    LaurentPoly diff = X - xpow(-1);
    for (long n = 1; n <= 30; ++n) {
        CHECK(poly_compose_laurent(dickson_second(n - 1), zinv) * diff == xpow(n) - xpow(-n));
    }
}

TEST_CASE("second kind identity D_n^2 - 4 = (x^2-4) E_{n-1}^2") {
    Poly x2m4 = X * X - LaurentPoly(4);
    for (long n = 1; n <= 40; ++n) {
        Poly lhs = dickson(n) * dickson(n) - LaurentPoly(4);
        Poly e = dickson_second(n - 1);
        CHECK(lhs == x2m4 * e * e);
    }
}

TEST_CASE("D_2n = D_n^2 - 2") {
    for (long n = 1; n <= 30; ++n) {
        CHECK(dickson(2 * n) == dickson(n) * dickson(n) - LaurentPoly(2));
    }
}

TEST_CASE("dickson_plus_factors small cases") {
    auto f1 = dickson_plus_factors(1);
    REQUIRE(f1.linear);
    CHECK(f1.quadratics.empty());
    CHECK(*f1.linear == BivariatePoly::var_x() + BivariatePoly::var_y());

    auto f2 = dickson_plus_factors(2);
    CHECK(!f2.linear);
    REQUIRE(f2.quadratics.size() == 1);
    BivariatePoly expect = BivariatePoly::var_x() * BivariatePoly::var_x() +
                           BivariatePoly::var_y() * BivariatePoly::var_y() -
                           BivariatePoly::constant(CycloScalar(4));
    CHECK(f2.quadratics[0] == expect);

    auto f3 = dickson_plus_factors(3);
    REQUIRE(f3.linear);
    REQUIRE(f3.quadratics.size() == 1);
    // x^2 - xy + y^2 - 3
    BivariatePoly xy = BivariatePoly::var_x() * BivariatePoly::var_y();
    BivariatePoly q3 = BivariatePoly::var_x() * BivariatePoly::var_x() - xy +
                       BivariatePoly::var_y() * BivariatePoly::var_y() -
                       BivariatePoly::constant(CycloScalar(3));
    CHECK(f3.quadratics[0] == q3);
}

TEST_CASE("dickson_plus_factors product identity") {
    for (long n = 1; n <= 24; ++n) {
        auto f = dickson_plus_factors(n);
        BivariatePoly prod = BivariatePoly::constant(CycloScalar::one());
        if (f.linear) prod = prod * *f.linear;
        for (const auto& q : f.quadratics) prod = prod * q;
        BivariatePoly target = BivariatePoly::in_x(dickson(n)) + BivariatePoly::in_y(dickson(n));
        CHECK(prod == target);
    }
}
