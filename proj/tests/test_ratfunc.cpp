#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lritt/ratfunc.hpp"

#include <random>

using namespace lritt;

namespace {

const LaurentPoly X = LaurentPoly::variable();
LaurentPoly xpow(long e) { return LaurentPoly::monomial(e, CycloScalar::one()); }

LaurentPoly random_laurent(std::mt19937& rng, long lo, long hi, bool force_span = true) {
    std::uniform_int_distribution<long> num(-2, 2);
    LaurentPoly f;
    for (long e = lo; e <= hi; ++e) {
        long c = num(rng);
        if (c != 0) f.set_coeff(e, CycloScalar(c));
    }
    if (force_span) {
        if (f.coeff(hi).is_zero()) f.set_coeff(hi, CycloScalar(1));
        if (lo != hi && f.coeff(lo).is_zero()) f.set_coeff(lo, CycloScalar(1));
    }
    return f;
}

}  // namespace

TEST_CASE("compose on Laurent polynomials") {
    LaurentPoly xp1x = X + xpow(-1);
    CHECK(compose_laurent(xp1x, xpow(2)) == xpow(2) + xpow(-2));
    // D_2 o D_3 = D_6 written out explicitly
    LaurentPoly d2 = X * X - LaurentPoly(2);
    LaurentPoly d3 = X * X * X - CycloScalar(3) * X;
    LaurentPoly d6 = xpow(6) - CycloScalar(6) * xpow(4) + CycloScalar(9) * xpow(2) - LaurentPoly(2);
    CHECK(compose_laurent(d2, d3) == d6);
    RatFunc inv = RatFunc(xpow(-1));
    CHECK(compose(inv, inv) == RatFunc::variable());
}

TEST_CASE("degree") {
    CHECK(RatFunc(X + xpow(-1)).degree() == 2);
    CHECK(Mobius(CycloScalar(2), CycloScalar(1), CycloScalar(1), CycloScalar(3)).as_ratfunc().degree() == 1);
    // degree of the sporadic degree-24 composition, by direct expansion
    LaurentPoly h = xpow(2) + CycloScalar(2) * X + xpow(-1) - CycloScalar(Rational(1, 4)) * xpow(-2);
    Poly g;  // (x^2/3 - 1)^3
    {
        Poly base;
        base.set_coeff(2, CycloScalar(Rational(1, 3)));
        base.set_coeff(0, CycloScalar(-1));
        g = base * base * base;
    }
    RatFunc f = compose(RatFunc(g), RatFunc(h));
    CHECK(f.degree() == 24);
    auto fl = f.as_laurent();
    REQUIRE(fl);
    CHECK(fl->d_inf() + fl->d_zero() == 24);
}

TEST_CASE("as_laurent") {
    Poly n;
    n.set_coeff(3, CycloScalar(1));
    n.set_coeff(0, CycloScalar(1));
    RatFunc f(n, xpow(1));
    auto l = f.as_laurent();
    REQUIRE(l);
    CHECK(*l == xpow(2) + xpow(-1));

    RatFunc g(X + LaurentPoly(1), X - LaurentPoly(1));
    CHECK(!g.as_laurent());

    LaurentPoly h = xpow(2) + CycloScalar(2) * X + xpow(-1) - CycloScalar(Rational(1, 4)) * xpow(-2);
    auto hl = RatFunc(h).as_laurent();
    REQUIRE(hl);
    CHECK(hl->d_zero() == 2);
    CHECK(hl->d_inf() == 2);
}

TEST_CASE("mobius actions") {
    Mobius inv = Mobius::inversion();
    CHECK(mobius_act(inv, RatFunc(xpow(2)), MobiusSide::left) == RatFunc(xpow(-2)));
    CHECK(mobius_act(Mobius::identity(), RatFunc(xpow(5) + X), MobiusSide::conjugate) ==
          RatFunc(xpow(5) + X));

    // (q2) with p = 1: H1 = x - 1/x, mu = (x+i)/(x-i); H1 o mu = x*q(x^2), q = 4i/(x+1).
    CycloScalar i = root_of_unity(4, 1);
    LaurentPoly h1 = X - xpow(-1);
    Mobius mu(CycloScalar(1), i, CycloScalar(1), -i);
    RatFunc lhs = mobius_act(mu, RatFunc(h1), MobiusSide::right);
    Poly qn;
    qn.set_coeff(1, CycloScalar(4) * i);
    Poly qd;
    qd.set_coeff(2, CycloScalar(1));
    qd.set_coeff(0, CycloScalar(1));
    CHECK(lhs == RatFunc(qn, qd));
}

TEST_CASE("monomial substitutions") {
    LaurentPoly f = xpow(3) + X;
    CHECK(f.substitute_scale(CycloScalar(-1)) == -f);
    CHECK((X + xpow(-1)).substitute_power(2) == xpow(2) + xpow(-2));
    LaurentPoly odd = X - xpow(-1);
    CHECK(odd.substitute_invert() == -odd);
}

TEST_CASE("degree multiplicativity on random pairs") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        LaurentPoly f = random_laurent(rng, std::uniform_int_distribution<long>(-3, 0)(rng),
                                       std::uniform_int_distribution<long>(1, 3)(rng));
        LaurentPoly g = random_laurent(rng, std::uniform_int_distribution<long>(-3, 0)(rng),
                                       std::uniform_int_distribution<long>(1, 3)(rng));
        if (f.degree() == 0 || g.degree() == 0) continue;
        RatFunc c = compose(RatFunc(f), RatFunc(g));
        CHECK(c.degree() == RatFunc(f).degree() * RatFunc(g).degree());
    }
}

TEST_CASE("degree equals d0 + dinf for two-poled Laurent") {
    std::mt19937 rng(12);
    for (int it = 0; it < 30; ++it) {
        LaurentPoly f = random_laurent(rng, -2, 3);
        if (f.d_zero() == 0 || f.d_inf() == 0) continue;
        CHECK(RatFunc(f).degree() == f.d_zero() + f.d_inf());
    }
}

TEST_CASE("mobius group laws") {
    std::mt19937 rng(13);
    auto rnd_mobius = [&]() {
        while (true) {
            std::uniform_int_distribution<long> d(-2, 2);
            CycloScalar a(d(rng)), b(d(rng)), c(d(rng)), dd(d(rng));
            if (!(a * dd - b * c).is_zero()) return Mobius(a, b, c, dd);
        }
    };
    for (int it = 0; it < 25; ++it) {
        Mobius m1 = rnd_mobius(), m2 = rnd_mobius(), m3 = rnd_mobius();
        CHECK((m1 * m2) * m3 == m1 * (m2 * m3));
        CHECK((m1 * m1.inverse()).is_identity());
        LaurentPoly f = random_laurent(rng, -1, 2);
        RatFunc rf(f);
        CHECK(mobius_act(m1.inverse(), mobius_act(m1, rf, MobiusSide::left), MobiusSide::left) == rf);
        CHECK(mobius_act(m1, rf, MobiusSide::left).degree() == rf.degree());
        CHECK(mobius_act(m1, mobius_act(m2, rf, MobiusSide::left), MobiusSide::left) ==
              mobius_act(m1 * m2, rf, MobiusSide::left));
    }
}

TEST_CASE("mobius_through maps the three anchors") {
    CycloScalar i = root_of_unity(4, 1);
    auto fin = [](const CycloScalar& v) { return PValue::finite(v); };
    SUBCASE("all finite") {
        Mobius m = mobius_through(fin(CycloScalar(1)), fin(CycloScalar(-1)), fin(i));
        CHECK(m.apply(PValue::finite(CycloScalar(0))) == fin(CycloScalar(1)));
        CHECK(m.apply(PValue::inf()) == fin(CycloScalar(-1)));
        CHECK(m.apply(fin(CycloScalar(1))) == fin(i));
    }
    SUBCASE("infinite targets") {
        Mobius m = mobius_through(PValue::inf(), fin(CycloScalar(2)), fin(CycloScalar(0)));
        CHECK(m.apply(fin(CycloScalar(0))).infinite);
        CHECK(m.apply(PValue::inf()) == fin(CycloScalar(2)));
        CHECK(m.apply(fin(CycloScalar(1))) == fin(CycloScalar(0)));
        Mobius m2 = mobius_through(fin(CycloScalar(3)), PValue::inf(), fin(CycloScalar(5)));
        CHECK(m2.apply(fin(CycloScalar(0))) == fin(CycloScalar(3)));
        CHECK(m2.apply(PValue::inf()).infinite);
        CHECK(m2.apply(fin(CycloScalar(1))) == fin(CycloScalar(5)));
        Mobius m3 = mobius_through(fin(CycloScalar(0)), fin(CycloScalar(1)), PValue::inf());
        CHECK(m3.apply(fin(CycloScalar(1))).infinite);
    }
}

TEST_CASE("Laurent round trip through RatFunc") {
    std::mt19937 rng(14);
    for (int it = 0; it < 25; ++it) {
        LaurentPoly f = random_laurent(rng, -3, 3, false);
        RatFunc r(f);
        auto back = r.as_laurent();
        REQUIRE(back);
        CHECK(*back == f);
    }
}

TEST_CASE("polynomial helpers") {
    // gcd, squarefree decomposition, sqrt
    Poly a = (X - LaurentPoly(1)) * (X - LaurentPoly(1)) * (X + LaurentPoly(2));
    Poly b = (X - LaurentPoly(1)) * (X + LaurentPoly(3));
    Poly g = poly_gcd(a, b);
    CHECK(g == X - LaurentPoly(1));

    auto sf = squarefree_decomposition(a);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0] == X + LaurentPoly(2));
    CHECK(sf[1] == X - LaurentPoly(1));

    Poly sq = a * a;
    auto s = poly_sqrt(sq);
    REQUIRE(s);
    CHECK(*s * *s == sq);
    CHECK(!poly_sqrt(a * b));
}
