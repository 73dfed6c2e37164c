#include "lritt/ratfunc.hpp"

#include <ostream>

namespace lritt {

RatFunc::RatFunc(const LaurentPoly& f) {
    long d0 = f.is_zero() ? 0 : f.d_zero();
    num_ = f.shifted(d0);
    den_ = LaurentPoly::monomial(d0, CycloScalar::one());
    reduce();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero();
    if (!num_.is_poly() || !den_.is_poly()) {
        // Allow Laurent inputs by clearing the common x power.
        long shift = 0;
        if (!num_.is_zero()) shift = std::max(shift, num_.d_zero());
        shift = std::max(shift, den_.d_zero());
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (poly_deg(g) > 0) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    CycloScalar lead = poly_lead(den_);
    if (!lead.is_one()) {
        CycloScalar inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw division_by_zero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator*(const CycloScalar& c, const RatFunc& f) {
    return RatFunc(c * f.num_, f.den_);
}

RatFunc RatFunc::pow(long k) const {
    if (k < 0) {
        if (is_zero()) throw division_by_zero();
        return RatFunc(den_, num_).pow(-k);
    }
    RatFunc acc(1), base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
    // den is monic and coprime to num; Laurent iff den is a power of x.
    if (den_.terms().size() != 1) return std::nullopt;
    long e = den_.terms().begin()->first;
    return num_.shifted(-e);
}

PValue RatFunc::value_at_zero() const {
    if (num_.is_zero()) return PValue::finite(CycloScalar::zero());
    long vn = num_.min_exp(), vd = den_.min_exp();
    if (vn > vd) return PValue::finite(CycloScalar::zero());
    if (vn < vd) return PValue::inf();
    return PValue::finite(num_.coeff(vn) / den_.coeff(vd));
}

PValue RatFunc::value_at_infinity() const {
    if (num_.is_zero()) return PValue::finite(CycloScalar::zero());
    long dn = poly_deg(num_), dd = poly_deg(den_);
    if (dn < dd) return PValue::finite(CycloScalar::zero());
    if (dn > dd) return PValue::inf();
    return PValue::finite(poly_lead(num_) / poly_lead(den_));
}

PValue RatFunc::value_at_one() const {
    return value_at(PValue::finite(CycloScalar::one()));
}

PValue RatFunc::value_at(const PValue& p) const {
    if (p.infinite) return value_at_infinity();
    if (p.value.is_zero()) return value_at_zero();
    CycloScalar n = poly_eval(num_, p.value);
    CycloScalar d = poly_eval(den_, p.value);
    if (d.is_zero()) {
        if (n.is_zero()) throw error("value_at: unreduced 0/0");
        return PValue::inf();
    }
    return PValue::finite(n / d);
}

std::string RatFunc::str() const {
    auto l = as_laurent();
    if (l) return l->str();
    std::string n = num_.str(), d = den_.str();
    return "(" + n + ") / (" + d + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

RatFunc compose(const RatFunc& f, const RatFunc& g) {
    // Horner over the fraction field with one final reduction: write
    // f = P/Q, g = u/v; P(g) = sum P_i u^i v^{n-i} / v^n and likewise Q.
    const Poly &P = f.num(), &Q = f.den();
    const Poly &u = g.num(), &v = g.den();
    long n = f.degree();
    if (n <= 0) return f;
    std::vector<Poly> upow(n + 1), vpow(n + 1);
    upow[0] = Poly::one();
    vpow[0] = Poly::one();
    for (long i = 1; i <= n; ++i) {
        upow[i] = upow[i - 1] * u;
        vpow[i] = vpow[i - 1] * v;
    }
    Poly A, B;
    for (const auto& [e, c] : P.terms()) A += c * (upow[e] * vpow[n - e]);
    for (const auto& [e, c] : Q.terms()) B += c * (upow[e] * vpow[n - e]);
    return RatFunc(A, B);
}

LaurentPoly compose_laurent(const LaurentPoly& f, const LaurentPoly& g) {
    RatFunc r = compose(RatFunc(f), RatFunc(g));
    auto l = r.as_laurent();
    if (!l) throw not_laurent_composition();
    return *l;
}

Mobius::Mobius(CycloScalar a, CycloScalar b, CycloScalar c, CycloScalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if ((a_ * d_ - b_ * c_).is_zero()) throw bad_parameters("Mobius: determinant is zero");
    normalize();
}

Mobius Mobius::affine(const CycloScalar& a, const CycloScalar& b) {
    return Mobius(a, b, CycloScalar(0), CycloScalar(1));
}

void Mobius::normalize() {
    const CycloScalar* first = nullptr;
    for (const CycloScalar* p : {&a_, &b_, &c_, &d_}) {
        if (!p->is_zero()) {
            first = p;
            break;
        }
    }
    CycloScalar inv = first->inverse();
    a_ = (inv * a_).minimized();
    b_ = (inv * b_).minimized();
    c_ = (inv * c_).minimized();
    d_ = (inv * d_).minimized();
}

bool Mobius::is_identity() const {
    return b_.is_zero() && c_.is_zero() && a_ == d_;
}

Mobius Mobius::inverse() const {
    return Mobius(d_, -b_, -c_, a_);
}

Mobius operator*(const Mobius& f, const Mobius& g) {
    return Mobius(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                  f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

bool Mobius::operator==(const Mobius& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

RatFunc Mobius::as_ratfunc() const {
    Poly num;
    num.set_coeff(1, a_);
    num.set_coeff(0, b_);
    Poly den;
    den.set_coeff(1, c_);
    den.set_coeff(0, d_);
    return RatFunc(num, den);
}

PValue Mobius::apply(const PValue& p) const {
    if (p.infinite) {
        if (c_.is_zero()) return PValue::inf();
        return PValue::finite(a_ / c_);
    }
    CycloScalar den = c_ * p.value + d_;
    if (den.is_zero()) return PValue::inf();
    return PValue::finite((a_ * p.value + b_) / den);
}

RatFunc mobius_act(const Mobius& mu, const RatFunc& f, MobiusSide side) {
    switch (side) {
        case MobiusSide::left: {
            RatFunc fn(f.num()), fd(f.den());
            RatFunc n = mu.a() * f + RatFunc(mu.b());
            RatFunc d = mu.c() * f + RatFunc(mu.d());
            return n / d;
        }
        case MobiusSide::right:
            return compose(f, mu.as_ratfunc());
        case MobiusSide::conjugate:
            return mobius_act(mu.inverse(), mobius_act(mu, f, MobiusSide::right), MobiusSide::left);
    }
    throw error("unreachable");
}

Mobius mobius_through(const PValue& p0, const PValue& pinf, const PValue& p1) {
    if (p0 == pinf || p0 == p1 || pinf == p1)
        throw bad_parameters("mobius_through: target points must be distinct");
    // T sends (p0, pinf, p1) -> (0, infinity, 1); return T^{-1}.
    CycloScalar one = CycloScalar::one();
    Mobius t = Mobius::identity();
    if (p0.infinite) {
        // T = (p1 - pinf) / (z - pinf)
        t = Mobius(CycloScalar(0), p1.value - pinf.value, one, -pinf.value);
    } else if (pinf.infinite) {
        // T = (z - p0) / (p1 - p0)
        t = Mobius(one, -p0.value, CycloScalar(0), p1.value - p0.value);
    } else if (p1.infinite) {
        // T = (z - p0) / (z - pinf)
        t = Mobius(one, -p0.value, one, -pinf.value);
    } else {
        CycloScalar k = p1.value - pinf.value, l = p1.value - p0.value;
        t = Mobius(k, -p0.value * k, l, -pinf.value * l);
    }
    return t.inverse();
}

}  // namespace lritt
