#pragma once

#include "lritt/laurent.hpp"

namespace lritt {

// Point of P^1(Q(zeta)): a finite scalar or infinity.
struct PValue {
    bool infinite = false;
    CycloScalar value;

    static PValue inf() { return PValue{true, CycloScalar()}; }
    static PValue finite(CycloScalar v) { return PValue{false, std::move(v)}; }
    bool operator==(const PValue& o) const {
        if (infinite != o.infinite) return false;
        return infinite || value == o.value;
    }
};

// Reduced fraction num/den with den monic and gcd(num, den) = 1.
class RatFunc {
   public:
    RatFunc() : num_(), den_(Poly::one()) {}
    explicit RatFunc(const CycloScalar& c) : num_(c), den_(Poly::one()) {}
    explicit RatFunc(long v) : RatFunc(CycloScalar(v)) {}
    // From a Laurent polynomial: f * x^{d0} / x^{d0}.
    explicit RatFunc(const LaurentPoly& f);
    RatFunc(Poly num, Poly den);  // reduces

    static RatFunc variable() { return RatFunc(LaurentPoly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    long degree() const { return std::max(poly_deg(num_), poly_deg(den_)); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return degree() <= 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const CycloScalar& c, const RatFunc& f);
    RatFunc pow(long k) const;  // negative k inverts

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::optional<LaurentPoly> as_laurent() const;

    PValue value_at_zero() const;
    PValue value_at_infinity() const;
    PValue value_at_one() const;
    PValue value_at(const PValue& p) const;

    std::string str() const;

   private:
    Poly num_, den_;
    void reduce();
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

// Exact functional composition f(g(x)).
RatFunc compose(const RatFunc& f, const RatFunc& g);
LaurentPoly compose_laurent(const LaurentPoly& f, const LaurentPoly& g);  // result must be Laurent

// Degree-one map (a x + b) / (c x + d), ad - bc != 0, first nonzero of
// (a, b, c, d) scaled to 1.
class Mobius {
   public:
    Mobius() : a_(1), b_(0), c_(0), d_(1) {}
    Mobius(CycloScalar a, CycloScalar b, CycloScalar c, CycloScalar d);

    static Mobius identity() { return Mobius(); }
    static Mobius affine(const CycloScalar& a, const CycloScalar& b);  // a x + b
    static Mobius inversion() { return Mobius(CycloScalar(0), CycloScalar(1), CycloScalar(1), CycloScalar(0)); }

    const CycloScalar& a() const { return a_; }
    const CycloScalar& b() const { return b_; }
    const CycloScalar& c() const { return c_; }
    const CycloScalar& d() const { return d_; }

    bool is_affine() const { return c_.is_zero(); }
    bool is_identity() const;

    Mobius inverse() const;
    friend Mobius operator*(const Mobius& f, const Mobius& g);  // composition f(g(x))
    bool operator==(const Mobius& o) const;

    RatFunc as_ratfunc() const;
    PValue apply(const PValue& p) const;

    std::string str() const { return as_ratfunc().str(); }

   private:
    CycloScalar a_, b_, c_, d_;
    void normalize();
};

enum class MobiusSide { left, right, conjugate };

// mu o f, f o mu, or mu^{-1} o f o mu.
RatFunc mobius_act(const Mobius& mu, const RatFunc& f, MobiusSide side);

// The unique Mobius with 0 -> p0, infinity -> pinf, 1 -> p1 (distinct).
Mobius mobius_through(const PValue& p0, const PValue& pinf, const PValue& p1);

}  // namespace lritt
