#pragma once

#include "lritt/cyclo.hpp"

#include <map>

namespace lritt {

// Finite exponent -> scalar map; no zero values stored, so the empty map is
// the zero element. Exponents may be negative. Polynomials are the
// nonnegative-support case (is_poly()).
class LaurentPoly {
   public:
    LaurentPoly() = default;
    explicit LaurentPoly(const CycloScalar& c) {
        if (!c.is_zero()) terms_[0] = c;
    }
    explicit LaurentPoly(const Rational& r) : LaurentPoly(CycloScalar(r)) {}
    explicit LaurentPoly(long v) : LaurentPoly(CycloScalar(v)) {}

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly variable() { return monomial(1, CycloScalar::one()); }
    static LaurentPoly monomial(long e, const CycloScalar& c);

    const std::map<long, CycloScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_poly() const { return terms_.empty() || terms_.begin()->first >= 0; }
    // c*x^e, or c*x^e + b
    bool is_monomial_plus_constant() const;

    CycloScalar coeff(long e) const;
    void set_coeff(long e, const CycloScalar& c);
    CycloScalar constant_term() const { return coeff(0); }

    long min_exp() const;  // requires nonzero
    long max_exp() const;  // requires nonzero
    long d_inf() const { return is_zero() ? 0 : std::max(max_exp(), 0L); }
    long d_zero() const { return is_zero() ? 0 : std::max(-min_exp(), 0L); }
    // Degree as a rational map: d0 + dinf; 0 iff constant.
    long degree() const { return is_zero() ? 0 : d_zero() + d_inf(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator*(const CycloScalar& c, const LaurentPoly& p);
    LaurentPoly pow(long k) const;  // k >= 0

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // f(alpha * x), f(x^n), f(1/x)
    LaurentPoly substitute_scale(const CycloScalar& alpha) const;
    LaurentPoly substitute_power(long n) const;
    LaurentPoly substitute_invert() const;
    LaurentPoly shifted(long k) const;  // * x^k

    // Present iff every exponent is divisible by n; the G with G(x^n) = f.
    std::optional<LaurentPoly> exponent_divided(long n) const;

    // Scalars rewritten in minimized conductors (canonical storage form).
    LaurentPoly scalars_minimized() const;

    std::string str() const;  // canonical, parseable by the CLI grammar

   private:
    std::map<long, CycloScalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

using Poly = LaurentPoly;  // support restricted to Z>=0 where documented

// --- polynomial helpers (arguments must satisfy is_poly) ---

long poly_deg(const Poly& p);  // -1 for zero
CycloScalar poly_lead(const Poly& p);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_derivative(const Poly& p);
CycloScalar poly_eval(const Poly& p, const CycloScalar& x);
// Exact square root if p is the square of a polynomial (leading scalar must
// admit a representable square root).
std::optional<Poly> poly_sqrt(const Poly& p);
// Yun squarefree decomposition: p = lead * prod_k out[k]^(k+1), out monic.
std::vector<Poly> squarefree_decomposition(const Poly& p);

// Horner evaluation of a polynomial at a Laurent argument.
LaurentPoly poly_compose_laurent(const Poly& outer, const LaurentPoly& inner);

}  // namespace lritt
