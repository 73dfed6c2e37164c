#pragma once

#include "lritt/ratfunc.hpp"

namespace lritt {

// Degree-n Dickson polynomial D_n(x, alpha); D_n(x) = D_n(x, 1) satisfies
// D_n(z + 1/z) = z^n + z^{-n}. Built by the three-term recurrence; the
// functional equation is the tested contract.
Poly dickson(long n, const CycloScalar& alpha = CycloScalar::one());

// Second kind: E_n(z + 1/z) = (z^{n+1} - z^{-(n+1)}) / (z - 1/z).
Poly dickson_second(long n);

// Exact bivariate polynomial over Q(zeta), exponents >= 0.
class BivariatePoly {
   public:
    BivariatePoly() = default;

    static BivariatePoly var_x() { return monomial(1, 0, CycloScalar::one()); }
    static BivariatePoly var_y() { return monomial(0, 1, CycloScalar::one()); }
    static BivariatePoly constant(const CycloScalar& c) { return monomial(0, 0, c); }
    static BivariatePoly monomial(long i, long j, const CycloScalar& c);
    // p(x) or p(y) from a univariate polynomial
    static BivariatePoly in_x(const Poly& p);
    static BivariatePoly in_y(const Poly& p);

    const std::map<std::pair<long, long>, CycloScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BivariatePoly operator-() const;
    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

    bool operator==(const BivariatePoly& o) const;
    bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

    RatFunc eval(const RatFunc& x, const RatFunc& y) const;

    std::string str() const;

   private:
    std::map<std::pair<long, long>, CycloScalar> terms_;
    void add_term(long i, long j, const CycloScalar& c);
};

// The exact factorization of D_n(x) + D_n(y) over Q(zeta_{2n}): quadratics
// x^2 - xy (zeta^k + zeta^-k) + y^2 - (2 - zeta^{2k} - zeta^{-2k}) for odd k,
// 1 <= k < n (zeta = zeta_{2n}), plus the linear factor x + y iff n is odd.
struct DicksonPlusFactors {
    std::optional<BivariatePoly> linear;
    std::vector<BivariatePoly> quadratics;  // odd k ascending
};
DicksonPlusFactors dickson_plus_factors(long n);

}  // namespace lritt
