#pragma once

#include "lritt/numbers.hpp"

#include <iosfwd>

namespace lritt {

// Conductor ceiling for every scalar constructed anywhere in the library.
// Overridable through Config / the CLI; operations that would exceed it throw
// limit_exceeded.
long max_conductor();
void set_max_conductor(long n);

// Element of Q(zeta_N), stored as the canonical reduction mod the N-th
// cyclotomic polynomial: coeffs()[k] is the coordinate of zeta_N^k,
// 0 <= k < phi(N).
class CycloScalar {
   public:
    CycloScalar() : conductor_(1), coeffs_(1) {}
    explicit CycloScalar(const Rational& r) : conductor_(1), coeffs_{r} { coeffs_[0].canonicalize(); }
    explicit CycloScalar(long v) : conductor_(1), coeffs_{Rational(v)} {}
    CycloScalar(long conductor, std::vector<Rational> coeffs);

    static CycloScalar zero() { return CycloScalar(); }
    static CycloScalar one() { return CycloScalar(1); }

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    // Rewrites the element in Q(zeta_m); m must be a multiple of conductor().
    CycloScalar embedded(long m) const;
    // Smallest conductor d | N that contains the element.
    CycloScalar minimized() const;

    // Galois substitution zeta -> zeta^t, gcd(t, conductor) = 1.
    CycloScalar galois(long t) const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b);
    CycloScalar inverse() const;
    CycloScalar pow(long k) const;

    bool operator==(const CycloScalar& o) const;
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    // Deterministic total order on canonical forms (used for sorted output).
    static int compare(const CycloScalar& a, const CycloScalar& b);

    // "3/2" for rationals, otherwise a parseable sum of zeta(N)^k terms.
    std::string str() const;

   private:
    long conductor_;
    std::vector<Rational> coeffs_;  // length phi(conductor_)

    void trim();
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& s);

CycloScalar operator*(const Rational& r, const CycloScalar& s);

// zeta_N^k, canonical (minimized) form.
CycloScalar root_of_unity(long n, long k);

// Exact square root of a nonzero integer inside Q(zeta_{4|d|}): Gauss-sum
// construction; for d > 0 the branch with positive image under
// zeta_M -> e^{2 pi i / M}, for d < 0 that root times zeta_4.
CycloScalar sqrt_integer(const Integer& d);

// Deterministic n-th root search: recognizes c * zeta_K^t with c rational and
// grows the conductor as needed (bounded by max_conductor). Returns absent if
// no representable root is found; any returned r satisfies r^n == a exactly.
std::optional<CycloScalar> try_nth_root(const CycloScalar& a, long n);

// Multiplicative order if the element is a root of unity, else absent.
std::optional<long> root_of_unity_order(const CycloScalar& a);

}  // namespace lritt
