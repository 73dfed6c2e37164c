#include "lritt/numbers.hpp"

namespace lritt {

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::map<long, long> factorize(long n) {
    std::map<long, long> f;
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

long euler_phi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r -= r / p;
    return r;
}

std::vector<long> divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::optional<Integer> integer_nth_root(const Integer& a, long n) {
    if (a < 0) return std::nullopt;
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n));
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rational> rational_nth_root(const Rational& a, long n) {
    bool neg = a < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    Integer num = neg ? Integer(-a.get_num()) : Integer(a.get_num());
    auto rn = integer_nth_root(num, n);
    if (!rn) return std::nullopt;
    auto rd = integer_nth_root(Integer(a.get_den()), n);
    if (!rd) return std::nullopt;
    Rational r(neg ? Integer(-*rn) : *rn, *rd);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw bad_parameters("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() <= 0) throw bad_parameters("bad rational literal: " + s);
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

}  // namespace lritt
