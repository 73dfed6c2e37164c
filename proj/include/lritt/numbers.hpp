#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lritt {

using Integer = mpz_class;
using Rational = mpq_class;

// Error hierarchy shared by all modules.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};
struct limit_exceeded : error {
    using error::error;
};
struct root_unavailable : error {
    using error::error;
};
struct bad_parameters : error {
    using error::error;
};
struct precondition_violated : error {
    using error::error;
};
struct constant_input : error {
    constant_input() : error("constant input") {}
};
struct not_laurent_composition : error {
    not_laurent_composition() : error("composition is not a Laurent polynomial") {}
};

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

// Distinct prime factors in increasing order.
std::vector<long> prime_factors(long n);

// Full factorization p -> e.
std::map<long, long> factorize(long n);

// Euler totient.
long euler_phi(long n);

// All positive divisors, increasing.
std::vector<long> divisors(long n);

bool is_prime(long n);

// Exact n-th root of a nonnegative integer, if it exists.
std::optional<Integer> integer_nth_root(const Integer& a, long n);

// Exact n-th root of a rational (sign-aware for odd n).
std::optional<Rational> rational_nth_root(const Rational& a, long n);

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

}  // namespace lritt
