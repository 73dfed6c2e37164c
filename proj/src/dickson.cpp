#include "lritt/dickson.hpp"

#include <sstream>

namespace lritt {

Poly dickson(long n, const CycloScalar& alpha) {
    if (n < 0) throw bad_parameters("dickson: n must be nonnegative");
    Poly prev = LaurentPoly(2);  // D_0
    if (n == 0) return prev;
    Poly cur = LaurentPoly::variable();  // D_1
    for (long k = 1; k < n; ++k) {
        Poly next = LaurentPoly::variable() * cur - alpha * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly dickson_second(long n) {
    if (n < 0) throw bad_parameters("dickson_second: n must be nonnegative");
    Poly prev = LaurentPoly::one();  // E_0
    if (n == 0) return prev;
    Poly cur = LaurentPoly::variable();  // E_1
    for (long k = 1; k < n; ++k) {
        Poly next = LaurentPoly::variable() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BivariatePoly BivariatePoly::monomial(long i, long j, const CycloScalar& c) {
    BivariatePoly p;
    if (!c.is_zero()) p.terms_[{i, j}] = c;
    return p;
}

BivariatePoly BivariatePoly::in_x(const Poly& p) {
    BivariatePoly r;
    for (const auto& [e, c] : p.terms()) r.terms_[{e, 0}] = c;
    return r;
}

BivariatePoly BivariatePoly::in_y(const Poly& p) {
    BivariatePoly r;
    for (const auto& [e, c] : p.terms()) r.terms_[{0, e}] = c;
    return r;
}

void BivariatePoly::add_term(long i, long j, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            CycloScalar prod = ca * cb;
            if (!prod.is_zero()) r.add_term(ka.first + kb.first, ka.second + kb.second, prod);
        }
    }
    return r;
}

bool BivariatePoly::operator==(const BivariatePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

RatFunc BivariatePoly::eval(const RatFunc& x, const RatFunc& y) const {
    RatFunc acc(0);
    for (const auto& [k, c] : terms_) acc = acc + c * (x.pow(k.first) * y.pow(k.second));
    return acc;
}

std::string BivariatePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*x^" << k.first << "*y^" << k.second;
    }
    return os.str();
}

DicksonPlusFactors dickson_plus_factors(long n) {
    if (n < 1) throw bad_parameters("dickson_plus_factors: n must be positive");
    DicksonPlusFactors out;
    if (n % 2 == 1) out.linear = BivariatePoly::var_x() + BivariatePoly::var_y();
    BivariatePoly x = BivariatePoly::var_x(), y = BivariatePoly::var_y();
    for (long k = 1; k < n; k += 2) {
        CycloScalar two_cos = root_of_unity(2 * n, k) + root_of_unity(2 * n, -k);
        CycloScalar four_sin2 =
            CycloScalar(2) - root_of_unity(2 * n, 2 * k) - root_of_unity(2 * n, -2 * k);
        BivariatePoly q = x * x - BivariatePoly::constant(two_cos) * x * y + y * y -
                          BivariatePoly::constant(four_sin2);
        out.quadratics.push_back(std::move(q));
    }
    return out;
}

}  // namespace lritt
