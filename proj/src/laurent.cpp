#include "lritt/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace lritt {

LaurentPoly LaurentPoly::monomial(long e, const CycloScalar& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

bool LaurentPoly::is_monomial_plus_constant() const {
    if (is_zero() || is_constant()) return true;
    size_t nonconst = 0;
    for (const auto& [e, c] : terms_)
        if (e != 0) ++nonconst;
    return nonconst == 1;
}

CycloScalar LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycloScalar::zero() : it->second;
}

void LaurentPoly::set_coeff(long e, const CycloScalar& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw error("min_exp of zero");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw error("max_exp of zero");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            CycloScalar prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_[ea + eb] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly operator*(const CycloScalar& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.terms_) {
        CycloScalar prod = c * pc;
        if (!prod.is_zero()) r.terms_[e] = prod;
    }
    return r;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) throw bad_parameters("LaurentPoly::pow: negative exponent");
    LaurentPoly acc = one(), base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != jt->second) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::substitute_scale(const CycloScalar& alpha) const {
    if (alpha.is_zero()) throw bad_parameters("substitute_scale: alpha must be nonzero");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        CycloScalar v = c * alpha.pow(e);
        if (!v.is_zero()) r.terms_[e] = v;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_power(long n) const {
    if (n < 1) throw bad_parameters("substitute_power: n must be positive");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e * n] = c;
    return r;
}

LaurentPoly LaurentPoly::substitute_invert() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

std::optional<LaurentPoly> LaurentPoly::exponent_divided(long n) const {
    if (n < 1) throw bad_parameters("exponent_divided: n must be positive");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (e % n != 0) return std::nullopt;
        r.terms_[e / n] = c;
    }
    return r;
}

LaurentPoly LaurentPoly::scalars_minimized() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c.minimized();
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long e = it->first;
        CycloScalar c = it->second.minimized();
        std::string cs = c.str();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        bool sum = cs.find(' ') != std::string::npos;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << (sum ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") os << (sum ? "(" + cs + ")" : cs) << "*";
            os << "x";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

long poly_deg(const Poly& p) {
    if (p.is_zero()) return -1;
    if (!p.is_poly()) throw bad_parameters("poly_deg: negative support");
    return p.max_exp();
}

CycloScalar poly_lead(const Poly& p) {
    if (p.is_zero()) throw error("poly_lead of zero");
    return p.coeff(p.max_exp());
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw division_by_zero();
    if (!a.is_poly() || !b.is_poly()) throw bad_parameters("poly_divmod: negative support");
    long db = poly_deg(b);
    CycloScalar lb = poly_lead(b);
    Poly q, r = a;
    while (!r.is_zero() && poly_deg(r) >= db) {
        long k = poly_deg(r) - db;
        CycloScalar c = poly_lead(r) / lb;
        Poly t = LaurentPoly::monomial(k, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = poly_lead(b).inverse() * b;  // tame coefficient growth
    }
    if (a.is_zero()) return a;
    return poly_lead(a).inverse() * a;
}

Poly poly_derivative(const Poly& p) {
    Poly r;
    for (const auto& [e, c] : p.terms()) {
        if (e == 0) continue;
        r.set_coeff(e - 1, CycloScalar(e) * c);
    }
    return r;
}

CycloScalar poly_eval(const Poly& p, const CycloScalar& x) {
    if (p.is_zero()) return CycloScalar::zero();
    CycloScalar acc;
    long prev = -1;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (prev < 0) {
            acc = it->second;
        } else {
            acc = acc * x.pow(prev - it->first) + it->second;
        }
        prev = it->first;
    }
    return acc * x.pow(prev);
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly::zero();
    long d = poly_deg(p);
    if (d % 2 != 0) return std::nullopt;
    auto lead_root = try_nth_root(poly_lead(p), 2);
    if (!lead_root) return std::nullopt;
    long m = d / 2;
    Poly q = LaurentPoly::monomial(m, *lead_root);
    // Match coefficients downward: [x^{d-j}](q^2) is linear in the new coeff.
    CycloScalar two_lead = CycloScalar(2) * *lead_root;
    for (long j = 1; j <= m; ++j) {
        Poly sq = q * q;
        CycloScalar diff = p.coeff(d - j) - sq.coeff(d - j);
        CycloScalar c = diff / two_lead;
        if (!c.is_zero()) q.set_coeff(m - j, c);
    }
    if (q * q == p) return q;
    return std::nullopt;
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    std::vector<Poly> out;
    if (p.is_zero() || poly_deg(p) == 0) return out;
    Poly f = poly_lead(p).inverse() * p;
    Poly fp = poly_derivative(f);
    Poly a = poly_gcd(f, fp);
    Poly b = poly_divmod(f, a).first;
    Poly c = poly_divmod(fp, a).first;
    Poly d = c - poly_derivative(b);
    while (!(poly_deg(b) == 0)) {
        Poly g = poly_gcd(b, d);
        out.push_back(g);
        b = poly_divmod(b, g).first;
        c = poly_divmod(d, g).first;
        d = c - poly_derivative(b);
    }
    return out;
}

LaurentPoly poly_compose_laurent(const Poly& outer, const LaurentPoly& inner) {
    if (!outer.is_poly()) throw bad_parameters("poly_compose_laurent: outer must be a polynomial");
    if (outer.is_zero()) return LaurentPoly::zero();
    LaurentPoly acc;
    long prev = -1;
    for (auto it = outer.terms().rbegin(); it != outer.terms().rend(); ++it) {
        if (prev < 0) {
            acc = LaurentPoly(it->second);
        } else {
            acc = acc * inner.pow(prev - it->first) + LaurentPoly(it->second);
        }
        prev = it->first;
    }
    return acc * inner.pow(prev);
}

}  // namespace lritt
