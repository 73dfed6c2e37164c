#include "lritt/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lritt {

namespace {

// Solves the triangular system for the top tail of h in f = g o h: h has
// leading term lead*x^M, unknown coefficients at M-1 .. 1, zero constant
// term; the coefficient of x^{D-j} in f determines the coefficient at M-j.
LaurentPoly solve_top_tail(const LaurentPoly& f, long r, long M, const CycloScalar& lead) {
    long D = r * M;
    LaurentPoly h = LaurentPoly::monomial(M, lead);
    CycloScalar denom = CycloScalar(r) * lead.pow(r - 1);
    for (long j = 1; j <= M - 1; ++j) {
        LaurentPoly p = h.pow(r);
        CycloScalar c = (f.coeff(D - j) - p.coeff(D - j)) / denom;
        if (!c.is_zero()) h.set_coeff(M - j, c);
    }
    return h;
}

}  // namespace

long monomial_part(const LaurentPoly& f) {
    if (f.is_constant()) throw constant_input();
    long g = 0;
    for (const auto& [e, c] : f.terms()) {
        if (e == 0) continue;
        g = gcd_long(g, e);
    }
    return g;
}

std::optional<Poly> recover_outer(const LaurentPoly& f, const LaurentPoly& h) {
    if (h.is_constant() || f.is_zero()) return std::nullopt;
    long M = h.d_inf();
    if (M < 1 || !h.coeff(M).is_one()) return std::nullopt;
    long D = f.d_inf();
    if (D % M != 0) return std::nullopt;
    long r = D / M;
    std::vector<LaurentPoly> hp(r + 1);
    hp[0] = LaurentPoly::one();
    for (long k = 1; k <= r; ++k) hp[k] = hp[k - 1] * h;
    Poly g;
    LaurentPoly rem = f;
    for (long k = r; k >= 0; --k) {
        CycloScalar c = rem.coeff(k * M);
        if (!c.is_zero()) {
            g.set_coeff(k, c);
            rem -= c * hp[k];
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return g;
}

std::optional<std::pair<Poly, Poly>> poly_split(const Poly& f, long r) {
    long n = poly_deg(f);
    if (n <= 0 || r <= 1 || r >= n || n % r != 0)
        throw precondition_violated("poly_split: need r | deg f with 1 < r < deg f");
    long m = n / r;
    CycloScalar lead = poly_lead(f);
    LaurentPoly fm = lead.inverse() * f;
    Poly h = solve_top_tail(fm, r, m, CycloScalar::one());
    auto g = recover_outer(f, h);
    if (!g) return std::nullopt;
    return std::make_pair(*g, h);
}

std::vector<std::pair<Poly, LaurentPoly>> type1_split(const LaurentPoly& f, long r) {
    long d0 = f.is_zero() ? 0 : f.d_zero();
    long dinf = f.is_zero() ? 0 : f.d_inf();
    if (d0 < 1 || dinf < 1)
        throw precondition_violated("type1_split: input must have poles at 0 and infinity");
    long deg = d0 + dinf;
    if (r <= 1 || r >= deg || d0 % r != 0 || dinf % r != 0)
        throw precondition_violated("type1_split: need r | gcd(d0, dinf), 1 < r < deg");
    long M = dinf / r, m = d0 / r;
    CycloScalar lead = f.coeff(dinf);
    LaurentPoly fm = lead.inverse() * f;

    // Top tail is branch-independent.
    LaurentPoly top = solve_top_tail(fm, r, M, CycloScalar::one());

    CycloScalar ratio = fm.coeff(-d0);
    auto e0 = try_nth_root(ratio, r);
    if (!e0)
        throw root_unavailable("type1_split: bottom scalar has no representable " +
                               std::to_string(r) + "-th root");

    LaurentPoly fhat = fm.substitute_invert();
    std::vector<std::pair<Poly, LaurentPoly>> out;
    CycloScalar zr = root_of_unity(r, 1);
    CycloScalar e = *e0;
    for (long branch = 0; branch < r && branch < 64; ++branch, e = e * zr) {
        // Bottom tail, solved on the inverted axis where it is the top tail.
        LaurentPoly bottom = solve_top_tail(fhat, r, m, e);
        LaurentPoly h = top;
        for (const auto& [k, c] : bottom.terms()) h.set_coeff(-k, c);
        auto g = recover_outer(f, h);
        if (!g) continue;
        out.emplace_back(*g, h);
    }
    return out;
}

bool is_indecomposable(const LaurentPoly& f) {
    long deg = f.degree();
    if (deg < 2) throw precondition_violated("is_indecomposable: degree must be >= 2");
    if (is_prime(deg)) return true;
    long N = monomial_part(f);
    for (long p : prime_factors(N))
        if (deg / p >= 2) return false;
    if (f.is_poly()) {
        for (long r : divisors(deg)) {
            if (r <= 1 || r >= deg) continue;
            if (poly_split(f, r)) return false;
        }
        return true;
    }
    if (f.d_inf() == 0) return is_indecomposable(f.substitute_invert());
    long g = gcd_long(f.d_zero(), f.d_inf());
    for (long r : divisors(g)) {
        if (r <= 1) continue;
        if (!type1_split(f, r).empty()) return false;
    }
    return true;
}

bool is_indecomposable(const RatFunc& f) {
    auto l = f.as_laurent();
    if (l) return is_indecomposable(*l);
    auto linv = compose(f, RatFunc(LaurentPoly::monomial(-1, CycloScalar::one()))).as_laurent();
    if (linv) return is_indecomposable(*linv);
    throw bad_parameters("is_indecomposable: factor is not Laurent up to inversion");
}

NormalizedPair normalize_decomposition(const RatFunc& g, const RatFunc& h) {
    RatFunc f = compose(g, h);
    auto fl = f.as_laurent();
    if (!fl || fl->is_constant()) throw not_laurent_composition();

    auto is_pole = [&](const PValue& v) {
        if (v.infinite) return poly_deg(g.num()) > poly_deg(g.den());
        return poly_eval(g.den(), v.value).is_zero();
    };
    PValue alpha = h.value_at_zero();
    PValue beta = h.value_at_infinity();
    bool pa = is_pole(alpha), pb = is_pole(beta);
    if (!pa && !pb) throw error("normalize_decomposition: no pole among h(0), h(infinity)");

    if (!pa || !pb || alpha == beta) {
        // One pole: send infinity there.
        PValue pole = pa ? alpha : beta;
        Mobius mu = Mobius::identity();
        if (!pole.infinite)
            mu = Mobius(pole.value, CycloScalar(1), CycloScalar(1), CycloScalar(0));  // pole + 1/x
        RatFunc G = mobius_act(mu, g, MobiusSide::right);
        RatFunc H = mobius_act(mu.inverse(), h, MobiusSide::left);
        auto Gl = G.as_laurent();
        if (!Gl || !Gl->is_poly()) throw error("normalize_decomposition: Type1 outer not polynomial");
        return NormalizedPair{mu, G, H, SplitKind::Type1};
    }

    // Two poles: 0 -> h(0), infinity -> h(infinity), 1 -> h(1).
    PValue gamma = h.value_at_one();
    Mobius mu = mobius_through(alpha, beta, gamma);
    RatFunc G = mobius_act(mu, g, MobiusSide::right);
    RatFunc H = mobius_act(mu.inverse(), h, MobiusSide::left);
    auto Gl = G.as_laurent();
    if (!Gl) throw error("normalize_decomposition: Type2 outer not Laurent");
    auto Hl = H.as_laurent();
    if (!Hl || Hl->terms().size() != 1 || !Hl->coeff(Hl->max_exp()).is_one() || Hl->max_exp() < 1)
        throw error("normalize_decomposition: Type2 inner is not a monic monomial");
    return NormalizedPair{mu, G, H, SplitKind::Type2};
}

Mobius laurent_normalizer(const LaurentPoly& f) {
    if (f.is_constant()) throw bad_parameters("laurent_normalizer: constant input");
    CycloScalar b = f.constant_term();
    if (f.is_monomial_plus_constant()) {
        long e = 0;
        CycloScalar c;
        for (const auto& [k, v] : f.terms()) {
            if (k != 0) {
                e = k;
                c = v;
            }
        }
        if (e > 0) return Mobius::affine(c.inverse(), -(b / c));
        // y -> c / (y - b) sends c x^e + b to x^{-e}
        return Mobius(CycloScalar(0), c, CycloScalar(1), -b);
    }
    CycloScalar lead = f.d_inf() > 0 ? f.coeff(f.max_exp()) : f.coeff(f.min_exp());
    return Mobius::affine(lead.inverse(), -(b / lead));
}

std::vector<RatFunc> canonicalize_chain(const std::vector<RatFunc>& factors) {
    size_t k = factors.size();
    if (k == 0) return {};
    std::vector<RatFunc> partial(k);  // partial[i] = factors[i] o ... o factors[k-1]
    partial[k - 1] = factors[k - 1];
    for (size_t i = k - 1; i-- > 0;) partial[i] = compose(factors[i], partial[i + 1]);

    std::vector<Mobius> lam(k + 1);  // lam[0] and lam[k] stay identity
    for (size_t i = 1; i < k; ++i) {
        auto l = partial[i].as_laurent();
        if (!l) throw error("canonicalize_chain: partial composition is not Laurent");
        lam[i] = laurent_normalizer(*l);
    }
    std::vector<RatFunc> out(k);
    for (size_t i = 0; i < k; ++i) {
        RatFunc c = mobius_act(lam[i + 1].inverse(), factors[i], MobiusSide::right);
        if (i > 0) c = mobius_act(lam[i], c, MobiusSide::left);
        out[i] = c;
    }
    return out;
}

Decomposition::Decomposition(std::vector<RatFunc> factors, bool mark_complete) {
    if (factors.empty()) throw bad_parameters("Decomposition: empty factor list");
    factors_ = canonicalize_chain(factors);
    composition_ = factors_[0];
    for (size_t i = 1; i < factors_.size(); ++i) composition_ = compose(composition_, factors_[i]);
    if (mark_complete) {
        for (const auto& f : factors_)
            if (!is_indecomposable(f))
                throw precondition_violated("Decomposition: factor is decomposable");
        complete_ = true;
    }
}

std::vector<long> Decomposition::degrees() const {
    std::vector<long> d;
    d.reserve(factors_.size());
    for (const auto& f : factors_) d.push_back(f.degree());
    return d;
}

std::string Decomposition::key() const {
    std::ostringstream os;
    for (const auto& f : factors_) os << f.str() << " ; ";
    return os.str();
}

namespace {

std::pair<RatFunc, RatFunc> canonical_pair(const RatFunc& outer, const RatFunc& inner) {
    auto ch = canonicalize_chain({outer, inner});
    return {ch[0], ch[1]};
}

}  // namespace

std::vector<std::pair<RatFunc, RatFunc>> enumerate_inner_splits(const LaurentPoly& f) {
    std::vector<std::pair<RatFunc, RatFunc>> out;
    std::set<std::string> seen;
    auto push = [&](const RatFunc& outer, const RatFunc& inner) {
        auto [o, i] = canonical_pair(outer, inner);
        if (seen.insert(i.str()).second) out.emplace_back(o, i);
    };

    long deg = f.degree();
    if (is_prime(deg)) return out;

    long N = monomial_part(f);
    for (long p : prime_factors(N)) {
        if (deg / p < 2) continue;
        auto G = f.exponent_divided(p);
        push(RatFunc(*G), RatFunc(LaurentPoly::monomial(p, CycloScalar::one())));
    }

    if (f.is_poly()) {
        for (long r : divisors(deg)) {
            if (r <= 1 || r >= deg) continue;
            auto s = poly_split(f, r);
            if (!s) continue;
            if (s->second.degree() >= 2 && is_indecomposable(s->second))
                push(RatFunc(s->first), RatFunc(s->second));
        }
    } else if (f.d_inf() == 0) {
        LaurentPoly F = f.substitute_invert();
        RatFunc inv(LaurentPoly::monomial(-1, CycloScalar::one()));
        for (const auto& [g, h] : enumerate_inner_splits(F)) push(g, compose(h, inv));
    } else {
        long g0 = gcd_long(f.d_zero(), f.d_inf());
        for (long r : divisors(g0)) {
            if (r <= 1) continue;
            std::vector<std::pair<Poly, LaurentPoly>> splits;
            try {
                splits = type1_split(f, r);
            } catch (const root_unavailable&) {
                continue;  // no representable split at this outer degree
            }
            for (const auto& [g, h] : splits)
                if (is_indecomposable(h)) push(RatFunc(g), RatFunc(h));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second.str() < b.second.str(); });
    return out;
}

namespace {

using ChainList = std::vector<std::vector<RatFunc>>;

ChainList complete_rec(const LaurentPoly& f, const DecomposeLimits& limits,
                       std::map<std::string, ChainList>& memo) {
    std::string key = f.str();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    ChainList chains;
    if (is_indecomposable(f)) {
        chains.push_back({RatFunc(f)});
    } else {
        std::set<std::string> seen;
        for (const auto& [outer, inner] : enumerate_inner_splits(f)) {
            auto ol = outer.as_laurent();
            if (!ol) throw error("complete_decompositions: outer factor not Laurent");
            for (const auto& sub : complete_rec(ol->scalars_minimized(), limits, memo)) {
                std::vector<RatFunc> chain = sub;
                chain.push_back(inner);
                chain = canonicalize_chain(chain);
                std::ostringstream os;
                for (const auto& c : chain) os << c.str() << " ; ";
                if (seen.insert(os.str()).second) chains.push_back(std::move(chain));
                if (static_cast<long>(chains.size()) > limits.max_results)
                    throw limit_exceeded("complete_decompositions: too many chains");
            }
        }
        std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
            std::ostringstream oa, ob;
            for (const auto& c : a) oa << c.str() << " ; ";
            for (const auto& c : b) ob << c.str() << " ; ";
            return oa.str() < ob.str();
        });
    }
    memo[key] = chains;
    return chains;
}

}  // namespace

std::vector<Decomposition> complete_decompositions(const LaurentPoly& f,
                                                   const DecomposeLimits& limits) {
    long deg = f.degree();
    if (deg < 2) throw precondition_violated("complete_decompositions: degree must be >= 2");
    if (deg > limits.max_degree) throw limit_exceeded("complete_decompositions: degree limit");
    std::map<std::string, ChainList> memo;
    auto chains = complete_rec(f.scalars_minimized(), limits, memo);
    std::vector<Decomposition> out;
    out.reserve(chains.size());
    for (auto& c : chains) out.emplace_back(std::move(c), /*mark_complete=*/true);
    return out;
}

std::vector<SplitResult> dihedral_decompositions(long n) {
    if (n < 1) throw bad_parameters("dihedral_decompositions: n must be positive");
    LaurentPoly f = LaurentPoly::monomial(n, CycloScalar::one()) +
                    LaurentPoly::monomial(-n, CycloScalar::one());
    std::vector<SplitResult> out;
    for (long d : divisors(n)) {
        if (d >= 2) {
            // cyclic class: (x^{n/d} + x^{-n/d}) o x^d
            LaurentPoly outer = LaurentPoly::monomial(n / d, CycloScalar::one()) +
                                LaurentPoly::monomial(-n / d, CycloScalar::one());
            out.push_back(SplitResult{RatFunc(outer),
                                      RatFunc(LaurentPoly::monomial(d, CycloScalar::one())),
                                      SplitKind::Type2});
        }
        if (n / d >= 2) {
            // reflection classes: inner x^d + c x^{-d} with c^{n/d} = 1
            for (long t = 0; t < n / d; ++t) {
                CycloScalar c = root_of_unity(n / d, t);
                LaurentPoly h = LaurentPoly::monomial(d, CycloScalar::one()) +
                                LaurentPoly::monomial(-d, c);
                auto g = recover_outer(f, h);
                if (!g) throw error("dihedral_decompositions: outer recovery failed");
                out.push_back(SplitResult{RatFunc(*g), RatFunc(h), SplitKind::Type1});
            }
        }
    }
    return out;
}

}  // namespace lritt
