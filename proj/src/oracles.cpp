#include "lritt/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lritt::oracles {

namespace {

// Dihedral group elements encoded as (flip, k): x -> zeta^k x or zeta^k / x.
struct DGroup {
    long n;
    long size() const { return 2 * n; }
    long id() const { return 0; }
    long enc(long flip, long k) const { return flip * n + ((k % n + n) % n); }
    long mul(long a, long b) const {
        long fa = a / n, ka = a % n, fb = b / n, kb = b % n;
        // (fa, ka) * (fb, kb): apply b first, then a.
        if (fa == 0) return enc(fb, ka + kb);
        return enc(1 - fb, ka - kb);
    }
};

std::set<long> closure(const DGroup& g, std::vector<long> gens) {
    std::set<long> elems{g.id()};
    std::vector<long> frontier{g.id()};
    while (!frontier.empty()) {
        std::vector<long> next;
        for (long e : frontier) {
            for (long x : gens) {
                long p = g.mul(e, x);
                if (elems.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    return elems;
}

}  // namespace

long dihedral_maximal_chain_count(long n) {
    DGroup g{n};
    std::set<std::set<long>> subgroup_set;
    for (long a = 0; a < g.size(); ++a)
        for (long b = a; b < g.size(); ++b) subgroup_set.insert(closure(g, {a, b}));
    subgroup_set.insert(closure(g, {}));
    std::vector<std::set<long>> subs(subgroup_set.begin(), subgroup_set.end());

    size_t m = subs.size();
    auto leq = [&](size_t i, size_t j) {
        return std::includes(subs[j].begin(), subs[j].end(), subs[i].begin(), subs[i].end());
    };
    size_t trivial = 0, full = 0;
    for (size_t i = 0; i < m; ++i) {
        if (subs[i].size() == 1) trivial = i;
        if (subs[i].size() == static_cast<size_t>(g.size())) full = i;
    }
    // covers[i] = strictly larger subgroups with nothing in between
    std::vector<std::vector<size_t>> covers(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (i == j || subs[j].size() <= subs[i].size() || !leq(i, j)) continue;
            bool cover = true;
            for (size_t k = 0; k < m && cover; ++k) {
                if (k == i || k == j) continue;
                if (subs[k].size() > subs[i].size() && subs[k].size() < subs[j].size() &&
                    leq(i, k) && leq(k, j))
                    cover = false;
            }
            if (cover) covers[i].push_back(j);
        }
    }
    std::map<size_t, long> memo;
    std::function<long(size_t)> chains = [&](size_t i) -> long {
        if (i == full) return 1;
        auto it = memo.find(i);
        if (it != memo.end()) return it->second;
        long total = 0;
        for (size_t j : covers[i]) total += chains(j);
        memo[i] = total;
        return total;
    };
    return chains(trivial);
}

namespace {

// Fits the outer polynomial g (deg <= r) to g o h = f using only the
// coefficients at exponents > bound; the powers of h have distinct top
// degrees so the fit is unique when consistent.
std::optional<Poly> fit_outer(const LaurentPoly& f, const LaurentPoly& h, long r, long bound) {
    std::vector<LaurentPoly> hp(r + 1);
    hp[0] = LaurentPoly::one();
    for (long k = 1; k <= r; ++k) hp[k] = hp[k - 1] * h;
    std::set<long> exps;
    for (const auto& [e, c] : f.terms())
        if (e > bound) exps.insert(e);
    for (long k = 0; k <= r; ++k)
        for (const auto& [e, c] : hp[k].terms())
            if (e > bound) exps.insert(e);
    std::vector<long> rows(exps.begin(), exps.end());

    // Gaussian elimination on the (rows x (r+2)) augmented system.
    size_t nr = rows.size(), nc = r + 1;
    std::vector<std::vector<CycloScalar>> a(nr, std::vector<CycloScalar>(nc + 1));
    for (size_t i = 0; i < nr; ++i) {
        for (size_t k = 0; k < nc; ++k) a[i][k] = hp[k].coeff(rows[i]);
        a[i][nc] = f.coeff(rows[i]);
    }
    std::vector<long> piv(nr, -1);
    size_t rr = 0;
    for (size_t c = 0; c < nc && rr < nr; ++c) {
        size_t sel = rr;
        while (sel < nr && a[sel][c].is_zero()) ++sel;
        if (sel == nr) continue;
        std::swap(a[sel], a[rr]);
        CycloScalar inv = a[rr][c].inverse();
        for (size_t j = c; j <= nc; ++j) a[rr][j] = inv * a[rr][j];
        for (size_t i = 0; i < nr; ++i) {
            if (i == rr || a[i][c].is_zero()) continue;
            CycloScalar fctr = a[i][c];
            for (size_t j = c; j <= nc; ++j) a[i][j] = a[i][j] - fctr * a[rr][j];
        }
        piv[rr] = static_cast<long>(c);
        ++rr;
    }
    for (size_t i = rr; i < nr; ++i)
        if (!a[i][nc].is_zero()) return std::nullopt;
    Poly g;
    for (size_t i = 0; i < rr; ++i)
        if (piv[i] >= 0) g.set_coeff(piv[i], a[i][nc]);
    return g;
}

// Residual of the probe equation for a candidate tail value.
std::optional<CycloScalar> probe_residual(const LaurentPoly& f, const LaurentPoly& h, long r,
                                          long probe) {
    auto g = fit_outer(f, h, r, probe);
    if (!g) return std::nullopt;
    LaurentPoly rem = f - poly_compose_laurent(*g, h);
    return rem.coeff(probe);
}

}  // namespace

std::vector<std::pair<Poly, LaurentPoly>> ansatz_splits(const LaurentPoly& f, long r) {
    std::vector<std::pair<Poly, LaurentPoly>> out;
    if (f.is_constant()) return out;
    long dinf = f.d_inf(), d0 = f.d_zero();
    bool laurent = d0 > 0;
    if (dinf < 1 || dinf % r != 0 || (laurent && d0 % r != 0)) return out;
    long M = dinf / r, m = laurent ? d0 / r : 0;
    CycloScalar lead = f.coeff(dinf);

    // Unknown positions and the probe exponent that pins each of them.
    std::vector<std::pair<long, long>> steps;  // (position in h, probe exponent in f)
    for (long j = 1; j <= M - 1; ++j) steps.emplace_back(M - j, dinf - j);
    for (long j = 1; j <= m - 1; ++j) steps.emplace_back(-(m - j), -d0 + j);

    // Bottom-scalar branches.
    std::vector<CycloScalar> bottoms;
    if (laurent) {
        auto e0 = try_nth_root(f.coeff(-d0) / lead, r);
        if (!e0) return out;
        CycloScalar zr = root_of_unity(r, 1), e = *e0;
        for (long b = 0; b < r; ++b, e = e * zr) bottoms.push_back(e);
    } else {
        bottoms.push_back(CycloScalar::zero());
    }

    for (const CycloScalar& e : bottoms) {
        LaurentPoly h = LaurentPoly::monomial(M, CycloScalar::one());
        if (laurent) h.set_coeff(-m, e);
        bool dead = false;
        for (auto [pos, probe] : steps) {
            // The residual is affine in the unknown; interpolate from two probes.
            LaurentPoly h0 = h, h1 = h;
            h1.set_coeff(pos, h1.coeff(pos) + CycloScalar::one());
            auto r0 = probe_residual(f, h0, r, probe);
            auto r1 = probe_residual(f, h1, r, probe);
            if (!r0 || !r1) {
                dead = true;
                break;
            }
            CycloScalar slope = *r1 - *r0;
            if (slope.is_zero()) {
                if (!r0->is_zero()) {
                    dead = true;
                    break;
                }
                continue;  // unconstrained; keep zero
            }
            CycloScalar u = -(*r0 / slope);
            if (!u.is_zero()) h.set_coeff(pos, u);
        }
        if (dead) continue;
        auto g = fit_outer(f, h, r, f.is_zero() ? 0 : f.min_exp() - 1);
        if (!g) continue;
        if (poly_compose_laurent(*g, h) == f) out.emplace_back(*g, h);
    }
    return out;
}

}  // namespace lritt::oracles
