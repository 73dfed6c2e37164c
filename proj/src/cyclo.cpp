#include "lritt/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace lritt {

namespace {

std::atomic<long> g_max_conductor{240};

// Per-conductor tables: Phi_N and the reductions of x^k mod Phi_N.
struct ConductorData {
    long n = 1;
    long phi = 1;
    std::vector<Integer> cyclo;                // Phi_n, degree phi, monic
    std::vector<std::vector<Rational>> rows;   // rows[k] = x^k mod Phi_n, k <= rowmax
};

std::vector<Integer> cyclotomic_poly(long n, std::map<long, std::vector<Integer>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Integer> p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (long d : divisors(n)) {
        if (d == n) continue;
        std::vector<Integer> q = cyclotomic_poly(d, cache);
        // exact division by the monic q
        long dq = static_cast<long>(q.size()) - 1;
        long dp = static_cast<long>(p.size()) - 1;
        std::vector<Integer> quot(dp - dq + 1);
        for (long k = dp - dq; k >= 0; --k) {
            Integer c = p[k + dq];
            quot[k] = c;
            if (c != 0)
                for (long j = 0; j <= dq; ++j) p[k + j] -= c * q[j];
        }
        p = std::move(quot);
    }
    cache[n] = p;
    return p;
}

const ConductorData& conductor_data(long n) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<ConductorData>> cache;
    static std::map<long, std::vector<Integer>> cyclo_cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<ConductorData>();
    data->n = n;
    data->phi = euler_phi(n);
    data->cyclo = cyclotomic_poly(n, cyclo_cache);
    long phi = data->phi;
    long rowmax = std::max(2 * phi - 2, n - 1);
    data->rows.resize(rowmax + 1);
    for (long k = 0; k <= rowmax; ++k) {
        std::vector<Rational> row(phi);
        if (k < phi) {
            row[k] = 1;
        } else {
            const std::vector<Rational>& prev = data->rows[k - 1];
            // x * prev, then fold x^phi = -(Phi - x^phi).
            Rational top = prev[phi - 1];
            for (long j = phi - 1; j >= 1; --j) row[j] = prev[j - 1];
            row[0] = 0;
            if (top != 0)
                for (long j = 0; j < phi; ++j) row[j] -= top * Rational(data->cyclo[j]);
        }
        data->rows[k] = std::move(row);
    }
    auto& slot = cache[n];
    slot = std::move(data);
    return *slot;
}

void check_conductor(long n) {
    if (n > g_max_conductor.load())
        throw limit_exceeded("conductor " + std::to_string(n) + " exceeds limit " +
                             std::to_string(g_max_conductor.load()));
}

// Solves sum_j x_j * cols[j] = rhs over Q; absent if inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> cols,
                                                  std::vector<Rational> rhs) {
    size_t m = rhs.size(), n = cols.size();
    // Augmented row-major matrix.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
        a[i][n] = rhs[i];
    }
    std::vector<long> pivot_col(m, -1);
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; ++c) {
        size_t sel = r;
        while (sel < m && a[sel][c] == 0) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[r]);
        Rational inv = a[r][c];
        for (size_t j = c; j <= n; ++j) a[r][j] /= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col[r] = static_cast<long>(c);
        ++r;
    }
    for (size_t i = r; i < m; ++i)
        if (a[i][n] != 0) return std::nullopt;
    std::vector<Rational> x(n);
    for (size_t i = 0; i < r; ++i)
        if (pivot_col[i] >= 0) x[pivot_col[i]] = a[i][n];
    return x;
}

}  // namespace

long max_conductor() { return g_max_conductor.load(); }
void set_max_conductor(long n) {
    if (n < 1) throw bad_parameters("max_conductor must be positive");
    g_max_conductor.store(n);
}

CycloScalar::CycloScalar(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    check_conductor(conductor_);
    const ConductorData& cd = conductor_data(conductor_);
    if (static_cast<long>(coeffs_.size()) != cd.phi)
        throw bad_parameters("coefficient vector has wrong length for conductor");
    trim();
}

void CycloScalar::trim() {
    for (auto& c : coeffs_) c.canonicalize();
}

bool CycloScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    if (conductor_ == 1) return true;
    return minimized().conductor() == 1;
}

std::optional<Rational> CycloScalar::as_rational() const {
    if (conductor_ == 1) return coeffs_[0];
    CycloScalar m = minimized();
    if (m.conductor() == 1) return m.coeffs_[0];
    return std::nullopt;
}

CycloScalar CycloScalar::embedded(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw bad_parameters("embedded: target is not a multiple");
    check_conductor(m);
    const ConductorData& cd = conductor_data(m);
    long step = m / conductor_;
    std::vector<Rational> out(cd.phi);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& row = cd.rows[static_cast<long>(k) * step];
        for (long j = 0; j < cd.phi; ++j)
            if (row[j] != 0) out[j] += coeffs_[k] * row[j];
    }
    return CycloScalar(m, std::move(out));
}

CycloScalar CycloScalar::minimized() const {
    if (conductor_ == 1) return *this;
    if (is_zero()) return CycloScalar();
    const ConductorData& cd = conductor_data(conductor_);
    for (long d : divisors(conductor_)) {
        if (d == conductor_) break;
        bool fixed = true;
        for (long t = 1 + d; t < conductor_ && fixed; t += d)
            if (gcd_long(t, conductor_) == 1 && galois(t) != *this) fixed = false;
        if (!fixed) continue;
        // Express in the zeta_d power basis.
        long phid = euler_phi(d);
        long step = conductor_ / d;
        std::vector<std::vector<Rational>> cols(phid);
        for (long j = 0; j < phid; ++j) cols[j] = cd.rows[j * step];
        auto sol = solve_linear(std::move(cols), coeffs_);
        if (sol) return CycloScalar(d, std::move(*sol));
    }
    return *this;
}

CycloScalar CycloScalar::galois(long t) const {
    const ConductorData& cd = conductor_data(conductor_);
    t %= conductor_;
    if (t < 0) t += conductor_;
    if (gcd_long(t, conductor_) != 1) throw bad_parameters("galois: t not coprime to conductor");
    std::vector<Rational> out(cd.phi);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        const auto& row = cd.rows[(static_cast<long>(k) * t) % conductor_];
        for (long j = 0; j < cd.phi; ++j)
            if (row[j] != 0) out[j] += coeffs_[k] * row[j];
    }
    return CycloScalar(conductor_, std::move(out));
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    long l = lcm_long(conductor_, o.conductor_);
    if (l != conductor_) *this = embedded(l);
    CycloScalar ob = (o.conductor_ == l) ? o : o.embedded(l);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += ob.coeffs_[k];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
    long l = lcm_long(conductor_, o.conductor_);
    if (l != conductor_) *this = embedded(l);
    CycloScalar ob = (o.conductor_ == l) ? o : o.embedded(l);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= ob.coeffs_[k];
    return *this;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    long l = lcm_long(a.conductor(), b.conductor());
    CycloScalar ae = a.embedded(l), be = b.embedded(l);
    const ConductorData& cd = conductor_data(l);
    long phi = cd.phi;
    std::vector<Rational> acc(2 * phi - 1);
    for (long i = 0; i < phi; ++i) {
        if (ae.coeffs()[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (be.coeffs()[j] == 0) continue;
            acc[i + j] += ae.coeffs()[i] * be.coeffs()[j];
        }
    }
    std::vector<Rational> out(phi);
    for (long k = 0; k < phi; ++k) out[k] = acc[k];
    for (long k = phi; k <= 2 * phi - 2; ++k) {
        if (acc[k] == 0) continue;
        const auto& row = cd.rows[k];
        for (long j = 0; j < phi; ++j)
            if (row[j] != 0) out[j] += acc[k] * row[j];
    }
    return CycloScalar(l, std::move(out));
}

CycloScalar operator*(const Rational& r, const CycloScalar& s) {
    CycloScalar out = s;
    return out * CycloScalar(r);
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    const ConductorData& cd = conductor_data(conductor_);
    long phi = cd.phi;
    if (phi == 1) {
        return CycloScalar(Rational(1) / coeffs_[0]);
    }
    // Extended Euclid in Q[x] for (this, Phi_N).
    using Vec = std::vector<Rational>;
    auto deg = [](const Vec& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    Vec r0(phi + 1), r1 = coeffs_;
    for (long j = 0; j <= phi; ++j) r0[j] = Rational(cd.cyclo[j]);
    Vec s0{Rational(0)}, s1{Rational(1)};  // coefficients multiplying `this`
    while (true) {
        long d1 = deg(r1);
        if (d1 <= 0) break;
        long d0 = deg(r0);
        // r0 = q * r1 + r; replace (r0, s0) by remainders.
        Vec q(std::max<long>(d0 - d1 + 1, 1));
        Vec rem = r0;
        for (long k = d0 - d1; k >= 0; --k) {
            Rational c = rem[k + d1] / r1[d1];
            q[k] = c;
            if (c != 0)
                for (long j = 0; j <= d1; ++j) rem[k + j] -= c * r1[j];
        }
        // s = s0 - q * s1
        Vec s(std::max(s0.size(), q.size() + s1.size()));
        for (size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    long d1 = deg(r1);
    if (d1 != 0) throw error("cyclotomic inverse: gcd not constant");
    Rational unit = r1[0];
    std::vector<Rational> out(phi);
    for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(phi); ++i) out[i] = s1[i] / unit;
    return CycloScalar(conductor_, std::move(out));
}

CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
    return a * b.inverse();
}

CycloScalar CycloScalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycloScalar base = *this, acc = CycloScalar::one();
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

bool CycloScalar::operator==(const CycloScalar& o) const {
    if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
    long l = lcm_long(conductor_, o.conductor_);
    return embedded(l).coeffs() == o.embedded(l).coeffs();
}

int CycloScalar::compare(const CycloScalar& a, const CycloScalar& b) {
    CycloScalar am = a.minimized(), bm = b.minimized();
    if (am.conductor() != bm.conductor()) return am.conductor() < bm.conductor() ? -1 : 1;
    for (size_t k = 0; k < am.coeffs().size(); ++k) {
        int c = mpq_cmp(am.coeffs()[k].get_mpq_t(), bm.coeffs()[k].get_mpq_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string CycloScalar::str() const {
    CycloScalar m = minimized();
    if (m.conductor() == 1) return rational_str(m.coeffs()[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < m.coeffs().size(); ++k) {
        const Rational& c = m.coeffs()[k];
        if (c == 0) continue;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << rational_str(ac);
        } else {
            if (ac != 1) os << rational_str(ac) << "*";
            os << "zeta(" << m.conductor() << ")";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.str(); }

CycloScalar root_of_unity(long n, long k) {
    if (n < 1) throw bad_parameters("root_of_unity: order must be positive");
    k %= n;
    if (k < 0) k += n;
    if (k == 0) return CycloScalar::one();
    long g = gcd_long(k, n);
    long ord = n / g, e = k / g;
    if (ord == 1) return CycloScalar::one();
    if (ord == 2) return CycloScalar(-1);
    check_conductor(ord);
    const ConductorData& cd = conductor_data(ord);
    return CycloScalar(ord, cd.rows[e]).minimized();
}

namespace {

CycloScalar sqrt_prime(long p) {
    if (p == 2) {
        // zeta_8 - zeta_8^3
        std::vector<Rational> c(4);
        c[1] = 1;
        c[3] = -1;
        return CycloScalar(8, std::move(c));
    }
    // Quadratic Gauss sum in Q(zeta_p); its value is sqrt(p) for p = 1 mod 4
    // and i*sqrt(p) for p = 3 mod 4 (with zeta_p -> e^{2 pi i / p}).
    CycloScalar g;
    const ConductorData& cd = conductor_data(p);
    std::vector<Rational> acc(cd.phi);
    for (long a = 1; a < p; ++a) {
        Integer az(a), pz(p);
        int leg = mpz_legendre(az.get_mpz_t(), pz.get_mpz_t());
        const auto& row = cd.rows[a];
        for (long j = 0; j < cd.phi; ++j)
            if (row[j] != 0) acc[j] += Rational(leg) * row[j];
    }
    g = CycloScalar(p, std::move(acc));
    if (p % 4 == 3) g = g * (-root_of_unity(4, 1));  // divide by i
    return g;
}

}  // namespace

CycloScalar sqrt_integer(const Integer& d) {
    if (d == 0) throw bad_parameters("sqrt_integer: d must be nonzero");
    Integer ad = d < 0 ? Integer(-d) : d;
    if (!ad.fits_slong_p()) throw limit_exceeded("sqrt_integer: |d| too large");
    long v = ad.get_si();
    CycloScalar r(1);
    Integer square_part(1);
    for (auto [p, e] : factorize(v)) {
        for (long i = 0; i < e / 2; ++i) square_part *= p;
        if (e % 2) r = r * sqrt_prime(p);
    }
    r = r * CycloScalar(Rational(square_part));
    if (d < 0) r = r * root_of_unity(4, 1);
    return r.minimized();
}

namespace {

// Recognizes a = c * zeta_K^t with c rational; a must be minimized.
std::optional<std::pair<Rational, long>> monomial_form_minimized(const CycloScalar& a) {
    long K = a.conductor();
    if (K == 1) return std::make_pair(a.coeffs()[0], 0L);
    const ConductorData& cd = conductor_data(K);
    size_t j0 = 0;
    while (j0 < a.coeffs().size() && a.coeffs()[j0] == 0) ++j0;
    if (j0 == a.coeffs().size()) return std::make_pair(Rational(0), 0L);
    for (long t = 0; t < K; ++t) {
        const auto& row = cd.rows[t];
        if (row[j0] == 0) continue;
        Rational c = a.coeffs()[j0] / row[j0];
        bool ok = true;
        for (long j = 0; j < cd.phi && ok; ++j)
            if (a.coeffs()[j] != c * row[j]) ok = false;
        if (ok) return std::make_pair(c, t);
    }
    return std::nullopt;
}

}  // namespace

std::optional<long> root_of_unity_order(const CycloScalar& a) {
    CycloScalar am = a.minimized();
    auto mf = monomial_form_minimized(am);
    if (!mf) return std::nullopt;
    auto [c, t] = *mf;
    long K = am.conductor();
    if (c == 1) {
        long g = gcd_long(t, K);
        return t == 0 ? 1 : K / g;
    }
    if (c == -1) {
        // -zeta_K^t = zeta_{2K}^{K + 2t}
        long KK = 2 * K, tt = (K + 2 * t) % KK;
        long g = gcd_long(tt, KK);
        return KK / g;
    }
    return std::nullopt;
}

std::optional<CycloScalar> try_nth_root(const CycloScalar& a, long n) {
    if (n < 1) throw bad_parameters("try_nth_root: n must be positive");
    if (n == 1) return a;
    if (a.is_zero()) return CycloScalar::zero();
    CycloScalar am = a.minimized();
    auto mf = monomial_form_minimized(am);
    if (!mf) return std::nullopt;
    auto [c, t] = *mf;
    long K = am.conductor();
    if (c < 0) {  // fold the sign into the root of unity
        long K2 = lcm_long(K, 2);
        t = (t * (K2 / K) + K2 / 2) % K2;
        K = K2;
        c = -c;
    }
    long g = t == 0 ? K : gcd_long(t, K);
    long ord = K / g, e = (t / g) % std::max(ord, 1L);
    if (ord == 0) ord = 1;

    // Root of the positive rational part.
    long s = 0, m = n;
    while (m % 2 == 0) {
        ++s;
        m /= 2;
    }
    auto rm = rational_nth_root(c, m);
    if (!rm) return std::nullopt;
    CycloScalar rc;
    bool cyclo_mode = false;
    Rational rr = *rm;
    for (long i = 0; i < s; ++i) {
        auto sq = rational_nth_root(rr, 2);
        if (sq) {
            rr = *sq;
            continue;
        }
        if (i + 1 < s) return std::nullopt;  // would need nested radicals
        Integer num = rr.get_num(), den = rr.get_den();
        Integer nd = num * den;
        if (!nd.fits_slong_p() || 4 * nd.get_si() > max_conductor()) return std::nullopt;
        rc = sqrt_integer(nd) * CycloScalar(Rational(1, den));
        cyclo_mode = true;
    }
    if (!cyclo_mode) rc = CycloScalar(rr);

    // Root of the unity part.
    if (static_cast<double>(n) * ord > static_cast<double>(max_conductor())) return std::nullopt;
    CycloScalar rho = ord == 1 ? CycloScalar::one() : root_of_unity(n * ord, e);

    CycloScalar r = (rc * rho).minimized();
    if (r.pow(n) != a) return std::nullopt;
    return r;
}

}  // namespace lritt
