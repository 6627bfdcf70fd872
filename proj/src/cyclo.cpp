#include "rcft/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "rcft/error.hpp"

namespace rcft {

namespace {

std::atomic<u64> g_order_limit{10'000};

void check_order(u64 M) {
    if (M == 0) throw Error(Errc::precondition, "cyclotomic order must be positive");
    if (M > g_order_limit.load())
        throw Error(Errc::order_limit, "cyclotomic order " + std::to_string(M) +
                                           " exceeds the configured limit " +
                                           std::to_string(g_order_limit.load()));
}

struct PolyCache {
    std::mutex mu;
    std::map<u64, std::unique_ptr<const std::vector<i64>>> polys;
};

PolyCache& poly_cache() {
    static PolyCache cache;
    return cache;
}

std::vector<i64> compute_cyclotomic(u64 m) {
    // Φ_m = (x^m - 1) / Π_{d | m, d < m} Φ_d; every divisor is monic so the
    // division stays in Z[x].
    std::vector<Integer> p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (u64 d : divisors(m)) {
        if (d == m) break;
        const auto& q = cyclotomic_polynomial(d);
        const std::size_t dq = q.size() - 1;
        std::vector<Integer> quot(p.size() - dq);
        for (std::size_t i = p.size() - 1; i + 1 > dq; --i) {
            Integer c = p[i];
            quot[i - dq] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
            if (i == dq) break;
        }
        p = std::move(quot);
    }
    std::vector<i64> out;
    out.reserve(p.size());
    for (const auto& c : p) {
        if (!c.fits_slong_p())
            throw Error(Errc::order_limit, "cyclotomic polynomial coefficient overflow");
        out.push_back(c.get_si());
    }
    return out;
}

/// Reduces poly (any length) modulo x^M - 1 and then modulo Φ_M; returns φ(M)
/// coefficients.
std::vector<Integer> reduce(std::vector<Integer> poly, u64 M) {
    if (poly.size() > M) {
        for (std::size_t i = M; i < poly.size(); ++i) poly[i % M] += poly[i];
        poly.resize(M);
    }
    const auto& phi_poly = cyclotomic_polynomial(M);
    const std::size_t phi = phi_poly.size() - 1;
    for (std::size_t i = poly.size(); i-- > phi;) {
        mpz_ptr c = poly[i].get_mpz_t();
        if (mpz_sgn(c) == 0) continue;
        const std::size_t base = i - phi;
        for (std::size_t j = 0; j < phi; ++j) {
            i64 f = phi_poly[j];
            if (f == 0) continue;
            mpz_ptr dst = poly[base + j].get_mpz_t();
            if (f == 1)
                mpz_sub(dst, dst, c);
            else if (f == -1)
                mpz_add(dst, dst, c);
            else if (f > 0)
                mpz_submul_ui(dst, c, static_cast<unsigned long>(f));
            else
                mpz_addmul_ui(dst, c, static_cast<unsigned long>(-f));
        }
        mpz_set_ui(c, 0);
    }
    poly.resize(phi);
    return poly;
}

// ---- rational polynomial helpers for inversion --------------------------------

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// a = q*b + r with deg r < deg b; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) {
            if (i == b.size() - 1) break;
            continue;
        }
        Rational c = a[i] / lead;
        q[i - (b.size() - 1)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
        if (i == b.size() - 1) break;
    }
    trim(a);
    return {q, a};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
    QPoly out = a;
    if (!q.empty() && !b.empty()) {
        if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
        }
    }
    trim(out);
    return out;
}

/// Solves A x = b exactly for a consistent system with full column rank.
std::vector<Rational> solve_consistent(std::vector<std::vector<Rational>> A,
                                       std::vector<Rational> b) {
    const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        Rational inv = 1 / A[r][c];
        for (auto& v : A[r]) v *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace

void set_order_limit(u64 limit) { g_order_limit.store(limit); }
u64 order_limit() { return g_order_limit.load(); }

const std::vector<i64>& cyclotomic_polynomial(u64 m) {
    check_order(m);
    auto& cache = poly_cache();
    {
        std::lock_guard lock(cache.mu);
        auto it = cache.polys.find(m);
        if (it != cache.polys.end()) return *it->second;
    }
    std::vector<i64> poly;
    if (m == 1)
        poly = {-1, 1};
    else
        poly = compute_cyclotomic(m);
    std::lock_guard lock(cache.mu);
    auto [it, inserted] =
        cache.polys.emplace(m, std::make_unique<const std::vector<i64>>(std::move(poly)));
    return *it->second;
}

// ---- Cyclotomic ------------------------------------------------------------------

Cyclotomic::Cyclotomic() : order_(1), num_(1), den_(1) {}

Cyclotomic::Cyclotomic(long value) : order_(1), num_{Integer(value)}, den_(1) {}

Cyclotomic::Cyclotomic(const Rational& value)
    : order_(1), num_{value.get_num()}, den_(value.get_den()) {}

Cyclotomic::Cyclotomic(u64 order, std::vector<Integer> num, Integer den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Cyclotomic::normalize() {
    if (den_ == 0) throw Error(Errc::division_by_zero, "zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    bool all_zero = true;
    Integer g = den_;
    for (const auto& c : num_) {
        if (c == 0) continue;
        all_zero = false;
        if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (all_zero) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_)
            if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Cyclotomic Cyclotomic::xi_power(u64 M, i64 k) {
    check_order(M);
    std::vector<Integer> poly(M);
    poly[static_cast<std::size_t>(mod(k, static_cast<i64>(M)))] = 1;
    return Cyclotomic(M, reduce(std::move(poly), M), 1);
}

Cyclotomic Cyclotomic::root_of_unity(u64 M, i64 k) {
    check_order(M);
    const i64 r = mod(k, static_cast<i64>(M));
    const u64 g = std::gcd(static_cast<u64>(r), M);
    return xi_power(M / g, r / static_cast<i64>(g));
}

Cyclotomic Cyclotomic::from_terms(u64 M, std::span<const Term> terms) {
    check_order(M);
    Integer den = 1;
    for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    std::vector<Integer> poly(M);
    for (const auto& t : terms) {
        Integer scaled = t.coeff.get_num() * (den / t.coeff.get_den());
        poly[static_cast<std::size_t>(mod(t.exponent, static_cast<i64>(M)))] += scaled;
    }
    return Cyclotomic(M, reduce(std::move(poly), M), den);
}

Cyclotomic Cyclotomic::sqrt(const Rational& q) {
    if (q < 0) throw Error(Errc::precondition, "sqrt of a negative rational");
    if (q == 0) return Cyclotomic();
    // √(a/b) = √(ab)/b.
    Integer ab = q.get_num() * q.get_den();
    if (!ab.fits_ulong_p()) throw Error(Errc::precondition, "sqrt argument too large");
    Rational scale(1, 1);
    scale /= Rational(q.get_den());
    Cyclotomic root(1L);
    for (auto [p, e] : factorize(ab.get_ui())) {
        for (unsigned i = 0; i < e / 2; ++i) scale *= Rational(static_cast<long>(p));
        if (e % 2 == 0) continue;
        Cyclotomic sp;
        if (p == 2) {
            sp = xi_power(8, 1) + xi_power(8, 7);
        } else {
            // g = Σ_k ξ_p^{k²} equals √p (p ≡ 1 mod 4) or i√p (p ≡ 3 mod 4).
            std::vector<Term> terms;
            for (u64 k = 0; k < p; ++k)
                terms.push_back({Rational(1), static_cast<i64>((k * k) % p)});
            sp = from_terms(p, terms);
            if (p % 4 == 3) sp *= xi_power(4, 3);
        }
        root *= sp;
    }
    return root * Cyclotomic(scale);
}

Rational Cyclotomic::coeff(std::size_t i) const {
    Rational r(num_.at(i), den_);
    r.canonicalize();
    return r;
}

std::vector<Rational> Cyclotomic::coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
    return out;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool Cyclotomic::is_one() const {
    if (den_ != 1 || num_[0] != 1) return false;
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

Cyclotomic Cyclotomic::at_order(u64 M) const {
    if (M == order_) return *this;
    if (M % order_ != 0)
        throw Error(Errc::precondition, "cannot embed order " + std::to_string(order_) +
                                            " into order " + std::to_string(M));
    check_order(M);
    const u64 step = M / order_;
    std::vector<Integer> poly(M);
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) poly[i * step] = num_[i];
    return Cyclotomic(M, reduce(std::move(poly), M), den_);
}

Cyclotomic Cyclotomic::galois(i64 ell) const {
    const i64 M = static_cast<i64>(order_);
    if (!coprime(mod(ell, M), M) && M > 1)
        throw Error(Errc::not_coprime, "Galois index " + std::to_string(ell) +
                                           " is not coprime to order " + std::to_string(M));
    const i64 l = mod(ell, M);
    if (l == 1 || M <= 2) return *this;
    std::vector<Integer> poly(order_);
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0) poly[static_cast<std::size_t>((static_cast<i64>(i) * l) % M)] = num_[i];
    return Cyclotomic(order_, reduce(std::move(poly), order_), den_);
}

Cyclotomic Cyclotomic::times_root(u64 M, i64 k) const {
    const u64 L = lcm(order_, M);
    check_order(L);
    const u64 step = L / order_;
    const i64 shift = mod(k, static_cast<i64>(M)) * static_cast<i64>(L / M);
    std::vector<Integer> poly(L);
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0)
            poly[static_cast<std::size_t>((static_cast<i64>(i * step) + shift) %
                                          static_cast<i64>(L))] = num_[i];
    return Cyclotomic(L, reduce(std::move(poly), L), den_);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
    if (order_ <= 2 || std::all_of(num_.begin() + 1, num_.end(),
                                   [](const Integer& c) { return c == 0; })) {
        Rational r(den_, num_[0]);
        r.canonicalize();
        return Cyclotomic(order_, [&] {
            std::vector<Integer> v(num_.size());
            v[0] = r.get_num();
            return v;
        }(), r.get_den());
    }
    // Extended Euclid in Q[x]: find s with a·s ≡ 1 (mod Φ_M).
    const auto& phi_coeffs = cyclotomic_polynomial(order_);
    QPoly r0(phi_coeffs.begin(), phi_coeffs.end());
    QPoly r1(num_.begin(), num_.end());
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s2 = sub_mul(s0, q, s1);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant because Φ_M is irreducible.
    const Rational factor = Rational(den_) / r0.at(0);
    std::vector<Term> terms;
    for (std::size_t j = 0; j < s0.size(); ++j)
        if (s0[j] != 0) terms.push_back({s0[j] * factor, static_cast<i64>(j)});
    return from_terms(order_, terms);
}

std::optional<Rational> Cyclotomic::as_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return std::nullopt;
    Rational r(num_[0], den_);
    r.canonicalize();
    return r;
}

u64 Cyclotomic::conductor() const {
    if (as_rational()) return 1;
    const i64 M = static_cast<i64>(order_);
    std::vector<bool> fixes(order_, false);
    for (i64 l = 1; l < M; ++l)
        if (coprime(l, M)) fixes[static_cast<std::size_t>(l)] = (galois(l) == *this);
    for (u64 m : divisors(order_)) {
        bool ok = true;
        for (i64 l = 1; l < M && ok; l += static_cast<i64>(m))
            if (coprime(l, M) && !fixes[static_cast<std::size_t>(l)]) ok = false;
        if (ok) return m;
    }
    return order_;
}

Cyclotomic Cyclotomic::minimized() const {
    const u64 m = conductor();
    if (m == order_) return *this;
    const std::size_t phi_m = static_cast<std::size_t>(euler_phi(m));
    std::vector<std::vector<Rational>> A(num_.size(), std::vector<Rational>(phi_m));
    for (std::size_t j = 0; j < phi_m; ++j) {
        auto basis = xi_power(m, static_cast<i64>(j)).at_order(order_);
        for (std::size_t i = 0; i < num_.size(); ++i) A[i][j] = basis.coeff(i);
    }
    auto x = solve_consistent(std::move(A), coeffs());
    std::vector<Term> terms;
    for (std::size_t j = 0; j < phi_m; ++j)
        if (x[j] != 0) terms.push_back({x[j], static_cast<i64>(j)});
    return from_terms(m, terms);
}

std::complex<long double> Cyclotomic::to_complex() const {
    using ld = long double;
    const ld two_pi = 2 * std::numbers::pi_v<ld>;
    ld re = 0, im = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpf_class f(Rational(num_[i], den_), 128);
        double hi = f.get_d();
        mpf_class rest = f - hi;
        ld value = static_cast<ld>(hi) + static_cast<ld>(rest.get_d());
        ld angle = two_pi * static_cast<ld>(i) / static_cast<ld>(order_);
        re += value * std::cos(angle);
        im += value * std::sin(angle);
    }
    return {re, im};
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.order_ != order_) {
        const u64 L = lcm(order_, rhs.order_);
        if (order_ != L) *this = at_order(L);
        if (rhs.order_ != L) return *this += rhs.at_order(L);
    }
    if (den_ == rhs.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
    } else {
        Integer L;
        mpz_lcm(L.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
        Integer fa = L / den_, fb = L / rhs.den_;
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] *= fa;
            mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), fb.get_mpz_t());
        }
        den_ = L;
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        const u64 L = lcm(a.order_, b.order_);
        return a.at_order(L) * b.at_order(L);
    }
    if (a.is_zero() || b.is_zero()) return Cyclotomic(a.order_, std::vector<Integer>(a.num_.size()), 1);
    const std::size_t M = a.order_;
    std::vector<Integer> poly(M);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (a.num_[i] == 0) continue;
        for (std::size_t j = 0; j < b.num_.size(); ++j) {
            if (b.num_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= M) k -= M;
            mpz_addmul(poly[k].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    return Cyclotomic(a.order_, reduce(std::move(poly), a.order_), a.den_ * b.den_);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
    const u64 L = lcm(a.order_, b.order_);
    return a.at_order(L) == b.at_order(L);
}

// ---- accumulator ---------------------------------------------------------------

CycloAccumulator::CycloAccumulator(u64 order) : order_(order), raw_(order), fast_(order, 0) {
    check_order(order);
}

namespace {

void add_int128(Integer& target, __int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer t(static_cast<unsigned long>(static_cast<u64>(u >> 64)));
    t <<= 64;
    t += static_cast<unsigned long>(static_cast<u64>(u));
    if (neg)
        target -= t;
    else
        target += t;
}

/// Copies numerators into out if every one is below 2^31 in absolute value.
bool small_values(const std::vector<Integer>& num, std::vector<i64>& out, u64& max_abs) {
    out.resize(num.size());
    max_abs = 0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (!mpz_fits_slong_p(num[i].get_mpz_t())) return false;
        const long v = num[i].get_si();
        const u64 a = v < 0 ? static_cast<u64>(-v) : static_cast<u64>(v);
        if (a >= (u64{1} << 31)) return false;
        out[i] = v;
        max_abs = std::max(max_abs, a);
    }
    return true;
}

}  // namespace

void CycloAccumulator::flush() {
    if (fast_bound_ == 0) return;
    for (std::size_t i = 0; i < order_; ++i)
        if (fast_[i] != 0) {
            add_int128(raw_[i], fast_[i]);
            fast_[i] = 0;
        }
    fast_bound_ = 0;
}

void CycloAccumulator::rescale_to(const Integer& den) {
    Integer L;
    mpz_lcm(L.get_mpz_t(), den_.get_mpz_t(), den.get_mpz_t());
    if (L == den_) return;
    flush();
    Integer f = L / den_;
    for (auto& c : raw_)
        if (c != 0) c *= f;
    den_ = L;
}

void CycloAccumulator::add(const Cyclotomic& x) {
    if (x.order_ != order_) return add(x.at_order(order_));
    if (x.is_zero()) return;
    rescale_to(x.den_);
    const bool unit = (x.den_ == den_);
    if (!unit) scratch_ = den_ / x.den_;
    for (std::size_t i = 0; i < x.num_.size(); ++i) {
        if (x.num_[i] == 0) continue;
        if (unit)
            raw_[i] += x.num_[i];
        else
            mpz_addmul(raw_[i].get_mpz_t(), x.num_[i].get_mpz_t(), scratch_.get_mpz_t());
    }
}

void CycloAccumulator::add_product(const Cyclotomic& x, const Cyclotomic& y) {
    add_product(x, y, 1);
}

void CycloAccumulator::add_product(const Cyclotomic& x, const Cyclotomic& y, long k) {
    if (k == 0) return;
    if (x.order_ != order_) return add_product(x.at_order(order_), y, k);
    if (y.order_ != order_) return add_product(x, y.at_order(order_), k);
    if (x.is_zero() || y.is_zero()) return;
    const Integer d = x.den_ * y.den_;
    rescale_to(d);
    Integer mult = den_ / d;
    mult *= k;
    const std::size_t M = order_;
    u64 max_x = 0, max_y = 0;
    if (mpz_fits_slong_p(mult.get_mpz_t()) && small_values(x.num_, xs_, max_x) && small_values(y.num_, ys_, max_y)) {
        const long m = mult.get_si();
        const u64 am = m < 0 ? static_cast<u64>(-m) : static_cast<u64>(m);
        if (am < (u64{1} << 31)) {
            const unsigned __int128 step = static_cast<unsigned __int128>(max_x) * am * max_y *
                                           std::min(xs_.size(), ys_.size());
            constexpr unsigned __int128 limit = static_cast<unsigned __int128>(1) << 125;
            if (fast_bound_ + step >= limit) flush();
            if (step < limit) {
                fast_bound_ += step;
                for (std::size_t i = 0; i < xs_.size(); ++i) {
                    if (xs_[i] == 0) continue;
                    const __int128 xi = static_cast<__int128>(xs_[i]) * m;
                    std::size_t idx = i;
                    for (std::size_t j = 0; j < ys_.size(); ++j, ++idx) {
                        if (idx >= M) idx -= M;
                        fast_[idx] += xi * ys_[j];
                    }
                }
                return;
            }
        }
    }
    Integer xi;
    for (std::size_t i = 0; i < x.num_.size(); ++i) {
        if (x.num_[i] == 0) continue;
        mpz_mul(xi.get_mpz_t(), x.num_[i].get_mpz_t(), mult.get_mpz_t());
        for (std::size_t j = 0; j < y.num_.size(); ++j) {
            if (y.num_[j] == 0) continue;
            std::size_t idx = i + j;
            if (idx >= M) idx -= M;
            mpz_addmul(raw_[idx].get_mpz_t(), xi.get_mpz_t(), y.num_[j].get_mpz_t());
        }
    }
}

Cyclotomic CycloAccumulator::result() const {
    if (fast_bound_ == 0) return Cyclotomic(order_, reduce(raw_, order_), den_);
    std::vector<Integer> raw = raw_;
    for (std::size_t i = 0; i < order_; ++i)
        if (fast_[i] != 0) add_int128(raw[i], fast_[i]);
    return Cyclotomic(order_, reduce(raw, order_), den_);
}

// ---- free functions --------------------------------------------------------------

std::complex<long double> embed_complex(const Cyclotomic& z, int precision_bits) {
    const int bits = std::clamp(precision_bits, 1, 60);
    auto round_to = [bits](long double v) {
        if (v == 0) return v;
        int e = 0;
        long double m = std::frexp(v, &e);
        return std::ldexp(std::round(std::ldexp(m, bits)), e - bits);
    };
    auto v = z.to_complex();
    return {round_to(v.real()), round_to(v.imag())};
}

std::string to_literal(const Cyclotomic& z) {
    std::ostringstream os;
    os << "order " << z.order() << "; terms [";
    bool first = true;
    for (std::size_t i = 0; i < z.degree(); ++i) {
        Rational c = z.coeff(i);
        if (c == 0) continue;
        if (!first) os << ", ";
        first = false;
        os << "(" << c.get_num().get_str() << ", " << c.get_den().get_str() << ", " << i << ")";
    }
    os << "]";
    return os.str();
}

std::string to_literal(const Cyclotomic& z, u64 M) { return to_literal(z.at_order(M)); }

}  // namespace rcft
