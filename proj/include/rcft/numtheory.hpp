#pragma once

// Small integer helpers shared by every module.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rcft {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Nonnegative residue of `a` modulo `m` (m > 0).
inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

/// Divisors of n in increasing order.
inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
    i64 g, x, y;
};
inline Bezout extended_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Inverse of a modulo m in [0, m); throws std::domain_error if gcd(a, m) != 1.
inline i64 mod_inverse(i64 a, i64 m) {
    if (m == 1) return 0;
    auto [g, x, y] = extended_gcd(mod(a, m), m);
    (void)y;
    if (g != 1) throw std::domain_error("mod_inverse: argument not invertible");
    return mod(x, m);
}

inline u64 lcm(u64 a, u64 b) { return std::lcm(a, b); }

inline bool coprime(i64 a, i64 b) { return std::gcd(a, b) == 1; }

}  // namespace rcft
