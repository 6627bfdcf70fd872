#pragma once

/**
 * @file cyclo.hpp
 * @brief Exact arithmetic in cyclotomic fields Q[ξ_M].
 *
 * A Cyclotomic stores an element of Q[ξ_M] as a polynomial in ξ_M of degree
 * below φ(M), reduced modulo the M-th cyclotomic polynomial Φ_M. Because Φ_M
 * is the minimal polynomial of ξ_M, the power basis 1, ξ_M, …, ξ_M^{φ(M)-1}
 * is a Q-basis and the reduced coefficient vector is canonical.
 *
 * Internally the coefficients share one positive denominator:
 *   value = (Σ num[i]·ξ_M^i) / den,   gcd(num[0..], den) = 1.
 *
 * Operands of different orders are embedded at the lcm of their orders.
 * Nothing is ever reduced to a smaller order implicitly; use minimized().
 */

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcft/numtheory.hpp"
#include "rcft/rational.hpp"

namespace rcft {

/// Largest cyclotomic order any operation may create (default 10'000).
void set_order_limit(u64 limit);
u64 order_limit();

/// Coefficients of Φ_m, lowest degree first (cached, thread-safe).
const std::vector<i64>& cyclotomic_polynomial(u64 m);

class Cyclotomic {
public:
    /// Zero, at order 1.
    Cyclotomic();
    Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// ξ_M^k = e^{2πik/M}, expressed at the smallest order M/gcd(k, M).
    static Cyclotomic root_of_unity(u64 M, i64 k);
    /// ξ_M^k expressed at order M exactly (no order reduction).
    static Cyclotomic xi_power(u64 M, i64 k);
    /// Σ coeffs[j]·ξ_M^{exps[j]} at order M.
    struct Term {
        Rational coeff;
        i64 exponent;
    };
    static Cyclotomic from_terms(u64 M, std::span<const Term> terms);
    /// √q for a positive rational q, built from quadratic Gauss sums.
    static Cyclotomic sqrt(const Rational& q);

    u64 order() const { return order_; }
    /// Number of stored coefficients, φ(order()).
    std::size_t degree() const { return num_.size(); }
    Rational coeff(std::size_t i) const;
    std::vector<Rational> coeffs() const;
    const std::vector<Integer>& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const;
    bool is_one() const;

    /// Same value expressed at order M (order() must divide M).
    Cyclotomic at_order(u64 M) const;
    /// Same value at its conductor.
    Cyclotomic minimized() const;

    /// σ_ℓ: ξ_M ↦ ξ_M^ℓ. Requires gcd(ℓ, order()) = 1.
    Cyclotomic galois(i64 ell) const;
    Cyclotomic conj() const { return galois(-1); }
    Cyclotomic inverse() const;
    /// this · ξ_M^k, computed at order lcm(order(), M) by index rotation.
    Cyclotomic times_root(u64 M, i64 k) const;

    std::optional<Rational> as_rational() const;
    /// Smallest m | order() with this ∈ Q[ξ_m].
    u64 conductor() const;

    std::complex<long double> to_complex() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

private:
    friend class CycloAccumulator;
    Cyclotomic(u64 order, std::vector<Integer> num, Integer den);
    void normalize();

    u64 order_ = 1;
    std::vector<Integer> num_;
    Integer den_ = 1;
};

/**
 * Running sum of products at one fixed order.
 *
 * Products are accumulated unreduced modulo x^M - 1 over a common
 * denominator and reduced modulo Φ_M once in result(). Matrix products and
 * Verlinde sums go through this.
 */
class CycloAccumulator {
public:
    explicit CycloAccumulator(u64 order);
    void add(const Cyclotomic& x);
    void add_product(const Cyclotomic& x, const Cyclotomic& y);
    /// Adds k·x·y for an integer k.
    void add_product(const Cyclotomic& x, const Cyclotomic& y, long k);
    Cyclotomic result() const;

private:
    void rescale_to(const Integer& den);
    void flush();

    u64 order_;
    std::vector<Integer> raw_;
    Integer den_ = 1;
    Integer scratch_;
    // Word-sized products accumulate here and are flushed into raw_ before
    // they could overflow or when den_ changes.
    std::vector<__int128> fast_;
    unsigned __int128 fast_bound_ = 0;
    std::vector<i64> xs_, ys_;
};

/// Numerical value, diagnostic only. `precision_bits` is clamped to [1, 60].
std::complex<long double> embed_complex(const Cyclotomic& z, int precision_bits = 60);

/// Text form `order M; terms [(p, q, k), ...]` at the value's own order.
std::string to_literal(const Cyclotomic& z);
/// Same, with the value first embedded at order M.
std::string to_literal(const Cyclotomic& z, u64 M);

}  // namespace rcft
