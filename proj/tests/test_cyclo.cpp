#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "rcft/cyclo.hpp"
#include "rcft/error.hpp"

using namespace rcft;
using cd = std::complex<double>;

namespace {

Cyclotomic xi(u64 M, i64 k) { return Cyclotomic::xi_power(M, k); }

// Random element Σ c_k ξ_M^k with small integer/rational coefficients.
Cyclotomic random_element(std::mt19937_64& rng, u64 M) {
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3);
    std::vector<Cyclotomic::Term> terms;
    for (u64 k = 0; k < M; ++k) terms.push_back({Rational(coef(rng), den(rng)), static_cast<i64>(k)});
    return Cyclotomic::from_terms(M, terms);
}

// Direct numeric evaluation of the same random element, independent of the reduction.
cd numeric(const Cyclotomic& z) {
    auto v = z.to_complex();
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

bool close(cd a, cd b, double tol = 1e-9) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<i64>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<i64>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<i64>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
    // Φ_105 is the first with a coefficient of absolute value 2.
    const auto& p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(std::count(p105.begin(), p105.end(), -2) == 2);
}

TEST_CASE("arithmetic examples") {
    CHECK((Cyclotomic(1L) + xi(4, 1)) * (Cyclotomic(1L) - xi(4, 1)) == Cyclotomic(2L));
    CHECK(xi(3, 1) + xi(3, 2) == Cyclotomic(-1L));
    auto z = Cyclotomic(1L) + xi(5, 1);
    CHECK((Cyclotomic(1L) / z) * z == Cyclotomic(1L));
    CHECK_THROWS_AS(Cyclotomic(1L) / Cyclotomic(), Error);
    CHECK(xi(4, 1) * xi(4, 1) == Cyclotomic(-1L));
    // Mixed orders embed at the lcm.
    auto s = xi(3, 1) + xi(4, 1);
    CHECK(s.order() == 12);
    CHECK(close(numeric(s), std::polar(1.0, 2 * M_PI / 3) + cd(0, 1)));
}

TEST_CASE("root_of_unity") {
    CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1L));
    CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1L));
    auto r = Cyclotomic::root_of_unity(8, 2);
    CHECK(r.order() == 4);
    CHECK(r == xi(4, 1));
    CHECK(xi(8, 2).minimized().order() == 4);
    CHECK(xi(8, 2).minimized() == xi(4, 1));
    for (u64 M = 1; M <= 30; ++M)
        for (i64 k = -3; k < static_cast<i64>(M) + 3; ++k)
            CHECK(close(numeric(Cyclotomic::root_of_unity(M, k)), std::polar(1.0, 2 * M_PI * k / M)));
}

TEST_CASE("galois action") {
    CHECK(xi(8, 1).galois(-1) == xi(8, 7));
    CHECK(xi(8, 1).conj() == xi(8, 7));
    CHECK(xi(7, 1).galois(3).galois(2) == xi(7, 1).galois(6));
    CHECK_THROWS_AS(xi(6, 1).galois(3), Error);
    std::mt19937_64 rng(7);
    for (u64 M = 1; M <= 24; ++M) {
        for (int trial = 0; trial < 100; ++trial) {
            auto x = random_element(rng, M), y = random_element(rng, M);
            for (i64 l = 1; l < static_cast<i64>(M); ++l) {
                if (!coprime(l, M) || (l > 7 && l != static_cast<i64>(M) - 1)) continue;
                CHECK((x + y).galois(l) == x.galois(l) + y.galois(l));
                CHECK((x * y).galois(l) == x.galois(l) * y.galois(l));
            }
        }
        const i64 m = static_cast<i64>(M);
        for (i64 l = 1; l <= m; ++l)
            for (i64 k = 1; k <= m; ++k) {
                if (!coprime(l, m) || !coprime(k, m)) continue;
                auto x = random_element(rng, M);
                CHECK(x.galois(k).galois(l) == x.galois((l * k) % m));
            }
    }
}

TEST_CASE("conjugation matches complex conjugate") {
    std::mt19937_64 rng(11);
    for (u64 M : {3u, 5u, 8u, 12u, 15u, 24u}) {
        auto x = random_element(rng, M);
        CHECK(close(numeric(x.conj()), std::conj(numeric(x))));
    }
}

TEST_CASE("conductor") {
    CHECK(Cyclotomic(2L).conductor() == 1);
    CHECK(xi(8, 2).conductor() == 4);
    auto z = xi(5, 1) + xi(5, 4);
    CHECK(z.conductor() == 5);
    // ξ_5 + ξ_5^4 = (√5 − 1)/2 is real but not rational.
    CHECK(!z.as_rational());
    // Fixed-field oracle: for each divisor m, z lies in Q[ξ_m] iff minimizing
    // at m reproduces it.
    std::mt19937_64 rng(3);
    for (u64 M : {4u, 6u, 8u, 9u, 10u, 12u, 15u, 20u, 24u}) {
        for (u64 m : divisors(M)) {
            auto w = random_element(rng, m).at_order(M);
            u64 c = w.conductor();
            CHECK(m % c == 0);
            CHECK(w.minimized().order() == c);
            CHECK(w.minimized() == w);
            for (i64 l = 1; l < static_cast<i64>(M); ++l)
                if (coprime(l, M)) CHECK(w.galois(l).conductor() == c);
        }
    }
}

TEST_CASE("as_rational") {
    CHECK(*Cyclotomic(Rational(3, 2)).as_rational() == Rational(3, 2));
    CHECK(!xi(3, 1).as_rational());
    CHECK(*(xi(6, 1) + xi(6, 5)).as_rational() == Rational(1));
}

TEST_CASE("embed_complex") {
    auto v = embed_complex(xi(4, 1));
    CHECK(std::abs(v.real()) < 1e-12);
    CHECK(std::abs(v.imag() - 1) < 1e-12);
    v = embed_complex(Cyclotomic(-1L));
    CHECK(v.real() == -1);
    CHECK(v.imag() == 0);
    v = embed_complex(xi(8, 1));
    CHECK(std::abs(v.real() - std::sqrt(2.0) / 2) < 1e-12);
    CHECK(std::abs(v.imag() - std::sqrt(2.0) / 2) < 1e-12);
    auto coarse = embed_complex(xi(8, 1), 10);
    CHECK(std::abs(coarse.real() - std::sqrt(2.0) / 2) < std::ldexp(1.0, -10 + 4));
}

TEST_CASE("field axioms and numeric agreement") {
    std::mt19937_64 rng(5);
    for (u64 M : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u, 16u, 21u, 24u, 30u}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto x = random_element(rng, M), y = random_element(rng, M), z = random_element(rng, M);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x - x == Cyclotomic());
            if (!x.is_zero()) CHECK(x * x.inverse() == Cyclotomic(1L));
            CHECK(close(numeric(x + y), numeric(x) + numeric(y)));
            CHECK(close(numeric(x * y), numeric(x) * numeric(y), 1e-8));
            if (!y.is_zero()) CHECK(close(numeric(x / y), numeric(x) / numeric(y), 1e-6 * (1 + std::abs(numeric(x) / numeric(y)))));
        }
    }
}

TEST_CASE("embedding round trip") {
    std::mt19937_64 rng(9);
    for (u64 M : {3u, 4u, 5u, 6u, 10u}) {
        auto x = random_element(rng, M);
        for (u64 f : {2u, 3u, 4u}) {
            auto up = x.at_order(M * f);
            CHECK(up == x);
            CHECK(up.minimized() == x.minimized());
            CHECK(close(numeric(up), numeric(x)));
        }
    }
}

TEST_CASE("square roots") {
    for (long q = 1; q <= 40; ++q) {
        auto r = Cyclotomic::sqrt(Rational(q));
        CHECK(r * r == Cyclotomic(q));
        CHECK(close(numeric(r), cd(std::sqrt(double(q)), 0)));
    }
    auto h = Cyclotomic::sqrt(Rational(3, 8));
    CHECK(h * h == Cyclotomic(Rational(3, 8)));
    CHECK(close(numeric(h), cd(std::sqrt(3.0 / 8), 0)));
}

TEST_CASE("accumulator equals naive sum of products") {
    std::mt19937_64 rng(13);
    for (u64 M : {1u, 4u, 12u, 15u}) {
        CycloAccumulator acc(M);
        Cyclotomic naive;
        for (int i = 0; i < 10; ++i) {
            auto x = random_element(rng, M), y = random_element(rng, M);
            acc.add_product(x, y, i - 3);
            naive += Cyclotomic(long(i - 3)) * x * y;
            acc.add(x);
            naive += x;
        }
        CHECK(acc.result() == naive);
    }
}

TEST_CASE("literals") {
    CHECK(to_literal(Cyclotomic()) == "order 1; terms []");
    CHECK(to_literal(xi(4, 1)) == "order 4; terms [(1, 1, 1)]");
    CHECK(to_literal(Cyclotomic(Rational(-3, 2))) == "order 1; terms [(-3, 2, 0)]");
    CHECK(to_literal(Cyclotomic(1L), 3) == "order 3; terms [(1, 1, 0)]");
}

TEST_CASE("order limit") {
    auto old = order_limit();
    set_order_limit(50);
    CHECK_THROWS_AS(xi(51, 1), Error);
    CHECK_THROWS_AS(xi(7, 1) * xi(8, 1), Error);
    set_order_limit(old);
}
