#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "rcft/catalog.hpp"
#include "rcft/error.hpp"

using namespace rcft;
using cd = std::complex<double>;

namespace {

cd numeric(const Cyclotomic& z) {
    auto v = z.to_complex();
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Direct term-by-term sum in double precision.
cd gauss_direct(long a, long b, long c) {
    cd s = 0;
    for (long k = 0; k < std::abs(c); ++k) s += std::polar(1.0, M_PI * static_cast<double>(a * k * k + b * k) / c);
    return s;
}

}  // namespace

TEST_CASE("gauss sums") {
    CHECK(gauss_sum(0, 0, 7) == Cyclotomic(7L));
    CHECK(gauss_sum(1, 0, 2) == Cyclotomic(1L) + Cyclotomic::xi_power(4, 1));
    CHECK(gauss_sum(2, 0, 1) == Cyclotomic(1L));
    CHECK_THROWS_AS(gauss_sum(1, 1, 0), Error);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-12, 12);
    for (int i = 0; i < 50; ++i) {
        long a = d(rng), b = d(rng), c = d(rng);
        if (c == 0) c = 3;
        CHECK(std::abs(numeric(gauss_sum(a, b, c)) - gauss_direct(a, b, c)) < 1e-9);
    }
}

TEST_CASE("gauss reciprocity") {
    CHECK(gauss_reciprocity_check(1, 0, 2).pass);
    CHECK(gauss_reciprocity_check(2, 0, 2).pass);
    CHECK_THROWS_AS(gauss_reciprocity_check(0, 0, 2), Error);
    CHECK_THROWS_AS(gauss_reciprocity_check(1, 0, 3), Error);  // ac + b odd
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> d(-20, 20);
    int done = 0;
    while (done < 60) {
        const long a = d(rng), b = d(rng), c = d(rng);
        if (a == 0 || c == 0 || (a * c + b) % 2 != 0) continue;
        ++done;
        const auto r = gauss_reciprocity_check(a, b, c);
        CHECK(r.pass);
        CHECK(r.exact_modulus);
        // Independent double-precision evaluation of both sides.
        const double ac = static_cast<double>(a * c);
        const cd rhs = std::sqrt(std::abs(static_cast<double>(c) / a)) *
                       std::polar(1.0, M_PI * ((ac > 0 ? 1 : -1) - b * b / ac) / 4) * gauss_direct(-c, -b, a);
        CHECK(std::abs(gauss_direct(a, b, c) - rhs) < 1e-8);
    }
}

TEST_CASE("lattice data") {
    const ModularData md = lattice_data(4);
    CHECK(md.size() == 4);
    CHECK(md.T[0] == Rational(23, 24));
    CHECK(md.T[1] == Rational(1, 8) - Rational(1, 24));
    CHECK(std::abs(numeric(md.S(1, 1)) - std::polar(0.5, M_PI / 2)) < 1e-12);
    CHECK_THROWS_AS(lattice_data(3), Error);
}

TEST_CASE("affine weights, labels and central charges") {
    CHECK(affine_weights(Algebra::A1, 3).size() == 4);
    const auto w = affine_weights(Algebra::A2, 2);
    CHECK(w.size() == 6);
    CHECK(w.front() == std::vector<int>{0, 0});
    const ModularData md = affine_data(Algebra::A2, 2);
    CHECK(md.label(0) == "(2,0,0)");
    CHECK(affine_central_charge(Algebra::A2, 2) == Rational(16, 5));
    CHECK(affine_central_charge(Algebra::A1, 1) == 1);
    // r_λ = h_λ - c/24.
    for (std::size_t a = 0; a < w.size(); ++a)
        CHECK(md.T[a] == frac(affine_conformal_weight(Algebra::A2, 2, w[a]) - affine_central_charge(Algebra::A2, 2) / 24));
    CHECK(parse_algebra("a2") == Algebra::A2);
    CHECK_THROWS_AS(parse_algebra("e8"), Error);
    CHECK(dual_coxeter(Algebra::A1) == 2);
}

TEST_CASE("a1 S matrix against the sine formula") {
    for (int k = 1; k <= 4; ++k) {
        const ModularData md = affine_data(Algebra::A1, k);
        const double K = k + 2;
        for (int l = 0; l <= k; ++l)
            for (int m = 0; m <= k; ++m)
                CHECK(std::abs(numeric(md.S(l, m)) - std::sqrt(2 / K) * std::sin(M_PI * (l + 1) * (m + 1) / K)) < 1e-12);
    }
}

TEST_CASE("built-in groups") {
    struct Expect {
        const char* name;
        u64 n;
        std::size_t order, classes;
        u64 exponent;
        std::size_t primaries;
    };
    for (const Expect& e : {Expect{"z", 2, 2, 2, 2, 4}, Expect{"z", 3, 3, 3, 3, 9}, Expect{"s3", 0, 6, 3, 6, 8},
                            Expect{"d4", 0, 8, 5, 4, 22}, Expect{"q8", 0, 8, 5, 4, 22}}) {
        CAPTURE(e.name);
        const GroupData g = builtin_group(e.name, e.n);
        CHECK(g.order() == e.order);
        CHECK(g.classes.size() == e.classes);
        CHECK(g.exponent() == e.exponent);
        CHECK_NOTHROW(check_group_data(g));
        const ModularData md = quantum_double_data(g);
        CHECK(md.size() == e.primaries);
        CHECK(t_order(md) == e.exponent);
        CHECK(validate(md).pass());
        // Σ over classes of |Irr(C_G(a))| primaries, each with χ(e) > 0.
        std::size_t count = 0;
        for (const auto& c : g.classes) count += c.characters.size();
        CHECK(count == e.primaries);
    }
    CHECK_THROWS_AS(builtin_group("a5"), Error);
}

TEST_CASE("group tables are checked") {
    std::vector<std::vector<int>> z4(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z4[i][j] = (i + j) % 4;
    const GroupData g = group_from_table("Z4", z4);
    CHECK(g.identity == 0);
    CHECK(g.element_order(1) == 4);
    CHECK(g.inv(1) == 3);

    auto broken = z4;
    std::swap(broken[1][0], broken[1][1]);
    CHECK_THROWS_AS(group_from_table("bad", broken), Error);

    GroupData h = builtin_group("s3");
    h.classes[1].characters[0][0] = Cyclotomic(2L);
    CHECK_THROWS_AS(check_group_data(h), Error);
}

TEST_CASE("double T entries are character ratios") {
    const GroupData g = builtin_group("s3");
    const ModularData md = quantum_double_data(g);
    std::size_t a = 0;
    for (const auto& cls : g.classes) {
        const auto pos_rep = std::find(cls.centralizer.begin(), cls.centralizer.end(), cls.rep) - cls.centralizer.begin();
        const auto pos_e = std::find(cls.centralizer.begin(), cls.centralizer.end(), g.identity) - cls.centralizer.begin();
        for (const auto& chi : cls.characters) {
            const Cyclotomic ratio = chi[pos_rep] / chi[pos_e];
            CHECK(ratio == Cyclotomic::root_of_unity(md.T[a].get_den().get_ui(), md.T[a].get_num().get_si()));
            ++a;
        }
    }
}
