#include "doctest.h"
#include "rcft/bantay.hpp"
#include "rcft/catalog.hpp"
#include "rcft/error.hpp"

using namespace rcft;

namespace {

std::vector<std::pair<std::string, ModularData>> odd_data() {
    return {{"a2 2", affine_data(Algebra::A2, 2)},
            {"a2 4", affine_data(Algebra::A2, 4)},
            {"double z3", quantum_double_data(builtin_group("z", 3))}};
}

}  // namespace

TEST_CASE("trivial theory") {
    const ModularData md = make_modular_data(CMatrix::identity(1), {Rational(0)});
    const auto f = verlinde(md);
    CHECK(z_indicator(md, f, 0, 0) == Cyclotomic(1L));
    CHECK(fs_indicator(md, f, 0) == 1);
    CHECK(corollary6_check(md, f) == Verdict::pass);
}

TEST_CASE("vacuum indicator is a delta") {
    for (const ModularData& md : {lattice_data(4), affine_data(Algebra::A2, 2), quantum_double_data(builtin_group("s3"))}) {
        const auto f = verlinde(md);
        for (std::size_t b = 0; b < md.size(); ++b) CHECK(z_indicator(md, f, 0, b) == Cyclotomic(b == 0 ? 1L : 0L));
    }
}

TEST_CASE("generalised indicators") {
    const ModularData md = affine_data(Algebra::A2, 2);
    const auto f = verlinde(md);
    for (std::size_t a = 0; a < md.size(); ++a)
        for (std::size_t b = 0; b < md.size(); ++b) {
            CHECK(z_general(md, f, a, b, 0) == z_indicator(md, f, a, b));
            CHECK(z_ell(md, f, 2, a, b, 0) == z_indicator(md, f, a, b));
            for (std::size_t d = 0; d < md.size(); ++d) CHECK(as_integer(z_general(md, f, a, b, d)));
        }
}

TEST_CASE("Frobenius-Schur indicators") {
    for (const ModularData& md : {lattice_data(4), lattice_data(6), affine_data(Algebra::A2, 2), quantum_double_data(builtin_group("q8")),
                                  quantum_double_data(builtin_group("s3"))}) {
        const auto f = verlinde(md);
        const auto C = charge_conjugation(md);
        for (std::size_t a = 0; a < md.size(); ++a) {
            const int nu = fs_indicator(md, f, a);
            CHECK((nu == 0) == (C[a] != a));
        }
    }
    // Lattice 4: a = 1 is complex.
    const ModularData l4 = lattice_data(4);
    CHECK(fs_indicator(l4, verlinde(l4), 1) == 0);
}

TEST_CASE("report on odd-order data") {
    for (const auto& [name, md] : odd_data()) {
        CAPTURE(name);
        const auto f = verlinde(md);
        const auto r = indicator_report(md, f);
        CHECK(r.all_integral);
        CHECK(r.bound_holds);
        CHECK(r.parity_holds);
        REQUIRE(r.closed_form_matches);
        CHECK(*r.closed_form_matches);
        for (std::size_t a = 0; a < md.size(); ++a)
            for (std::size_t b = 0; b < md.size(); ++b) CHECK(*as_integer(r.z[a][b]) == z_closed_form(md, f, a, b));
        CHECK(corollary6_check(md, f) == Verdict::pass);
    }
}

TEST_CASE("fusion square root") {
    const ModularData md = affine_data(Algebra::A2, 2);
    const auto f = verlinde(md);
    const auto r = fusion_sqrt_check(md, f);
    CHECK(r.verdict == Verdict::pass);
    CHECK(md.label(r.witness) == "(0,1,1)");
    const auto C = charge_conjugation(md);
    for (std::size_t b = 0; b < md.size(); ++b) CHECK(f(r.witness, r.witness, b) == (C[b] == b ? 1 : 0));

    const ModularData l2 = lattice_data(2);
    const auto fl = verlinde(l2);
    CHECK(fusion_sqrt_check(l2, fl).verdict == Verdict::not_applicable);
    CHECK(corollary6_check(l2, fl) == Verdict::not_applicable);
    CHECK_THROWS_AS(z_closed_form(l2, fl, 0, 0), Error);
}

TEST_CASE("report on even-order data") {
    for (const ModularData& md : {quantum_double_data(builtin_group("z", 2)), quantum_double_data(builtin_group("s3"))}) {
        const auto r = indicator_report(md, verlinde(md));
        CHECK(r.all_integral);
        CHECK(r.bound_holds);
        CHECK(r.parity_holds);
        CHECK_FALSE(r.closed_form_matches);
    }
}

TEST_CASE("as_integer") {
    CHECK(*as_integer(Cyclotomic(-3L)) == -3);
    CHECK_FALSE(as_integer(Cyclotomic(make_rational(1, 2))));
    CHECK_FALSE(as_integer(Cyclotomic::xi_power(3, 1)));
}
