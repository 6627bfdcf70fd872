// Acceptance suite: one line per criterion, failures listed underneath.

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "rcft/bantay.hpp"
#include "rcft/catalog.hpp"
#include "rcft/cli.hpp"
#include "rcft/congruence.hpp"
#include "rcft/container.hpp"
#include "rcft/error.hpp"

using namespace rcft;

namespace {

class Criterion {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    void deadline(double seconds, double limit, const std::string& what) {
        if (seconds >= limit) {
            std::ostringstream os;
            os << what << " took " << std::fixed << std::setprecision(2) << seconds << " s (limit " << limit << " s)";
            failures_.push_back(os.str());
        }
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

std::vector<i64> units(u64 N) {
    std::vector<i64> out;
    for (i64 l = 1; l < static_cast<i64>(std::max<u64>(N, 2)); ++l)
        if (coprime(l, static_cast<i64>(N))) out.push_back(l);
    return out;
}

std::string str(auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

int cli(const std::vector<std::string>& args, const std::string& input, std::string& output) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    output = out.str() + err.str();
    return code;
}

struct Named {
    std::string name;
    ModularData md;
};

std::vector<Named> catalog() {
    std::vector<Named> out;
    for (u64 n : {2, 4, 6, 8, 10}) out.push_back({str("lattice ", n), lattice_data(n)});
    for (int k : {1, 2, 3}) out.push_back({str("a1 level ", k), affine_data(Algebra::A1, k)});
    for (int k : {1, 2, 4}) out.push_back({str("a2 level ", k), affine_data(Algebra::A2, k)});
    out.push_back({"double z2", quantum_double_data(builtin_group("z", 2))});
    out.push_back({"double z3", quantum_double_data(builtin_group("z", 3))});
    for (const char* g : {"s3", "d4", "q8"}) out.push_back({str("double ", g), quantum_double_data(builtin_group(g))});
    return out;
}

void lattice_suite(Criterion& c) {
    for (u64 n : {2, 4, 6, 8, 10}) {
        const double t = timed([&] {
            std::string text, report;
            c.require(cli({"gen", "lattice", std::to_string(n)}, "", text) == exit_pass, str("gen lattice ", n));
            c.require(cli({"validate"}, text, report) == exit_pass, str("lattice ", n, ": validate"));
            const ModularData md = parse_document(text).md;
            c.require(validate(md).pass(), str("lattice ", n, ": axioms"));
            c.require(t_order(md) == lcm(24, 2 * n), str("lattice ", n, ": t_order ", t_order(md), " != lcm(24, 2n)"));

            const FusionTensor f = verlinde(md);
            bool conv = true;
            for (u64 a = 0; a < n; ++a)
                for (u64 b = 0; b < n; ++b)
                    for (u64 x = 0; x < n; ++x) conv = conv && f(a, b, x) == ((a + b) % n == x ? 1 : 0);
            c.require(conv, str("lattice ", n, ": fusion is not cyclic convolution"));

            const auto r = theorem2_test(md);
            c.require(r.pass && r.branch == Branch::composite, str("lattice ", n, ": congruence test (composite branch)"));

            const auto u = u_matrix(md);
            c.require(u.zero_pattern, str("lattice ", n, ": U zero pattern against T^(2^e)"));
            std::size_t wrong = 0;
            for (u64 a = 0; a < n; ++a)
                for (u64 x = 0; x < n; ++x)
                    if (u.U(a, x).is_zero() == ((a + n - x) % u.m == 0)) ++wrong;
            c.require(wrong == 0, str("lattice ", n, ": 'U_ac != 0 iff m | a-c' with m = ", u.m, " fails on ", wrong, " of ",
                                      n * n, " entries"));
        });
        c.deadline(t, 10, str("lattice ", n));
    }
}

void odd_suite(Criterion& c) {
    const double t = timed([&] {
        for (int k : {2, 4}) {
            const ModularData md = affine_data(Algebra::A2, k);
            const std::string name = str("a2 level ", k);
            c.require(t_order(md) % 2 == 1, name + ": t_order even");
            const auto r = theorem2_test(md);
            c.require(r.pass && r.branch == Branch::coprime_p2, name + ": congruence test via p = 2");
            const FusionTensor f = verlinde(md);
            c.require(corollary6_check(md, f) == Verdict::pass, name + ": a -1 indicator");
            const auto sq = fusion_sqrt_check(md, f);
            c.require(sq.verdict == Verdict::pass, name + ": fusion square root");
            c.require(md.label(sq.witness) == str("(0,", k / 2, ",", k / 2, ")"), name + ": witness " + md.label(sq.witness));
            const auto C = charge_conjugation(md);
            for (std::size_t b = 0; b < md.size(); ++b)
                c.require(f(sq.witness, sq.witness, b) == (C[b] == b ? 1 : 0), name + ": multiplicity at " + md.label(b));
        }
    });
    c.deadline(t, 30, "odd-order suite");
}

void bantay_suite(Criterion& c) {
    std::vector<Named> data{{"a2 level 2", affine_data(Algebra::A2, 2)},
                            {"double z2", quantum_double_data(builtin_group("z", 2))},
                            {"double z3", quantum_double_data(builtin_group("z", 3))},
                            {"double s3", quantum_double_data(builtin_group("s3"))}};
    for (const auto& [name, md] : data) {
        const FusionTensor f = verlinde(md);
        const auto r = indicator_report(md, f);
        c.require(r.all_integral, name + ": Z(a,b) not integral");
        c.require(r.bound_holds, name + ": |Z(a,b)| <= N_aa^b");
        c.require(r.parity_holds, name + ": Z(a,b) = N_aa^b mod 2");
        const bool odd = t_order(md) % 2 == 1;
        if (!odd) continue;
        for (std::size_t a = 0; a < md.size(); ++a)
            for (std::size_t b = 0; b < md.size(); ++b) {
                const auto z = as_integer(r.z[a][b]);
                c.require(z && *z == z_closed_form(md, f, a, b), str(name, ": closed form at (", a, ",", b, ")"));
                for (std::size_t d = 0; d < md.size(); ++d)
                    c.require(as_integer(z_general(md, f, a, b, d)).has_value(), str(name, ": Z(", a, ",", b, ",", d, ")"));
            }
    }
}

void double_suite(Criterion& c) {
    const double t = timed([&] {
        const GroupData g = builtin_group("s3");
        const ModularData md = quantum_double_data(g);
        c.require(md.size() == 8, str("D(S3) has ", md.size(), " primaries"));
        c.require(t_order(md) == 6, "D(S3) t_order");
        c.require(validate(md).pass(), "D(S3) axioms");
        bool nonneg = true;
        const FusionTensor f = verlinde(md);
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b)
                for (std::size_t x = 0; x < 8; ++x) nonneg = nonneg && f(a, b, x) >= 0;
        c.require(nonneg, "D(S3) fusion has a negative entry");
        const auto r = theorem2_test(md);
        c.require(r.pass && r.branch == Branch::composite && r.conditions.size() == 4, "D(S3) congruence test (composite)");
        for (i64 l : {1, 5}) c.require(double_galois_check(g, l), str("D(S3) Galois action, l = ", l));
    });
    c.deadline(t, 10, "quantum double suite");
}

void galois_suite(Criterion& c) {
    for (const auto& [name, md] : catalog()) {
        if (!theorem2_test(md).pass) continue;
        const u64 N = t_order(md);
        const auto us = units(N);
        if (N <= 30)
            for (i64 l : us) c.require(rho_h_check(md, l), str(name, ": rho(h_", l, ") != G_", l));
        const auto g = gamma_n_sample(md, 100, 1);
        c.require(g.pass, name + ": Gamma(N) sample " + g.witness);
        for (i64 l : us) {
            if (!check_condition6(md, l)) continue;
            const auto e = eq7_expressions(md, l);
            c.require(e[0] == e[1] && e[1] == e[2] && e[2] == e[3], str(name, ": G_", l, " words disagree"));
            c.require(e[0] == g_matrix(galois_for_t_index(md, l)), str(name, ": G_", l, " words differ from G"));
        }
    }
}

void sl2_suite(Criterion& c) {
    for (u64 N = 1; N <= 12; ++N) {
        u64 order = 0;
        const double t = timed([&] { order = sl2_group_order(N); });
        // N³ Π_{p | N} (1 - p⁻²), evaluated directly.
        u64 expect = N * N * N, rest = N;
        for (u64 p = 2; p <= rest; ++p)
            if (rest % p == 0) {
                expect = expect / (p * p) * (p * p - 1);
                while (rest % p == 0) rest /= p;
            }
        c.require(order == expect, str("|SL2(Z/", N, ")| = ", order, ", expected ", expect));
        c.deadline(t, 5, str("SL2(Z/", N, ")"));
    }
    auto holds = [](u64 N, Variant v) {
        for (const auto& r : lemma1_relations(N, v))
            if (!r.pass) return false;
        return true;
    };
    for (u64 N : {3, 5, 7, 9}) c.require(holds(N, Variant::a_p2), str("relations a-p2, N = ", N));
    for (u64 N : {2, 4, 5, 8}) c.require(holds(N, Variant::a_p3), str("relations a-p3, N = ", N));
    for (u64 N : {6, 12}) c.require(holds(N, Variant::c), str("relations c, N = ", N));
}

void gauss_suite(Criterion& c) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<i64> d(-20, 20);
    std::uniform_int_distribution<i64> bd(-40, 40);
    int done = 0;
    while (done < 200) {
        const i64 a = d(rng), b = bd(rng), x = d(rng);
        if (a == 0 || x == 0 || (a * x + b) % 2 != 0) continue;
        ++done;
        const auto r = gauss_reciprocity_check(a, b, x, 1e-9L);
        c.require(r.pass && r.exact_modulus, str("reciprocity at (", a, ",", b, ",", x, "), error ", static_cast<double>(r.error)));
    }
    for (u64 n : {2, 4, 8}) {
        const ModularData md = lattice_data(n);
        const auto u = u_matrix(md);
        const i64 m = static_cast<i64>(u.m);
        const Cyclotomic pre = Cyclotomic::root_of_unity(24, -m) * Cyclotomic(make_rational(1, static_cast<long>(n)));
        for (u64 a = 0; a < n; ++a)
            for (u64 x = 0; x < n; ++x)
                c.require(u.U(a, x) == pre * gauss_sum(m, 2 * (static_cast<i64>(a) - static_cast<i64>(x)), static_cast<i64>(n)),
                          str("lattice ", n, ": U(", a, ",", x, ") != Gauss sum form"));
    }
}

void commutant_suite(Criterion& c) {
    std::vector<Named> data{{"lattice 2", lattice_data(2)}, {"lattice 4", lattice_data(4)},
                            {"double z2", quantum_double_data(builtin_group("z", 2))}};
    for (const auto& [name, md] : data) {
        const auto basis = commutant_basis(md);
        const auto ic = integral_commutant_basis(md);
        c.require(ic.basis.size() == basis.size(), name + ": dimensions differ");
        for (const auto& X : ic.basis) {
            c.require(commutes_with_st(md, X), name + ": integral element does not commute");
            c.require(span_coefficients(basis, X).has_value(), name + ": integral element outside commutant");
        }
        for (const auto& X : basis) {
            c.require(commutes_with_st(md, X), name + ": basis element does not commute");
            c.require(span_coefficients(ic.basis, X).has_value(), name + ": commutant element outside integral span");
        }
    }
    c.require(two_ness(make_rational(12, 5)) == 2, "t(2.4)");
    c.require(two_ness(make_rational(5, 3)) == 0, "t(5/3)");
    c.require(two_ness(make_rational(67, 2)) == -1, "t(33.5)");
}

void conductor_suite(Criterion& c) {
    for (const auto& [name, md] : catalog())
        for (std::size_t b = 0; b < md.size(); ++b) {
            const auto r = prop3c_check(md, b);
            if (r.verdict != Verdict::pass)
                c.require(false, str(name, ", ", md.label(b), ": K = ", r.K, ", M = ", r.M, ", M/K | 24 ", r.divides_24 ? "yes" : "no",
                                     ", gcd(M/K, K) = ", std::gcd(r.M / r.K, r.K)));
        }
    for (const auto& [name, md] : catalog()) {
        if (name.rfind("double", 0) != 0) continue;
        const auto r = central_charge_integrality_check(md);
        c.require(r.verdict == Verdict::pass, str(name, ": central charge check ", to_string(r.verdict)));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"lattice suite", lattice_suite},
        {"odd-order suite", odd_suite},
        {"indicator suite", bantay_suite},
        {"quantum double suite", double_suite},
        {"Galois and word suite", galois_suite},
        {"SL2(Z/N) enumeration", sl2_suite},
        {"Gauss reciprocity", gauss_suite},
        {"commutant and two-ness", commutant_suite},
        {"conductor and central charge", conductor_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.require(false, str("exception: ", e.what()));
        }
        const bool ok = c.failures().empty();
        failed += !ok;
        std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " (" << std::fixed
                  << std::setprecision(2) << seconds_since(t0) << " s)\n";
        for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
        std::cout.flush();
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
