#include "rcft/moddata.hpp"

#include <algorithm>
#include <variant>

#include "rcft/error.hpp"

namespace rcft {

std::string ModularData::label(std::size_t a) const {
    return labels.empty() ? std::to_string(a) : labels.at(a);
}

ModularData make_modular_data(CMatrix S, std::vector<Rational> T, std::vector<std::string> labels) {
    const std::size_t n = T.size();
    if (n == 0) throw Error(Errc::precondition, "modular data needs at least one primary");
    if (S.rows() != n || S.cols() != n)
        throw Error(Errc::precondition, "S is " + std::to_string(S.rows()) + "x" +
                                            std::to_string(S.cols()) + " but T has " +
                                            std::to_string(n) + " entries");
    if (!labels.empty() && labels.size() != n)
        throw Error(Errc::precondition, "label count does not match the number of primaries");
    for (auto& r : T) {
        r.canonicalize();
        r = frac(r);
    }
    return ModularData{std::move(S), std::move(T), std::move(labels)};
}

u64 t_order(const ModularData& md) {
    u64 N = 1;
    for (const auto& r : md.T) N = lcm(N, r.get_den().get_ui());
    return N;
}

std::vector<Rational> scaled(const std::vector<Rational>& r, const Rational& x) {
    std::vector<Rational> out;
    out.reserve(r.size());
    for (const auto& v : r) out.push_back(frac(v * x));
    return out;
}

std::vector<Rational> t_power(const ModularData& md, i64 numerator, i64 denominator) {
    const i64 N = static_cast<i64>(t_order(md));
    if (!coprime(mod(denominator, N), N) && N > 1)
        throw Error(Errc::not_coprime, std::to_string(denominator) + " is not invertible mod " +
                                           std::to_string(N));
    const i64 k = N == 1 ? 0 : mod(mod(numerator, N) * mod_inverse(denominator, N), N);
    return scaled(md.T, Rational(static_cast<long>(k)));
}

bool ValidationReport::pass() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
}

namespace {

AxiomResult compare(std::string name, const CMatrix& A, const CMatrix& B) {
    AxiomResult r{std::move(name), true, std::nullopt};
    r.witness = first_difference(A, B);
    r.pass = !r.witness;
    return r;
}

/// a ↦ Ca if C is a signless permutation matrix; otherwise the first bad row.
std::variant<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> read_permutation(
    const CMatrix& C) {
    std::vector<std::size_t> perm(C.rows());
    std::vector<bool> hit(C.rows(), false);
    for (std::size_t i = 0; i < C.rows(); ++i) {
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < C.cols(); ++j) {
            if (C(i, j).is_zero()) continue;
            if (col || !C(i, j).is_one() || hit[j]) return std::pair{i, j};
            col = j;
        }
        if (!col) return std::pair{i, std::size_t{0}};
        perm[i] = *col;
        hit[*col] = true;
    }
    return perm;
}

}  // namespace

ValidationReport validate(const ModularData& md) {
    ValidationReport report;
    report.t_order = t_order(md);
    const std::size_t n = md.size();
    const CMatrix& S = md.S;

    report.axioms.push_back(compare("S symmetric", S, S.transpose()));
    report.axioms.push_back(compare("S unitary", S * S.conj_transpose(), CMatrix::identity(n)));

    const CMatrix C = S * S;
    AxiomResult perm_axiom{"S^2 permutation", true, std::nullopt};
    auto perm = read_permutation(C);
    if (auto* bad = std::get_if<std::pair<std::size_t, std::size_t>>(&perm)) {
        perm_axiom.pass = false;
        perm_axiom.witness = *bad;
    } else {
        report.conjugation = std::get<std::vector<std::size_t>>(perm);
    }
    report.axioms.push_back(perm_axiom);
    report.axioms.push_back(compare("C^2 = I", C * C, CMatrix::identity(n)));
    report.axioms.push_back(compare("CS = SC", C * S, S * C));

    AxiomResult ct{"CT = TC", true, std::nullopt};
    if (report.conjugation.empty()) {
        ct = compare("CT = TC", diag_right(C, md.T), diag_left(md.T, C));
    } else {
        for (std::size_t a = 0; a < n && ct.pass; ++a)
            if (md.T[report.conjugation[a]] != md.T[a]) {
                ct.pass = false;
                ct.witness = std::pair{a, report.conjugation[a]};
            }
    }
    report.axioms.push_back(ct);

    const CMatrix ST = diag_right(S, md.T);
    report.axioms.push_back(compare("(ST)^3 = I", ST * ST * ST, CMatrix::identity(n)));
    return report;
}

std::vector<std::vector<long>> FusionTensor::matrix(std::size_t a) const {
    std::vector<std::vector<long>> out(n_, std::vector<long>(n_));
    for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c) out[b][c] = (*this)(a, b, c);
    return out;
}

FusionTensor verlinde(const ModularData& md) {
    const std::size_t n = md.size();
    const u64 W = md.field_order();
    const CMatrix S = md.S.at_order(W);
    const CMatrix Sbar = S.conj();
    std::vector<Cyclotomic> inv0(n);
    for (std::size_t d = 0; d < n; ++d) {
        if (S(0, d).is_zero())
            throw Error(Errc::zero_vacuum_row, "S_0," + md.label(d) + " vanishes");
        inv0[d] = S(0, d).inverse().at_order(W);
    }
    FusionTensor N(n);
    std::vector<Cyclotomic> v(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            for (std::size_t d = 0; d < n; ++d) v[d] = S(a, d) * S(b, d) * inv0[d];
            for (std::size_t c = 0; c < n; ++c) {
                CycloAccumulator acc(W);
                for (std::size_t d = 0; d < n; ++d) acc.add_product(v[d], Sbar(c, d));
                const Cyclotomic value = acc.result();
                auto q = value.as_rational();
                if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p())
                    throw Error(Errc::non_integral_fusion,
                                "N_{" + md.label(a) + "," + md.label(b) + "}^" + md.label(c) +
                                    " = " + to_literal(value) + " is not a nonnegative integer");
                N(a, b, c) = N(b, a, c) = q->get_num().get_si();
            }
        }
    return N;
}

std::vector<std::size_t> charge_conjugation(const ModularData& md) {
    auto perm = read_permutation(md.S * md.S);
    if (auto* bad = std::get_if<std::pair<std::size_t, std::size_t>>(&perm))
        throw Error(Errc::data_integrity, "S^2 is not a permutation matrix (row " +
                                              std::to_string(bad->first) + ")");
    return std::get<std::vector<std::size_t>>(perm);
}

std::vector<Cyclotomic> quantum_dimensions(const ModularData& md) {
    if (md.S(0, 0).is_zero()) throw Error(Errc::zero_vacuum_row, "S_00 vanishes");
    const Cyclotomic inv = md.S(0, 0).inverse();
    std::vector<Cyclotomic> out;
    for (std::size_t a = 0; a < md.size(); ++a) out.push_back(md.S(a, 0) * inv);
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

CentralChargeCheck central_charge_integrality_check(const ModularData& md) {
    CentralChargeCheck out;
    out.t00_order = md.T[0].get_den().get_ui();
    for (const auto& q : quantum_dimensions(md))
        if (!q.as_rational()) return out;
    out.verdict = 24 % out.t00_order == 0 ? Verdict::pass : Verdict::fail;
    return out;
}

Prop3cResult prop3c_check(const ModularData& md, std::size_t b) {
    if (b >= md.size()) throw Error(Errc::precondition, "label out of range");
    if (md.S(0, b).is_zero()) throw Error(Errc::zero_vacuum_row, "S_0," + md.label(b) + " vanishes");
    Prop3cResult out;
    const Cyclotomic inv = md.S(0, b).inverse();
    for (std::size_t a = 0; a < md.size(); ++a) out.K = lcm(out.K, (md.S(a, b) * inv).conductor());
    out.M = lcm(out.K, md.T[b].get_den().get_ui());
    const u64 ratio = out.M / out.K;
    out.divides_24 = 24 % ratio == 0;
    out.coprime = std::gcd(ratio, out.K) == 1;
    out.verdict = (out.divides_24 && out.coprime) ? Verdict::pass : Verdict::fail;
    return out;
}

bool commutes_with_st(const ModularData& md, const CMatrix& X) {
    for (std::size_t a = 0; a < md.size(); ++a)
        for (std::size_t b = 0; b < md.size(); ++b)
            if (md.T[a] != md.T[b] && !X(a, b).is_zero()) return false;
    return X * md.S == md.S * X;
}

std::vector<CMatrix> commutant_basis(const ModularData& md) {
    const std::size_t n = md.size();
    // XT = TX forces X_pq = 0 unless r_p = r_q; only those entries are unknowns.
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (md.T[p] == md.T[q]) unknowns.emplace_back(p, q);

    // Row (i, j) of XS - SX = 0.
    CMatrix A(n * n, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [p, q] = unknowns[u];
        for (std::size_t j = 0; j < n; ++j) A(p * n + j, u) += md.S(q, j);
        for (std::size_t i = 0; i < n; ++i) A(i * n + q, u) -= md.S(i, p);
    }
    std::vector<CMatrix> basis;
    for (const auto& v : nullspace(A)) {
        CMatrix X(n, n);
        for (std::size_t u = 0; u < unknowns.size(); ++u) X(unknowns[u].first, unknowns[u].second) = v[u];
        basis.push_back(std::move(X));
    }
    return basis;
}

IntegralCommutant integral_commutant_basis(const ModularData& md) {
    const std::size_t n = md.size();
    const auto basis = commutant_basis(md);

    // Echelon form over flattened matrices: (M_a) at pivot b is δ_ab.
    CMatrix flat(basis.size(), n * n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat(k, i * n + j) = basis[k](i, j);
    const Rref R = rref(flat);

    const u64 F = R.reduced.order();
    std::vector<i64> units;
    for (i64 l = 1; l <= static_cast<i64>(F); ++l)
        if (coprime(l, static_cast<i64>(F))) units.push_back(l);

    IntegralCommutant out;
    out.galois_group_order = units.size();
    std::vector<std::vector<Rational>> averaged(R.pivots.size(), std::vector<Rational>(n * n));
    for (std::size_t a = 0; a < R.pivots.size(); ++a) {
        CMatrix Ma(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) Ma(i, j) = R.reduced(a, i * n + j);
        std::vector<Cyclotomic> sum(n * n);
        for (i64 l : units) {
            const CMatrix sigma = Ma.galois(l);
            if (!commutes_with_st(md, sigma))
                throw Error(Errc::galois_closure, "sigma_" + std::to_string(l) + " of basis matrix " +
                                                      std::to_string(a) + " leaves the commutant");
            for (std::size_t k = 0; k < n * n; ++k) sum[k] += sigma(k / n, k % n);
        }
        for (std::size_t k = 0; k < n * n; ++k) {
            auto q = sum[k].as_rational();
            if (!q) throw Error(Errc::galois_closure, "Galois average is not rational");
            averaged[a][k] = *q / Rational(static_cast<long>(units.size()));
            mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
                    averaged[a][k].get_den_mpz_t());
        }
    }
    for (const auto& avg : averaged) {
        CMatrix X(n, n);
        for (std::size_t k = 0; k < n * n; ++k) X(k / n, k % n) = Cyclotomic(Rational(avg[k] * out.denominator));
        out.basis.push_back(std::move(X));
    }
    return out;
}

}  // namespace rcft
