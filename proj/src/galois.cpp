#include "rcft/galois.hpp"

#include "rcft/error.hpp"

namespace rcft {

namespace {

enum class RowMatch { none, plus, minus };

RowMatch match_row(const CMatrix& A, std::size_t a, const CMatrix& B, std::size_t b) {
    bool plus = true, minus = true;
    for (std::size_t j = 0; j < A.cols() && (plus || minus); ++j) {
        if (plus && !(A(a, j) == B(b, j))) plus = false;
        if (minus && !(A(a, j) == -B(b, j))) minus = false;
    }
    if (plus) return RowMatch::plus;
    if (minus) return RowMatch::minus;
    return RowMatch::none;
}

i64 inverse_mod_n(i64 ell, u64 N) {
    if (N == 1) return 0;
    if (!coprime(mod(ell, static_cast<i64>(N)), static_cast<i64>(N)))
        throw Error(Errc::not_coprime,
                    std::to_string(ell) + " is not invertible mod " + std::to_string(N));
    return mod_inverse(ell, static_cast<i64>(N));
}

}  // namespace

GaloisSymmetry extract_galois(const ModularData& md, i64 ell) {
    const u64 M = md.field_order();
    const i64 l = mod(ell, static_cast<i64>(M));
    if (M > 1 && !coprime(l, static_cast<i64>(M)))
        throw Error(Errc::not_coprime,
                    std::to_string(ell) + " is not coprime to the field order " + std::to_string(M));
    const std::size_t n = md.size();
    const CMatrix sigma = md.S.galois(l);
    GaloisSymmetry gs{M == 1 ? 1 : l, std::vector<std::size_t>(n), std::vector<int>(n)};
    std::vector<bool> used(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        std::optional<std::size_t> found;
        for (std::size_t b = 0; b < n; ++b) {
            RowMatch m = match_row(sigma, a, md.S, b);
            if (m == RowMatch::none) continue;
            if (found)
                throw Error(Errc::ambiguous_match, "row " + md.label(a) + " of sigma_" +
                                                       std::to_string(l) + "(S) matches rows " +
                                                       md.label(*found) + " and " + md.label(b));
            found = b;
            gs.signs[a] = m == RowMatch::plus ? 1 : -1;
        }
        if (!found || used[*found])
            throw Error(Errc::no_match, "row " + md.label(a) + " of sigma_" + std::to_string(l) +
                                            "(S) is not a signed row of S");
        used[*found] = true;
        gs.perm[a] = *found;
    }
    return gs;
}

CMatrix g_matrix(const GaloisSymmetry& gs) {
    const std::size_t n = gs.perm.size();
    CMatrix G(n, n);
    for (std::size_t a = 0; a < n; ++a) G(a, gs.perm[a]) = Cyclotomic(static_cast<long>(gs.signs[a]));
    return G;
}

i64 galois_lift(i64 ell, u64 N, u64 M) {
    const i64 n = static_cast<i64>(N), m = static_cast<i64>(M);
    if (N > 1 && !coprime(mod(ell, n), n))
        throw Error(Errc::not_coprime, std::to_string(ell) + " is not coprime to " + std::to_string(N));
    const i64 base = mod(ell, n);
    for (i64 j = 0; j <= m; ++j) {
        const i64 candidate = base + j * n;
        if (coprime(candidate, m)) return candidate;
    }
    throw Error(Errc::not_coprime, "no lift of " + std::to_string(ell) + " is coprime to " +
                                       std::to_string(M));
}

GaloisSymmetry galois_for_t_index(const ModularData& md, i64 ell) {
    return extract_galois(md, galois_lift(ell, t_order(md), md.field_order()));
}

bool check_condition6(const ModularData& md, i64 ell) {
    const GaloisSymmetry gs = extract_galois(md, ell);
    const Rational l2(ell * ell);
    for (std::size_t a = 0; a < md.size(); ++a)
        if (md.T[gs.perm[a]] != frac(l2 * md.T[a])) return false;
    return true;
}

CMatrix g_via_word(const ModularData& md, i64 ell) {
    const u64 N = t_order(md);
    const i64 inv = inverse_mod_n(ell, N);
    const auto t_inv = scaled(md.T, Rational(static_cast<long>(inv)));
    const auto t_ell = scaled(md.T, Rational(static_cast<long>(ell)));
    const CMatrix A = diag_right(md.S, t_inv);
    return A * diag_right(md.S, t_ell) * A;
}

std::vector<Rational> t_twisted(const ModularData& md, i64 ell) {
    const u64 N = t_order(md);
    const i64 inv = inverse_mod_n(ell, N);
    const GaloisSymmetry gs = galois_for_t_index(md, ell);
    const Rational inv2(static_cast<long>(mod(inv * inv, static_cast<i64>(std::max<u64>(N, 1)))));
    std::vector<Rational> out(md.size());
    for (std::size_t a = 0; a < md.size(); ++a) out[a] = frac(inv2 * md.T[gs.perm[a]]);
    return out;
}

std::array<CMatrix, 4> eq7_expressions(const ModularData& md, i64 ell) {
    const u64 N = t_order(md);
    const i64 inv = inverse_mod_n(ell, N);
    const Rational l(static_cast<long>(ell)), li(static_cast<long>(inv));
    const auto T_l = scaled(md.T, l);
    const auto T_li = scaled(md.T, li);
    const auto Tw_l = scaled(t_twisted(md, ell), l);      // T_(ℓ)^ℓ
    const auto Tw_li = scaled(t_twisted(md, inv), li);    // T_(1/ℓ)^(1/ℓ)
    const CMatrix& S = md.S;
    return {
        diag_right(S, T_li) * diag_right(S, Tw_l) * diag_right(S, T_li),
        diag_left(T_l, S) * diag_left(Tw_li, S) * diag_left(T_l, S),
        diag_right(S, Tw_li) * diag_right(S, T_l) * diag_right(S, Tw_li),
        diag_left(Tw_l, S) * diag_left(T_li, S) * diag_left(Tw_l, S),
    };
}

}  // namespace rcft
