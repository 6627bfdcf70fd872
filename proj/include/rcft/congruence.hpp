#pragma once

/**
 * @file congruence.hpp
 * @brief The congruence test on T-order N, U-matrices, evaluation of the
 * modular representation on SL2(Z), Γ(N) sampling and presentation checks.
 */

#include <optional>
#include <string>
#include <vector>

#include "rcft/galois.hpp"
#include "rcft/sl2.hpp"

namespace rcft {

enum class Branch { coprime_p2, coprime_p3, composite };
const char* to_string(Branch b);

struct ConditionResult {
    std::string name;
    bool pass = false;
};

struct CongruenceReport {
    u64 N = 1;
    Branch branch = Branch::coprime_p2;
    u64 e = 0, m = 1;  ///< N = 2^e·m, m odd
    u64 d = 0;         ///< d ≡ 1 (mod 2^e), d ≡ 0 (mod m), smallest nonnegative
    std::vector<ConditionResult> conditions;
    bool pass = false;
};

/// N = 2^e·m and the CRT solution d.
void split_level(u64 N, u64& e, u64& m, u64& d);

/// Odd N: G_2 T = T^4 G_2. Else gcd(N,3) = 1: G_3 T = T^9 G_3. Else the four
/// composite conditions. A failure is inconclusive, not a disproof.
CongruenceReport theorem2_test(const ModularData& md);

/// G·T = T^k·G, with G the monomial matrix of gs.
bool g_twists_t(const ModularData& md, const GaloisSymmetry& gs, i64 k);

struct UMatrixReport {
    CMatrix U;
    u64 e = 0, m = 1;
    bool zero_pattern = false;  ///< U_ac = 0 whenever T^{2^e}_aa ≠ T^{2^e}_cc
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    bool symmetric = false, unitary = false, order_divides = false;  ///< U^{2^e} = I
};
/// U = S·T^m·S⁻¹. Requires e ≥ 1.
UMatrixReport u_matrix(const ModularData& md);

bool theorem4_applies(const ModularData& md);

/// Exponent of 2 in r ≠ 0.
int two_ness(const Rational& r);
/// t(c) ≥ 3 and t(h_i) ≥ 0 for all i, with t(0) = +∞.
bool odd_order_criterion(const Rational& c, const std::vector<Rational>& h);

/// ρ(word) with s ↦ S, s⁻¹ ↦ S⁻¹, t^k ↦ T^k.
CMatrix rho_word(const ModularData& md, const GeneratorWord& w);
CMatrix rho_eval(const ModularData& md, const SL2& m);

/// ρ(h_lift(ℓ, N)) = G_ℓ.
bool rho_h_check(const ModularData& md, i64 ell);

struct GammaSampleResult {
    bool pass = true;
    std::size_t trials = 0;
    std::string witness;  ///< offending matrix and word on failure
};
/// Random products of Γ(N) elements must map to I. Deterministic in seed.
GammaSampleResult gamma_n_sample(const ModularData& md, std::size_t trials, u64 seed,
                                 std::size_t max_factors = 12);

enum class Variant { a_p2, a_p3, b_p5, b_p7, c, all_units };
Variant parse_variant(const std::string& name);
const char* to_string(Variant v);

struct RelationResult {
    std::string name;
    bool pass = false;
};
/// Relations of the chosen presentation of SL2(N) with s ↦ S, t ↦ T.
std::vector<RelationResult> lemma1_relations(const ModularData& md, Variant v);
/// The same relations on the concrete matrices s, t of SL2(Z/N).
std::vector<RelationResult> lemma1_relations(u64 N, Variant v);

}  // namespace rcft
