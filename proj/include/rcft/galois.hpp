#pragma once

/**
 * @file galois.hpp
 * @brief Galois symmetry σ_ℓ(S_ab) = ε_ℓ(a)·S_{σ_ℓ a, b} of modular data.
 *
 * Two moduli appear: field automorphisms act through ℓ ∈ Z_M^* with M the
 * order of S's field, while fractional powers of T use ℓ ∈ Z_N^* with N the
 * order of T. galois_lift() moves from the second to the first.
 */

#include <array>
#include <vector>

#include "rcft/moddata.hpp"

namespace rcft {

struct GaloisSymmetry {
    i64 ell = 1;                     ///< as applied to the field, reduced mod M
    std::vector<std::size_t> perm;   ///< a ↦ σ_ℓ a
    std::vector<int> signs;          ///< ε_ℓ(a)
};

/// Matches every row of σ_ℓ(S) against ±(row of S). Throws Errc::not_coprime,
/// Errc::no_match or Errc::ambiguous_match.
GaloisSymmetry extract_galois(const ModularData& md, i64 ell);

/// (G)_ab = ε(a)·δ_{b,σa}.
CMatrix g_matrix(const GaloisSymmetry& gs);

/// Smallest ℓ' ≥ 0 with ℓ' ≡ ℓ (mod N) and gcd(ℓ', M) = 1.
i64 galois_lift(i64 ell, u64 N, u64 M);

/// Symmetry for ℓ ∈ Z_N^*, extracted at its lift to Z_M^*.
GaloisSymmetry galois_for_t_index(const ModularData& md, i64 ell);

/// r_{σ_ℓ a} ≡ ℓ²·r_a (mod 1) for all a.
bool check_condition6(const ModularData& md, i64 ell);

/// S·T^{1/ℓ}·S·T^ℓ·S·T^{1/ℓ} with 1/ℓ the inverse mod N.
CMatrix g_via_word(const ModularData& md, i64 ell);

/// Exponents of T_(ℓ) = G_ℓ T^{1/ℓ²} G_ℓ^{-1}: r'_a = ℓ^{-2}·r_{σ_ℓ a}.
std::vector<Rational> t_twisted(const ModularData& md, i64 ell);

/// The four words for G_ℓ built from T, T_(ℓ) and T_(1/ℓ).
std::array<CMatrix, 4> eq7_expressions(const ModularData& md, i64 ell);

}  // namespace rcft
