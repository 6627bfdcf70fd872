#pragma once

/**
 * @file catalog.hpp
 * @brief Example modular data: lattice (compactified boson), affine A1/A2
 * via Kac-Peterson, and quantum doubles of finite groups.
 */

#include <map>
#include <string>
#include <vector>

#include "rcft/galois.hpp"
#include "rcft/moddata.hpp"

namespace rcft {

// ---- lattice ----------------------------------------------------------------------

/// Φ = Z_n, S_ab = n^{-1/2} e^{2πi ab/n}, r_a = a²/(2n) - 1/24. Requires n even.
ModularData lattice_data(u64 n);

/// Σ_{k=0}^{|c|-1} e^{πi(ak² + bk)/c}.
Cyclotomic gauss_sum(i64 a, i64 b, i64 c);

struct ReciprocityResult {
    bool pass = false;
    long double error = 0;     ///< |LHS - RHS| of the numerical comparison
    bool exact_modulus = false;  ///< |LHS|² = |RHS|² exactly
};
/// S(a,b,c) = √|c/a|·e^{πi(sgn(ac) - b²/(ac))/4}·S(-c,-b,a), checked at
/// tolerance `tol`. Requires ac ≠ 0 and ac + b even.
ReciprocityResult gauss_reciprocity_check(i64 a, i64 b, i64 c, long double tol = 1e-9L);

// ---- affine A1 / A2 ----------------------------------------------------------------

enum class Algebra { A1, A2 };

Algebra parse_algebra(const std::string& name);
int dual_coxeter(Algebra alg);

/// Dynkin labels (λ1) or (λ1, λ2) of P₊ᵏ, vacuum first.
std::vector<std::vector<int>> affine_weights(Algebra alg, int k);
/// Affine form "(λ0,λ1[,λ2])".
std::string affine_label(Algebra alg, int k, const std::vector<int>& lambda);

ModularData affine_data(Algebra alg, int k);
/// c = k·dim/(k + h∨).
Rational affine_central_charge(Algebra alg, int k);
/// h_λ = (λ, λ + 2ρ) / (2(k + h∨)).
Rational affine_conformal_weight(Algebra alg, int k, const std::vector<int>& lambda);

struct AffineGaloisWeight {
    std::vector<int> weight;  ///< λ⁺
    int sign = 1;             ///< det(w)
};
/// Solves λ⁺ + ρ = w(ℓ(λ+ρ)) + (k+h∨)α. Throws Errc::not_coprime when ℓ(λ+ρ)
/// lies on an alcove wall.
AffineGaloisWeight affine_galois_weight(Algebra alg, int k, i64 ell, const std::vector<int>& lambda);

// ---- finite groups and quantum doubles -------------------------------------------

struct ConjugacyClass {
    int rep = 0;
    std::vector<int> elements;
    std::vector<int> centralizer;  ///< sorted element list of C_G(rep)
    /// characters[i][j] = χ_i(centralizer[j]).
    std::vector<std::vector<Cyclotomic>> characters;
};

struct GroupData {
    std::string name;
    std::vector<std::vector<int>> table;  ///< table[g][h] = g·h
    int identity = 0;
    std::vector<ConjugacyClass> classes;

    std::size_t order() const { return table.size(); }
    int mul(int g, int h) const { return table[g][h]; }
    int inv(int g) const;
    u64 exponent() const;
    u64 element_order(int g) const;
};

/// Group axioms, class partition, centralizers and exact character
/// orthogonality for every centralizer. Throws Errc::data_integrity.
void check_group_data(const GroupData& g);

/// Builds classes, centralizers and their characters from a multiplication
/// table. Centralizer characters come from linear characters plus at most one
/// nonlinear irreducible (enough for groups of order ≤ 8 and every abelian group).
GroupData group_from_table(std::string name, std::vector<std::vector<int>> table);
/// Same, but the characters of C_G(rep) are taken from `characters` for every
/// class representative listed there (rep = smallest element of its class).
GroupData group_from_table(std::string name, std::vector<std::vector<int>> table,
                           const std::map<int, std::vector<std::vector<Cyclotomic>>>& characters);

/// "z<n>" / "zn" with n, "s3", "d4", "q8".
GroupData builtin_group(const std::string& name, u64 n = 0);

/// Primaries (a, χ) for a ∈ R, χ ∈ Irr(C_G(a)); T = χ(a)/χ(e).
ModularData quantum_double_data(const GroupData& g);

/// The extracted Galois permutation equals (a,χ) ↦ (b a^ℓ b⁻¹, σ_ℓ χ^{b⁻¹})
/// and r_{σa} ≡ ℓ²·r_a (mod 1) holds.
bool double_galois_check(const GroupData& g, i64 ell);

}  // namespace rcft
