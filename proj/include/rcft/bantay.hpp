#pragma once

/**
 * @file bantay.hpp
 * @brief Indicators Z(a,b), their generalisations Z(a,b,d) and
 * Z_ℓ(a,b,d), Frobenius-Schur indicators and the fusion square root.
 *
 * Square roots of T entries: for odd N the exponent is multiplied by the
 * inverse of 2 mod N; for even N the principal branch e^{πi·r_a}, r_a ∈ [0,1).
 */

#include <optional>
#include <vector>

#include "rcft/moddata.hpp"

namespace rcft {

/// √(T_dd·conj(T_bb))·Σ_{x,y} N_xy^a S_bx S_dy T_yy² conj(T_xx)².
Cyclotomic z_general(const ModularData& md, const FusionTensor& fusion, std::size_t a, std::size_t b,
                     std::size_t d);
/// Z(a,b) = Z(a,b,0).
Cyclotomic z_indicator(const ModularData& md, const FusionTensor& fusion, std::size_t a, std::size_t b);
/// T^{1/ℓ}_dd·conj(T)^{1/ℓ}_bb·Σ_{x,y} N_xy^a S_bx S_dy T^ℓ_yy conj(T)^ℓ_xx.
Cyclotomic z_ell(const ModularData& md, const FusionTensor& fusion, i64 ell, std::size_t a, std::size_t b,
                 std::size_t d);

/// ε_{1/2}(0)·ε_{1/2}(b)·N_{a,σ0}^{σb} with σ = σ_{1/2}. Requires odd N.
long z_closed_form(const ModularData& md, const FusionTensor& fusion, std::size_t a, std::size_t b);

/// Z(a, 0); throws Errc::data_integrity unless it is 0 or ±1.
int fs_indicator(const ModularData& md, const FusionTensor& fusion, std::size_t a);

/// Odd N: no Frobenius-Schur indicator equals -1.
Verdict corollary6_check(const ModularData& md, const FusionTensor& fusion);

struct FusionSqrtResult {
    Verdict verdict = Verdict::not_applicable;
    std::size_t witness = 0;  ///< σ_{1/2}·0
};
/// Odd N: with a = σ_{1/2}·0, N_aa^b = 1 if b = Cb and 0 otherwise.
FusionSqrtResult fusion_sqrt_check(const ModularData& md, const FusionTensor& fusion);

struct IndicatorReport {
    std::vector<std::vector<Cyclotomic>> z;        ///< z[a][b] = Z(a,b)
    std::vector<std::vector<bool>> integral;       ///< Z(a,b) ∈ Z
    std::vector<int> fs;                           ///< Z(a,0)
    bool bound_holds = true;                       ///< |Z(a,b)| ≤ N_aa^b on integral entries
    bool parity_holds = true;                      ///< Z(a,b) ≡ N_aa^b (mod 2) on integral entries
    bool all_integral = true;
    std::optional<bool> closed_form_matches;       ///< odd N only
};
IndicatorReport indicator_report(const ModularData& md, const FusionTensor& fusion);

/// Integer value of z, if it is one.
std::optional<Integer> as_integer(const Cyclotomic& z);

}  // namespace rcft
