#pragma once

/**
 * @file moddata.hpp
 * @brief Modular data (S, T), its axioms, Verlinde fusion and commutants.
 *
 * T is kept as exponents: T_aa = e^{2πi·r_a} with r_a ∈ [0, 1). Fractional
 * powers T^x are then e^{2πi·x·r_a}, with x read modulo the order of T.
 */

#include <optional>
#include <string>
#include <vector>

#include "rcft/matrix.hpp"

namespace rcft {

struct ModularData {
    CMatrix S;
    std::vector<Rational> T;          ///< exponents r_a, reduced mod 1
    std::vector<std::string> labels;  ///< optional display names, empty or one per primary

    std::size_t size() const { return T.size(); }
    /// Order of the cyclotomic field holding S.
    u64 field_order() const { return S.order(); }
    std::string label(std::size_t a) const;
};

/// Checks shapes and reduces the exponents mod 1.
ModularData make_modular_data(CMatrix S, std::vector<Rational> T,
                              std::vector<std::string> labels = {});

/// Least N with N·r_a ∈ Z for every a.
u64 t_order(const ModularData& md);

/// Exponents x·r_a mod 1.
std::vector<Rational> scaled(const std::vector<Rational>& r, const Rational& x);
/// Exponents of T^k where k = p/q is read with 1/q the inverse of q mod N.
std::vector<Rational> t_power(const ModularData& md, i64 numerator, i64 denominator = 1);

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

struct ValidationReport {
    std::vector<AxiomResult> axioms;
    u64 t_order = 1;
    /// a ↦ Ca, empty when S² is not a permutation matrix.
    std::vector<std::size_t> conjugation;
    bool pass() const;
};

/// Symmetry, unitarity, C = S² a permutation with C² = I commuting with S
/// and T, and (ST)³ = I.
ValidationReport validate(const ModularData& md);

/// Fusion coefficients N_ab^c.
class FusionTensor {
public:
    explicit FusionTensor(std::size_t n) : n_(n), data_(n * n * n, 0) {}
    std::size_t size() const { return n_; }
    long operator()(std::size_t a, std::size_t b, std::size_t c) const {
        return data_[(a * n_ + b) * n_ + c];
    }
    long& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * n_ + b) * n_ + c]; }
    /// The matrix (N_a)_{bc} = N_ab^c.
    std::vector<std::vector<long>> matrix(std::size_t a) const;
    friend bool operator==(const FusionTensor&, const FusionTensor&) = default;

private:
    std::size_t n_;
    std::vector<long> data_;
};

/// Verlinde's formula N_ab^c = Σ_d S_ad S_bd conj(S_cd) / S_0d. Throws
/// Errc::zero_vacuum_row or Errc::non_integral_fusion.
FusionTensor verlinde(const ModularData& md);

/// Charge conjugation a ↦ Ca read off S² (throws Errc::data_integrity if S² is
/// not a permutation).
std::vector<std::size_t> charge_conjugation(const ModularData& md);

/// S_a0 / S_00.
std::vector<Cyclotomic> quantum_dimensions(const ModularData& md);

enum class Verdict { pass, fail, not_applicable };
const char* to_string(Verdict v);

struct CentralChargeCheck {
    Verdict verdict = Verdict::not_applicable;
    u64 t00_order = 1;  ///< order of the root of unity T_00
};
/// With rational quantum dimensions, the order of T_00 must divide 24.
CentralChargeCheck central_charge_integrality_check(const ModularData& md);

struct Prop3cResult {
    Verdict verdict = Verdict::fail;
    u64 K = 1;  ///< lcm of conductors of S_ab / S_0b
    u64 M = 1;  ///< lcm(K, order of T_bb)
    bool divides_24 = false;
    bool coprime = false;  ///< gcd(M/K, K) = 1
};
/// M/K divides 24 and is coprime to K.
Prop3cResult prop3c_check(const ModularData& md, std::size_t b);

/// Basis of {X : XS = SX, XT = TX}.
std::vector<CMatrix> commutant_basis(const ModularData& md);

struct IntegralCommutant {
    std::vector<CMatrix> basis;  ///< integer matrices
    Integer denominator = 1;     ///< common denominator cleared from the averaged basis
    std::size_t galois_group_order = 1;
};
/// Echelon basis M_a of the commutant (pivot entries δ_ab), averaged over
/// Gal(Q[ξ_F]/Q) and divided by the group order, then scaled by one common
/// denominator. Throws Errc::galois_closure if some σ(M_a) leaves the commutant.
IntegralCommutant integral_commutant_basis(const ModularData& md);

/// True iff X commutes with S and with T.
bool commutes_with_st(const ModularData& md, const CMatrix& X);

}  // namespace rcft
