#pragma once

/**
 * @file sl2.hpp
 * @brief SL2(Z) matrices, words in s = [[0,1],[-1,0]] and t = [[1,1],[0,1]],
 * and the finite groups SL2(Z/N).
 */

#include <optional>
#include <string>
#include <vector>

#include "rcft/numtheory.hpp"

namespace rcft {

/// Integer 2x2 matrix [[a, b], [c, d]].
struct SL2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    i64 det() const { return a * d - b * c; }
    friend bool operator==(const SL2&, const SL2&) = default;
    static SL2 s() { return {0, 1, -1, 0}; }
    static SL2 t(i64 k = 1) { return {1, k, 0, 1}; }
};

/// Product with overflow detection; nothing on overflow.
std::optional<SL2> checked_mul(const SL2& x, const SL2& y);
SL2 operator*(const SL2& x, const SL2& y);  // throws on overflow
SL2 inverse(const SL2& m);                  // det must be 1
SL2 reduce_mod(const SL2& m, u64 N);        // entries in [0, N)
std::string to_string(const SL2& m);

struct Token {
    enum Kind { s, s_inv, t } kind = s;
    i64 power = 1;  ///< exponent of t (ignored for s, s_inv)
    friend bool operator==(const Token&, const Token&) = default;
};
using GeneratorWord = std::vector<Token>;

GeneratorWord word_inverse(const GeneratorWord& w);
/// Concatenation, merging adjacent t powers and dropping t^0.
GeneratorWord word_concat(const GeneratorWord& x, const GeneratorWord& y);
std::string to_string(const GeneratorWord& w);
SL2 evaluate(const GeneratorWord& w);

/// Word whose product is m, by Euclid on the bottom row. Requires det m = 1.
GeneratorWord sl2_word(const SL2& m);

/// Integer matrix of determinant 1 congruent mod N to diag(ℓ, ℓ⁻¹).
SL2 h_lift(i64 ell, u64 N);

/// Size of the group generated by s and t in SL2(Z/N), by breadth-first
/// closure. Throws Errc::cap_exceeded past `cap` elements.
u64 sl2_group_order(u64 N, u64 cap = 10'000'000);
/// N³·Π_{p|N}(1 - p⁻²).
u64 sl2_order_formula(u64 N);

}  // namespace rcft
