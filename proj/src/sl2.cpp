#include "rcft/sl2.hpp"

#include <unordered_set>

#include "rcft/error.hpp"

namespace rcft {

std::optional<SL2> checked_mul(const SL2& x, const SL2& y) {
    auto dot = [](i64 p, i64 q, i64 r, i64 s, i64& out) {
        i64 u, v;
        return !__builtin_mul_overflow(p, q, &u) && !__builtin_mul_overflow(r, s, &v) &&
               !__builtin_add_overflow(u, v, &out);
    };
    SL2 m;
    if (dot(x.a, y.a, x.b, y.c, m.a) && dot(x.a, y.b, x.b, y.d, m.b) && dot(x.c, y.a, x.d, y.c, m.c) &&
        dot(x.c, y.b, x.d, y.d, m.d))
        return m;
    return std::nullopt;
}

SL2 operator*(const SL2& x, const SL2& y) {
    auto m = checked_mul(x, y);
    if (!m) throw Error(Errc::precondition, "SL2 product overflows 64-bit integers");
    return *m;
}

SL2 inverse(const SL2& m) { return {m.d, -m.b, -m.c, m.a}; }

SL2 reduce_mod(const SL2& m, u64 N) {
    const i64 n = static_cast<i64>(N);
    return {mod(m.a, n), mod(m.b, n), mod(m.c, n), mod(m.d, n)};
}

std::string to_string(const SL2& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
           std::to_string(m.d) + "]]";
}

GeneratorWord word_inverse(const GeneratorWord& w) {
    GeneratorWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (it->kind) {
            case Token::s: out.push_back({Token::s_inv, 1}); break;
            case Token::s_inv: out.push_back({Token::s, 1}); break;
            case Token::t: out.push_back({Token::t, -it->power}); break;
        }
    }
    return out;
}

GeneratorWord word_concat(const GeneratorWord& x, const GeneratorWord& y) {
    GeneratorWord out;
    auto push = [&out](const Token& tok) {
        if (tok.kind == Token::t) {
            if (tok.power == 0) return;
            if (!out.empty() && out.back().kind == Token::t) {
                out.back().power += tok.power;
                if (out.back().power == 0) out.pop_back();
                return;
            }
        }
        out.push_back(tok);
    };
    for (const auto& tok : x) push(tok);
    for (const auto& tok : y) push(tok);
    return out;
}

std::string to_string(const GeneratorWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& tok : w) {
        if (!out.empty()) out += " ";
        switch (tok.kind) {
            case Token::s: out += "s"; break;
            case Token::s_inv: out += "s^-1"; break;
            case Token::t: out += tok.power == 1 ? "t" : "t^" + std::to_string(tok.power); break;
        }
    }
    return out;
}

SL2 evaluate(const GeneratorWord& w) {
    SL2 m;
    for (const auto& tok : w) {
        switch (tok.kind) {
            case Token::s: m = m * SL2::s(); break;
            case Token::s_inv: m = m * inverse(SL2::s()); break;
            case Token::t: m = m * SL2::t(tok.power); break;
        }
    }
    return m;
}

GeneratorWord sl2_word(const SL2& m) {
    if (m.det() != 1) throw Error(Errc::precondition, "matrix " + to_string(m) + " does not have determinant 1");
    // Right-multiply by t^{-q} and s until the bottom-left entry vanishes:
    // m·W = ±t^x, so m = ±t^x·W⁻¹.
    SL2 A = m;
    GeneratorWord W;
    while (A.c != 0) {
        // Nearest-integer quotient, so |d - q·c| ≤ |c|/2.
        i64 q = A.d / A.c;
        const i64 r = A.d - q * A.c;
        const i64 ar = r < 0 ? -r : r, ac = A.c < 0 ? -A.c : A.c;
        if (ar > ac - ar) q += ((r < 0) == (A.c < 0)) ? 1 : -1;
        A = A * SL2::t(-q);
        W = word_concat(W, {{Token::t, -q}});
        A = A * SL2::s();
        W.push_back({Token::s, 1});
    }
    GeneratorWord head;
    if (A.a == -1) head = {{Token::s, 1}, {Token::s, 1}};
    head = word_concat(head, {{Token::t, A.b * A.a}});
    return word_concat(head, word_inverse(W));
}

SL2 h_lift(i64 ell, u64 N) {
    const i64 n = static_cast<i64>(N);
    const i64 l = mod(ell, n);
    if (N > 1 && !coprime(l, n))
        throw Error(Errc::not_coprime, std::to_string(ell) + " is not coprime to " + std::to_string(N));
    if (N == 1 || l == 1) return {};
    // ℓu + N²w = 1 gives [[ℓ, -Nw], [N, u]] ≡ diag(ℓ, ℓ⁻¹) (mod N).
    const auto [g, u, w] = extended_gcd(l, n * n);
    (void)g;
    return {l, -n * w, n, u};
}

u64 sl2_group_order(u64 N, u64 cap) {
    if (N == 0) throw Error(Errc::precondition, "N must be positive");
    if (N == 1) return 1;
    const i64 n = static_cast<i64>(N);
    auto encode = [N](const SL2& m) {
        return ((static_cast<u64>(m.a) * N + static_cast<u64>(m.b)) * N + static_cast<u64>(m.c)) * N +
               static_cast<u64>(m.d);
    };
    auto step = [n](const SL2& x, const SL2& g) {
        return SL2{mod(x.a * g.a + x.b * g.c, n), mod(x.a * g.b + x.b * g.d, n),
                   mod(x.c * g.a + x.d * g.c, n), mod(x.c * g.b + x.d * g.d, n)};
    };
    const SL2 gens[2] = {reduce_mod(SL2::s(), N), reduce_mod(SL2::t(), N)};
    std::unordered_set<u64> seen;
    std::vector<SL2> frontier{SL2{}};
    seen.insert(encode(SL2{}));
    while (!frontier.empty()) {
        std::vector<SL2> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                SL2 y = step(x, g);
                if (seen.insert(encode(y)).second) {
                    if (seen.size() > cap)
                        throw Error(Errc::cap_exceeded, "SL2(Z/" + std::to_string(N) + ") exceeds " +
                                                            std::to_string(cap) + " elements");
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

u64 sl2_order_formula(u64 N) {
    u64 order = N * N * N;
    for (auto [p, e] : factorize(N)) order = order / (p * p) * (p * p - 1);
    return order;
}

}  // namespace rcft
