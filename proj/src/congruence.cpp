#include "rcft/congruence.hpp"

#include <random>

#include "rcft/error.hpp"

namespace rcft {

const char* to_string(Branch b) {
    switch (b) {
        case Branch::coprime_p2: return "coprime-p2";
        case Branch::coprime_p3: return "coprime-p3";
        case Branch::composite: return "composite";
    }
    return "?";
}

void split_level(u64 N, u64& e, u64& m, u64& d) {
    e = 0;
    m = N;
    while (m % 2 == 0) {
        m /= 2;
        ++e;
    }
    const u64 pow2 = N / m;
    d = 0;
    while (d % pow2 != 1 % pow2) d += m;
}

bool g_twists_t(const ModularData& md, const GaloisSymmetry& gs, i64 k) {
    const CMatrix G = g_matrix(gs);
    return diag_right(G, md.T) == diag_left(scaled(md.T, Rational(static_cast<long>(k))), G);
}

CongruenceReport theorem2_test(const ModularData& md) {
    CongruenceReport r;
    r.N = t_order(md);
    split_level(r.N, r.e, r.m, r.d);
    const i64 N = static_cast<i64>(r.N);
    auto twist = [&](std::string name, i64 ell, i64 power) {
        const GaloisSymmetry gs = galois_for_t_index(md, ell);
        r.conditions.push_back({std::move(name), g_twists_t(md, gs, power)});
    };
    if (r.N % 2 == 1) {
        r.branch = Branch::coprime_p2;
        twist("G_2 T = T^4 G_2", 2, 4);
    } else if (r.N % 3 != 0) {
        r.branch = Branch::coprime_p3;
        twist("G_3 T = T^9 G_3", 3, 9);
    } else {
        r.branch = Branch::composite;
        const i64 d = static_cast<i64>(r.d);
        const CMatrix& S = md.S;
        const CMatrix V = diag_right(S, scaled(md.T, Rational(static_cast<long>(r.m)))) * S.conj_transpose();
        const auto t2e = scaled(md.T, Rational(static_cast<long>(u64{1} << r.e)));
        r.conditions.push_back({"(i) T^(2^e) commutes with S T^m S^-1", diag_left(t2e, V) == diag_right(V, t2e)});
        twist("(ii) G_(2d-1) T = T G_(2d-1)", mod(2 * d - 1, N), 1);
        twist("(iii) G_(2-d) T = T^(4-3d) G_(2-d)", mod(2 - d, N), mod(4 - 3 * d, N));
        twist("(iv) G_(1+2d) T = T^(1+8d) G_(1+2d)", mod(1 + 2 * d, N), mod(1 + 8 * d, N));
    }
    r.pass = std::all_of(r.conditions.begin(), r.conditions.end(), [](const auto& c) { return c.pass; });
    return r;
}

UMatrixReport u_matrix(const ModularData& md) {
    UMatrixReport r;
    u64 d;
    split_level(t_order(md), r.e, r.m, d);
    if (r.e == 0) throw Error(Errc::precondition, "U-matrix needs an even T-order");
    const CMatrix& S = md.S;
    r.U = diag_right(S, scaled(md.T, Rational(static_cast<long>(r.m)))) * S.conj_transpose();
    const auto t2e = scaled(md.T, Rational(static_cast<long>(u64{1} << r.e)));
    r.zero_pattern = true;
    for (std::size_t a = 0; a < md.size() && r.zero_pattern; ++a)
        for (std::size_t c = 0; c < md.size(); ++c)
            if (t2e[a] != t2e[c] && !r.U(a, c).is_zero()) {
                r.zero_pattern = false;
                r.witness = std::pair{a, c};
                break;
            }
    r.symmetric = r.U.is_symmetric();
    r.unitary = (r.U * r.U.conj_transpose()).is_identity();
    r.order_divides = power(r.U, u64{1} << r.e).is_identity();
    return r;
}

bool theorem4_applies(const ModularData& md) { return t_order(md) % 2 == 1; }

int two_ness(const Rational& r) {
    if (r == 0) throw Error(Errc::precondition, "two-ness of zero");
    return static_cast<int>(mpz_scan1(r.get_num_mpz_t(), 0)) -
           static_cast<int>(mpz_scan1(r.get_den_mpz_t(), 0));
}

bool odd_order_criterion(const Rational& c, const std::vector<Rational>& h) {
    if (c != 0 && two_ness(c) < 3) return false;
    return std::all_of(h.begin(), h.end(), [](const Rational& x) { return x == 0 || two_ness(x) >= 0; });
}

CMatrix rho_word(const ModularData& md, const GeneratorWord& w) {
    const u64 W = lcm(md.field_order(), t_order(md));
    CMatrix X = CMatrix::identity(md.size()).at_order(W);
    const CMatrix S = md.S.at_order(W);
    const CMatrix S_inv = S.conj_transpose();
    for (const auto& tok : w) {
        switch (tok.kind) {
            case Token::s: X = X * S; break;
            case Token::s_inv: X = X * S_inv; break;
            case Token::t: X = diag_right(X, scaled(md.T, Rational(static_cast<long>(tok.power)))); break;
        }
    }
    return X;
}

CMatrix rho_eval(const ModularData& md, const SL2& m) { return rho_word(md, sl2_word(m)); }

bool rho_h_check(const ModularData& md, i64 ell) {
    const u64 N = t_order(md);
    return rho_eval(md, h_lift(ell, N)) == g_matrix(galois_for_t_index(md, ell));
}

GammaSampleResult gamma_n_sample(const ModularData& md, std::size_t trials, u64 seed,
                                 std::size_t max_factors) {
    GammaSampleResult out;
    const i64 N = static_cast<i64>(t_order(md));
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };

    auto short_word = [&] {
        GeneratorWord w;
        const i64 len = uniform(1, 4);
        for (i64 i = 0; i < len; ++i) {
            if (uniform(0, 1) == 0)
                w.push_back({Token::s, 1});
            else
                w = word_concat(w, {{Token::t, uniform(-3, 3)}});
        }
        return evaluate(w);
    };
    // [[1+Nx, N b'], [Nz, 1 + N d']] with gcd(1+Nx, z) = 1.
    auto generic_element = [&]() -> SL2 {
        for (;;) {
            const i64 x = uniform(-2, 2), z = uniform(-2, 2);
            const i64 a = 1 + N * x, c = N * z;
            if (z == 0) return SL2{1, N * uniform(-2, 2), 0, 1};
            const auto [g, u, v] = extended_gcd(a, c);
            if (g != 1) continue;
            return SL2{a, N * x * v, c, 1 - N * x * u};
        }
    };
    auto factor = [&]() -> SL2 {
        const i64 sign = uniform(0, 1) ? 1 : -1;
        switch (uniform(0, 3)) {
            case 0: return SL2::t(sign * N);
            case 1: return SL2{1, 0, sign * N, 1};
            case 2: {
                const SL2 g = short_word();
                return g * SL2::t(sign * N) * inverse(g);
            }
            default: return generic_element();
        }
    };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        SL2 product;
        const auto count = static_cast<std::size_t>(uniform(1, static_cast<i64>(std::max<std::size_t>(1, max_factors))));
        for (std::size_t i = 0; i < count; ++i) {
            auto next = checked_mul(product, factor());
            if (!next) break;
            product = *next;
        }
        ++out.trials;
        const GeneratorWord w = sl2_word(product);
        if (reduce_mod(product, static_cast<u64>(N)) != reduce_mod(SL2{}, static_cast<u64>(N)) ||
            !rho_word(md, w).is_identity()) {
            out.pass = false;
            out.witness = to_string(product) + " = " + to_string(w);
            break;
        }
    }
    return out;
}

Variant parse_variant(const std::string& name) {
    if (name == "a-p2") return Variant::a_p2;
    if (name == "a-p3") return Variant::a_p3;
    if (name == "b-p5") return Variant::b_p5;
    if (name == "b-p7") return Variant::b_p7;
    if (name == "c") return Variant::c;
    if (name == "all-units") return Variant::all_units;
    throw Error(Errc::precondition, "unknown variant '" + name + "'");
}

const char* to_string(Variant v) {
    switch (v) {
        case Variant::a_p2: return "a-p2";
        case Variant::a_p3: return "a-p3";
        case Variant::b_p5: return "b-p5";
        case Variant::b_p7: return "b-p7";
        case Variant::c: return "c";
        case Variant::all_units: return "all-units";
    }
    return "?";
}

namespace {

struct Relation {
    std::string name;
    GeneratorWord lhs, rhs;
};

GeneratorWord W(std::initializer_list<GeneratorWord> parts) {
    GeneratorWord out;
    for (const auto& p : parts) out = word_concat(out, p);
    return out;
}

const GeneratorWord s_{{Token::s, 1}};
const GeneratorWord s_inv_{{Token::s_inv, 1}};
GeneratorWord t_(i64 k) { return k == 0 ? GeneratorWord{} : GeneratorWord{{Token::t, k}}; }
GeneratorWord pow_(const GeneratorWord& w, int k) {
    GeneratorWord out;
    for (int i = 0; i < k; ++i) out = word_concat(out, w);
    return out;
}

i64 inv_mod(i64 x, i64 N, const std::string& what) {
    if (N == 1) return 0;
    if (!coprime(mod(x, N), N))
        throw Error(Errc::precondition, what + " = " + std::to_string(x) + " is not invertible mod " +
                                            std::to_string(N));
    return mod_inverse(x, N);
}

/// g = s t^{1/a} s t^a s t^{1/a}.
GeneratorWord g_word(i64 a, i64 N) {
    const i64 ia = inv_mod(a, N, "a");
    return W({s_, t_(ia), s_, t_(a), s_, t_(ia)});
}

std::vector<Relation> base_relations(i64 N) {
    return {{"t^N = 1", t_(N), {}},
            {"s^4 = 1", pow_(s_, 4), {}},
            {"(s t^-1)^3 = s^2", pow_(W({s_, t_(-1)}), 3), pow_(s_, 2)}};
}

void add_g_relations(std::vector<Relation>& rels, const std::string& g_name, const GeneratorWord& g,
                     i64 twist) {
    rels.push_back({g_name + " s = s " + g_name + "^-1", W({g, s_}), W({s_, word_inverse(g)})});
    rels.push_back({g_name + " t = t^" + std::to_string(twist) + " " + g_name, W({g, t_(1)}),
                    W({t_(twist), g})});
}

std::vector<Relation> relations_for(u64 level, Variant v) {
    const i64 N = static_cast<i64>(level);
    auto rels = base_relations(N);
    auto need_coprime = [&](i64 p) {
        if (std::gcd(N, p) != 1)
            throw Error(Errc::precondition, std::string("variant ") + to_string(v) + " needs N coprime to " +
                                                std::to_string(p));
    };
    switch (v) {
        case Variant::a_p2:
        case Variant::a_p3: {
            const i64 p = v == Variant::a_p2 ? 2 : 3;
            need_coprime(p);
            add_g_relations(rels, "g", g_word(p, N), p * p);
            break;
        }
        case Variant::b_p5:
        case Variant::b_p7: {
            const i64 p = v == Variant::b_p5 ? 5 : 7;
            need_coprime(p);
            const GeneratorWord g = g_word(p, N);
            add_g_relations(rels, "g", g, p * p);
            const i64 ip = inv_mod(p, N, "p");
            const GeneratorWord alt =
                W({t_(p * (p - 1) / 2), s_, t_(-2 * ip), s_, t_(-(p - 1) / 2), s_, t_(2), s_});
            rels.push_back({"g = t^(p(p-1)/2) s t^(-2/p) s t^(-(p-1)/2) s t^2 s", g, alt});
            break;
        }
        case Variant::c: {
            u64 e, m, d;
            split_level(level, e, m, d);
            const i64 dd = static_cast<i64>(d), mm = static_cast<i64>(m);
            const i64 d2 = inv_mod(2 - dd, N, "2-d"), d3 = inv_mod(2 * dd + 1, N, "2d+1");
            const GeneratorWord g_star = pow_(W({s_, t_(1 - 2 * dd)}), 3);
            const GeneratorWord g2 = W({s_, t_(d2), s_, t_(2 - dd), s_, t_(d2)});
            const GeneratorWord g3 = W({s_, t_(d3), s_, t_(2 * dd + 1), s_, t_(d3)});
            const GeneratorWord u = W({s_, t_(mm), s_inv_});
            const i64 p2 = i64{1} << e;
            rels.push_back({"[t^(2^e), s t^m s^-1] = 1", W({t_(p2), u}), W({u, t_(p2)})});
            rels.push_back({"[g*, t] = 1", W({g_star, t_(1)}), W({t_(1), g_star})});
            rels.push_back({"g* s = s g*^-1", W({g_star, s_}), W({s_, word_inverse(g_star)})});
            add_g_relations(rels, "g2", g2, 4 - 3 * dd);
            add_g_relations(rels, "g3", g3, 8 * dd + 1);
            break;
        }
        case Variant::all_units: {
            std::vector<i64> units;
            for (i64 a = 1; a <= std::max<i64>(N, 1); ++a)
                if (std::gcd(a, N) == 1) units.push_back(a % std::max<i64>(N, 1));
            for (i64 a : units) add_g_relations(rels, "g_" + std::to_string(a), g_word(a, N), a * a);
            for (std::size_t i = 0; i < units.size(); ++i)
                for (std::size_t j = i + 1; j < units.size(); ++j) {
                    const auto ga = g_word(units[i], N), gb = g_word(units[j], N);
                    rels.push_back({"[g_" + std::to_string(units[i]) + ", g_" + std::to_string(units[j]) + "] = 1",
                                    W({ga, gb}), W({gb, ga})});
                }
            break;
        }
    }
    return rels;
}

}  // namespace

std::vector<RelationResult> lemma1_relations(const ModularData& md, Variant v) {
    std::vector<RelationResult> out;
    for (const auto& rel : relations_for(t_order(md), v))
        out.push_back({rel.name, rho_word(md, rel.lhs) == rho_word(md, rel.rhs)});
    return out;
}

std::vector<RelationResult> lemma1_relations(u64 N, Variant v) {
    if (N == 0) throw Error(Errc::precondition, "N must be positive");
    auto eval_mod = [N](const GeneratorWord& w) {
        const i64 n = static_cast<i64>(N);
        SL2 m;
        for (const auto& tok : w) {
            SL2 g = tok.kind == Token::s ? SL2::s()
                    : tok.kind == Token::s_inv ? inverse(SL2::s())
                                               : SL2::t(mod(tok.power, n));
            m = reduce_mod(m * reduce_mod(g, N), N);
        }
        return reduce_mod(m, N);
    };
    std::vector<RelationResult> out;
    for (const auto& rel : relations_for(N, v)) out.push_back({rel.name, eval_mod(rel.lhs) == eval_mod(rel.rhs)});
    return out;
}

}  // namespace rcft
