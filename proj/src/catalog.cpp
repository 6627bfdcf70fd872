#include "rcft/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "rcft/error.hpp"

namespace rcft {

namespace {

Cyclotomic xi(u64 M, i64 k) { return Cyclotomic::root_of_unity(M, k); }

}  // namespace

// ---- lattice --------------------------------------------------------------------

ModularData lattice_data(u64 n) {
    if (n < 2 || n % 2 != 0)
        throw Error(Errc::precondition, "lattice data needs an even n >= 2, got " + std::to_string(n));
    const Cyclotomic inv_sqrt = Cyclotomic::sqrt(make_rational(1, static_cast<long>(n)));
    const u64 M = lcm(inv_sqrt.order(), n);
    CMatrix S(n, n);
    std::vector<Rational> T(n);
    for (u64 a = 0; a < n; ++a) {
        for (u64 b = 0; b < n; ++b) S(a, b) = (inv_sqrt * xi(n, static_cast<i64>((a * b) % n))).at_order(M);
        T[a] = make_rational(static_cast<long>(a * a), static_cast<long>(2 * n)) - Rational(1, 24);
    }
    return make_modular_data(std::move(S), std::move(T));
}

Cyclotomic gauss_sum(i64 a, i64 b, i64 c) {
    if (c == 0) throw Error(Errc::precondition, "Gauss sum with c = 0");
    const i64 M = 2 * std::abs(c);
    const i64 sign = c > 0 ? 1 : -1;
    std::vector<Cyclotomic::Term> terms;
    for (i64 k = 0; k < std::abs(c); ++k)
        terms.push_back({Rational(1), mod(sign * (mod(a, M) * mod(k * k, M) + mod(b, M) * k), M)});
    return Cyclotomic::from_terms(static_cast<u64>(M), terms);
}

ReciprocityResult gauss_reciprocity_check(i64 a, i64 b, i64 c, long double tol) {
    if (a == 0 || c == 0) throw Error(Errc::precondition, "reciprocity needs ac != 0");
    if (mod(a * c + b, 2) != 0) throw Error(Errc::precondition, "reciprocity needs ac + b even");
    const Cyclotomic lhs = gauss_sum(a, b, c);
    const Cyclotomic rhs_sum = gauss_sum(-c, -b, a);
    using ld = long double;
    const ld ac = static_cast<ld>(a) * static_cast<ld>(c);
    const ld phase = std::numbers::pi_v<ld> * ((ac > 0 ? 1 : -1) - static_cast<ld>(b * b) / ac) / 4;
    const std::complex<ld> rhs = std::sqrt(std::abs(static_cast<ld>(c) / static_cast<ld>(a))) *
                                 std::polar<ld>(1, phase) * embed_complex(rhs_sum);
    const std::complex<ld> left = embed_complex(lhs);
    ReciprocityResult out;
    out.error = std::abs(left - rhs);
    const Rational ratio = abs(make_rational(c, a));
    out.exact_modulus = lhs * lhs.conj() == Cyclotomic(ratio) * rhs_sum * rhs_sum.conj();
    out.pass = out.exact_modulus && out.error < tol * std::max<ld>(1, std::abs(left));
    return out;
}

// ---- affine -----------------------------------------------------------------------

namespace {

using Mat2 = std::array<int, 4>;  // row-major, acting on Dynkin label columns

std::array<int, 2> apply(const Mat2& m, std::array<int, 2> v) {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

Mat2 compose(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

struct WeylElement {
    Mat2 m;
    int det;
};

// W(A2) generated by s1: v ↦ (-v1, v1+v2) and s2: v ↦ (v1+v2, -v2).
const std::vector<WeylElement>& weyl_a2() {
    static const std::vector<WeylElement> group = [] {
        const Mat2 s1{-1, 0, 1, 1}, s2{1, 1, 0, -1};
        std::vector<WeylElement> out{{{1, 0, 0, 1}, 1}};
        for (std::size_t i = 0; i < out.size(); ++i)
            for (const Mat2& s : {s1, s2}) {
                Mat2 w = compose(s, out[i].m);
                if (std::none_of(out.begin(), out.end(), [&](const WeylElement& e) { return e.m == w; }))
                    out.push_back({w, -out[i].det});
            }
        return out;
    }();
    return group;
}

/// 3·(x, y) for Dynkin-label vectors of A2.
int ip3(std::array<int, 2> x, std::array<int, 2> y) {
    return 2 * x[0] * y[0] + x[0] * y[1] + x[1] * y[0] + 2 * x[1] * y[1];
}

}  // namespace

Algebra parse_algebra(const std::string& name) {
    if (name == "a1" || name == "A1") return Algebra::A1;
    if (name == "a2" || name == "A2") return Algebra::A2;
    throw Error(Errc::precondition, "unknown algebra '" + name + "' (expected a1 or a2)");
}

int dual_coxeter(Algebra alg) { return alg == Algebra::A1 ? 2 : 3; }

std::vector<std::vector<int>> affine_weights(Algebra alg, int k) {
    if (k < 1) throw Error(Errc::precondition, "level must be positive");
    std::vector<std::vector<int>> out;
    if (alg == Algebra::A1) {
        for (int l = 0; l <= k; ++l) out.push_back({l});
    } else {
        for (int l1 = 0; l1 <= k; ++l1)
            for (int l2 = 0; l1 + l2 <= k; ++l2) out.push_back({l1, l2});
    }
    return out;
}

std::string affine_label(Algebra, int k, const std::vector<int>& lambda) {
    std::string s = "(" + std::to_string(k - std::accumulate(lambda.begin(), lambda.end(), 0));
    for (int v : lambda) s += "," + std::to_string(v);
    return s + ")";
}

ModularData affine_data(Algebra alg, int k) {
    const auto weights = affine_weights(alg, k);
    const std::size_t n = weights.size();
    const long K = k + dual_coxeter(alg);
    CMatrix S(n, n);
    std::vector<Rational> T(n);
    std::vector<std::string> labels;
    if (alg == Algebra::A1) {
        // √(2/K)·sin(π x/K) = √(2/K)·(-i/2)·(ξ_{2K}^x - ξ_{2K}^{-x}).
        const Cyclotomic pref = Cyclotomic::sqrt(make_rational(2, K)) * xi(4, 3) * Cyclotomic(Rational(1, 2));
        const u64 M = lcm(pref.order(), static_cast<u64>(2 * K));
        for (std::size_t a = 0; a < n; ++a) {
            const long la = weights[a][0] + 1;
            for (std::size_t b = 0; b < n; ++b) {
                const long x = la * (weights[b][0] + 1);
                S(a, b) = (pref * (xi(2 * K, x) - xi(2 * K, -x))).at_order(M);
            }
            T[a] = make_rational(la * la, 4 * K) - Rational(1, 8);
        }
    } else {
        // (i/(√3 K))·Σ_w det(w) e^{2πi (w(λ+ρ), μ+ρ)/K}, with i/√3 = (ξ_3 - ξ_3²)/3.
        const Cyclotomic pref = (xi(3, 1) - xi(3, 2)) * Cyclotomic(make_rational(1, 3 * K));
        const u64 M = static_cast<u64>(3 * K);
        for (std::size_t a = 0; a < n; ++a) {
            const std::array<int, 2> la{weights[a][0] + 1, weights[a][1] + 1};
            for (std::size_t b = 0; b < n; ++b) {
                const std::array<int, 2> mb{weights[b][0] + 1, weights[b][1] + 1};
                std::vector<Cyclotomic::Term> terms;
                for (const auto& w : weyl_a2())
                    terms.push_back({Rational(w.det), ip3(apply(w.m, la), mb)});
                S(a, b) = (pref * Cyclotomic::from_terms(M, terms)).at_order(M);
            }
            T[a] = make_rational(ip3(la, la), 6 * K) - Rational(1, 3);
        }
    }
    for (const auto& w : weights) labels.push_back(affine_label(alg, k, w));
    return make_modular_data(std::move(S), std::move(T), std::move(labels));
}

Rational affine_central_charge(Algebra alg, int k) {
    const long dim = alg == Algebra::A1 ? 3 : 8;
    return make_rational(k * dim, k + dual_coxeter(alg));
}

Rational affine_conformal_weight(Algebra alg, int k, const std::vector<int>& lambda) {
    const long K = k + dual_coxeter(alg);
    if (alg == Algebra::A1) return make_rational(lambda.at(0) * (lambda.at(0) + 2), 4 * K);
    const std::array<int, 2> l{lambda.at(0), lambda.at(1)}, l2r{lambda[0] + 2, lambda[1] + 2};
    return make_rational(ip3(l, l2r), 6 * K);
}

AffineGaloisWeight affine_galois_weight(Algebra alg, int k, i64 ell, const std::vector<int>& lambda) {
    const i64 K = k + dual_coxeter(alg);
    auto wall = [&] {
        return Error(Errc::not_coprime, "ell = " + std::to_string(ell) +
                                            " sends the weight onto an alcove wall");
    };
    AffineGaloisWeight out;
    if (alg == Algebra::A1) {
        i64 v = mod(ell * (lambda.at(0) + 1), 2 * K);
        if (v == 0 || v == K) throw wall();
        if (v > K) {
            v = 2 * K - v;
            out.sign = -1;
        }
        out.weight = {static_cast<int>(v - 1)};
        return out;
    }
    i64 v1 = ell * (lambda.at(0) + 1), v2 = ell * (lambda.at(1) + 1);
    for (;;) {
        if (v1 < 0) {
            v2 += v1;
            v1 = -v1;
        } else if (v2 < 0) {
            v1 += v2;
            v2 = -v2;
        } else if (v1 + v2 > K) {
            const i64 excess = v1 + v2 - K;
            v1 -= excess;
            v2 -= excess;
        } else {
            break;
        }
        out.sign = -out.sign;
    }
    if (v1 == 0 || v2 == 0 || v1 + v2 == K) throw wall();
    out.weight = {static_cast<int>(v1 - 1), static_cast<int>(v2 - 1)};
    return out;
}

// ---- groups -------------------------------------------------------------------------

int GroupData::inv(int g) const {
    for (int h = 0; h < static_cast<int>(order()); ++h)
        if (table[g][h] == identity) return h;
    throw Error(Errc::data_integrity, "element " + std::to_string(g) + " has no inverse");
}

u64 GroupData::element_order(int g) const {
    u64 k = 1;
    for (int x = g; x != identity; x = table[x][g]) {
        ++k;
        if (k > order()) throw Error(Errc::data_integrity, "element of infinite order");
    }
    return k;
}

u64 GroupData::exponent() const {
    u64 e = 1;
    for (int g = 0; g < static_cast<int>(order()); ++g) e = lcm(e, element_order(g));
    return e;
}

namespace {

std::vector<int> centralizer_of(const std::vector<std::vector<int>>& table, int a) {
    std::vector<int> out;
    for (int h = 0; h < static_cast<int>(table.size()); ++h)
        if (table[a][h] == table[h][a]) out.push_back(h);
    return out;
}

int find_identity(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) return e;
    }
    throw Error(Errc::data_integrity, "multiplication table has no identity");
}

/// Irreducible characters of the subgroup H (sorted element list).
std::vector<std::vector<Cyclotomic>> subgroup_characters(const GroupData& g, const std::vector<int>& H) {
    const std::size_t h = H.size();
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < h; ++i) pos[H[i]] = i;
    u64 E = 1;
    for (int x : H) E = lcm(E, g.element_order(x));

    // Greedy generating set.
    std::vector<int> gens;
    std::set<int> span{g.identity};
    for (int x : H) {
        if (span.count(x)) continue;
        gens.push_back(x);
        std::vector<int> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int y : frontier)
                for (int s : gens) {
                    int z = g.mul(y, s);
                    if (span.insert(z).second) next.push_back(z);
                }
            frontier = std::move(next);
        }
    }

    // Linear characters: every assignment of E-th roots to generators that
    // extends consistently along the Cayley graph.
    std::vector<std::vector<u64>> linear;
    std::vector<u64> images(gens.size(), 0);
    for (;;) {
        std::vector<i64> value(h, -1);
        value[pos[g.identity]] = 0;
        std::vector<int> frontier{g.identity};
        bool ok = true;
        while (!frontier.empty() && ok) {
            std::vector<int> next;
            for (int y : frontier)
                for (std::size_t s = 0; s < gens.size() && ok; ++s) {
                    const int z = g.mul(y, gens[s]);
                    const i64 v = static_cast<i64>((value[pos[y]] + images[s]) % E);
                    i64& slot = value[pos[z]];
                    if (slot < 0) {
                        slot = v;
                        next.push_back(z);
                    } else if (slot != v) {
                        ok = false;
                    }
                }
            frontier = std::move(next);
        }
        if (ok) linear.emplace_back(value.begin(), value.end());
        std::size_t i = 0;
        while (i < images.size() && ++images[i] == E) images[i++] = 0;
        if (i == images.size()) break;
    }

    std::vector<std::vector<Cyclotomic>> chars;
    for (const auto& lam : linear) {
        std::vector<Cyclotomic> row;
        for (u64 v : lam) row.push_back(Cyclotomic::xi_power(E, static_cast<i64>(v)));
        chars.push_back(std::move(row));
    }
    if (linear.size() == h) return chars;

    // Exactly one nonlinear irreducible of degree d, read off column orthogonality.
    const long rest = static_cast<long>(h - linear.size());
    const long d = std::lround(std::sqrt(static_cast<double>(rest)));
    if (d * d != rest)
        throw Error(Errc::data_integrity, "centralizer of order " + std::to_string(h) +
                                              " needs more than one nonlinear character");
    std::vector<Cyclotomic> chi(h);
    for (std::size_t i = 0; i < h; ++i) {
        if (H[i] == g.identity) {
            chi[i] = Cyclotomic(d);
            continue;
        }
        Cyclotomic sum;
        for (const auto& row : chars) sum += row[i];
        chi[i] = -sum * Cyclotomic(make_rational(1, d));
    }
    chars.push_back(std::move(chi));
    return chars;
}

}  // namespace

GroupData group_from_table(std::string name, std::vector<std::vector<int>> table) {
    return group_from_table(std::move(name), std::move(table), {});
}

GroupData group_from_table(std::string name, std::vector<std::vector<int>> table,
                           const std::map<int, std::vector<std::vector<Cyclotomic>>>& characters) {
    GroupData g;
    g.name = std::move(name);
    g.table = std::move(table);
    const int n = static_cast<int>(g.table.size());
    for (const auto& row : g.table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(Errc::data_integrity, "multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw Error(Errc::data_integrity, "table entry out of range");
    }
    g.identity = find_identity(g.table);
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        ConjugacyClass cls;
        cls.rep = a;
        std::set<int> members;
        for (int x = 0; x < n; ++x) members.insert(g.mul(g.mul(x, a), g.inv(x)));
        cls.elements.assign(members.begin(), members.end());
        for (int m : cls.elements) seen[m] = true;
        cls.centralizer = centralizer_of(g.table, a);
        if (auto it = characters.find(a); it != characters.end())
            cls.characters = it->second;
        else
            cls.characters = subgroup_characters(g, cls.centralizer);
        g.classes.push_back(std::move(cls));
    }
    for (const auto& [rep, chars] : characters)
        if (std::none_of(g.classes.begin(), g.classes.end(), [rep](const ConjugacyClass& c) { return c.rep == rep; }))
            throw Error(Errc::data_integrity, "characters given for " + std::to_string(rep) +
                                                  ", which is not a class representative");
    check_group_data(g);
    return g;
}

void check_group_data(const GroupData& g) {
    const int n = static_cast<int>(g.order());
    auto fail = [](const std::string& what) { return Error(Errc::data_integrity, what); };
    if (n == 0) throw fail("empty group");
    for (const auto& row : g.table) {
        if (static_cast<int>(row.size()) != n) throw fail("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw fail("table entry out of range");
    }
    if (find_identity(g.table) != g.identity) throw fail("declared identity is not the identity");
    for (int x = 0; x < n; ++x) {
        std::vector<bool> hit(n, false);
        for (int y = 0; y < n; ++y) hit[g.mul(x, y)] = true;
        if (std::count(hit.begin(), hit.end(), true) != n) throw fail("table row is not a permutation");
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) throw fail("table is not associative");
    }
    std::vector<int> owner(n, -1);
    std::size_t total = 0;
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        const auto& cls = g.classes[c];
        std::set<int> expect;
        for (int x = 0; x < n; ++x) expect.insert(g.mul(g.mul(x, cls.rep), g.inv(x)));
        if (std::vector<int>(expect.begin(), expect.end()) != cls.elements)
            throw fail("class of " + std::to_string(cls.rep) + " is not its conjugacy class");
        for (int m : cls.elements) {
            if (owner[m] >= 0) throw fail("element " + std::to_string(m) + " lies in two classes");
            owner[m] = static_cast<int>(c);
        }
        total += cls.elements.size();
        if (cls.centralizer != centralizer_of(g.table, cls.rep))
            throw fail("wrong centralizer for " + std::to_string(cls.rep));
        if (cls.centralizer.size() * cls.elements.size() != g.order())
            throw fail("class size times centralizer order differs from |G|");

        // Characters: class functions on H = C_G(rep), orthonormal, complete.
        const auto& H = cls.centralizer;
        std::map<int, std::size_t> pos;
        for (std::size_t i = 0; i < H.size(); ++i) pos[H[i]] = i;
        const Rational inv_h(1, static_cast<long>(H.size()));
        for (const auto& chi : cls.characters) {
            if (chi.size() != H.size()) throw fail("character length differs from centralizer order");
            for (int x : H)
                for (int y : H)
                    if (!(chi[pos[g.mul(g.mul(x, y), g.inv(x))]] == chi[pos[y]]))
                        throw fail("character is not a class function");
        }
        for (std::size_t i = 0; i < cls.characters.size(); ++i)
            for (std::size_t j = i; j < cls.characters.size(); ++j) {
                Cyclotomic s;
                for (std::size_t k = 0; k < H.size(); ++k)
                    s += cls.characters[i][k] * cls.characters[j][k].conj();
                if (!(s * Cyclotomic(inv_h) == Cyclotomic(i == j ? 1L : 0L)))
                    throw fail("character rows are not orthonormal for class " + std::to_string(cls.rep));
            }
        // Completeness: Σ χ(e)² = |H|.
        Cyclotomic dims;
        const std::size_t e = pos[g.identity];
        for (const auto& chi : cls.characters) dims += chi[e] * chi[e];
        if (!(dims == Cyclotomic(static_cast<long>(H.size()))))
            throw fail("character table of C(" + std::to_string(cls.rep) + ") is incomplete");
    }
    if (total != g.order()) throw fail("classes do not cover the group");
    if (g.classes.empty() || g.classes[0].rep != g.identity)
        throw fail("the first class must be the identity class");
}

GroupData builtin_group(const std::string& name, u64 n) {
    std::vector<std::vector<int>> table;
    if (name == "z" || name == "Z") {
        if (n < 1) throw Error(Errc::precondition, "cyclic group needs n >= 1");
        table.assign(n, std::vector<int>(n));
        for (u64 i = 0; i < n; ++i)
            for (u64 j = 0; j < n; ++j) table[i][j] = static_cast<int>((i + j) % n);
        return group_from_table("Z" + std::to_string(n), std::move(table));
    }
    if (name == "s3" || name == "S3") {
        std::vector<std::array<int, 3>> perms;
        std::array<int, 3> p{0, 1, 2};
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        table.assign(6, std::vector<int>(6));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                std::array<int, 3> c{perms[i][perms[j][0]], perms[i][perms[j][1]], perms[i][perms[j][2]]};
                table[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
            }
        return group_from_table("S3", std::move(table));
    }
    if (name == "d4" || name == "D4") {
        // r^a s^b stored at a + 4b; s r s = r^{-1}.
        table.assign(8, std::vector<int>(8));
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y) {
                const int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
                const int ra = ((a + (b ? -c : c)) % 4 + 4) % 4;
                table[x][y] = ra + 4 * ((b + d) % 2);
            }
        return group_from_table("D4", std::move(table));
    }
    if (name == "q8" || name == "Q8") {
        // ±{1, i, j, k}: unit u at index u, its negative at u + 4.
        static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        table.assign(8, std::vector<int>(8));
        for (int x = 0; x < 8; ++x)
            for (int y = 0; y < 8; ++y) {
                const int u = x % 4, v = y % 4;
                const int s = sign[u][v] * (x < 4 ? 1 : -1) * (y < 4 ? 1 : -1);
                table[x][y] = unit[u][v] + (s < 0 ? 4 : 0);
            }
        return group_from_table("Q8", std::move(table));
    }
    throw Error(Errc::precondition, "unknown group '" + name + "'");
}

// ---- quantum double ------------------------------------------------------------------

namespace {

struct Primary {
    std::size_t cls, chi;
};

std::vector<Primary> double_primaries(const GroupData& g) {
    std::vector<Primary> out;
    for (std::size_t c = 0; c < g.classes.size(); ++c)
        for (std::size_t i = 0; i < g.classes[c].characters.size(); ++i) out.push_back({c, i});
    return out;
}

std::vector<std::vector<int>> centralizer_positions(const GroupData& g) {
    std::vector<std::vector<int>> pos(g.classes.size(), std::vector<int>(g.order(), -1));
    for (std::size_t c = 0; c < g.classes.size(); ++c)
        for (std::size_t i = 0; i < g.classes[c].centralizer.size(); ++i)
            pos[c][g.classes[c].centralizer[i]] = static_cast<int>(i);
    return pos;
}

}  // namespace

ModularData quantum_double_data(const GroupData& g) {
    check_group_data(g);
    const auto prims = double_primaries(g);
    const auto pos = centralizer_positions(g);
    const std::size_t n = prims.size();
    const u64 E = g.exponent();
    CMatrix S(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) {
            const auto& A = g.classes[prims[p].cls];
            const auto& B = g.classes[prims[q].cls];
            const auto& chi = A.characters[prims[p].chi];
            const auto& psi = B.characters[prims[q].chi];
            CycloAccumulator acc(E);
            for (int x = 0; x < static_cast<int>(g.order()); ++x) {
                const int xi = g.inv(x);
                const int conj_b = g.mul(g.mul(x, B.rep), xi);
                if (g.mul(A.rep, conj_b) != g.mul(conj_b, A.rep)) continue;
                const int conj_a = g.mul(g.mul(xi, A.rep), x);
                acc.add_product(chi[pos[prims[p].cls][conj_b]], psi[pos[prims[q].cls][conj_a]]);
            }
            const Rational scale(1, static_cast<long>(A.centralizer.size() * B.centralizer.size()));
            S(p, q) = S(q, p) = (acc.result() * Cyclotomic(scale)).at_order(E);
        }

    std::vector<Rational> T(n);
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < n; ++p) {
        const auto& A = g.classes[prims[p].cls];
        const auto& chi = A.characters[prims[p].chi];
        const Cyclotomic at_a = chi[pos[prims[p].cls][A.rep]];
        const Cyclotomic at_e = chi[pos[prims[p].cls][g.identity]];
        bool found = false;
        for (u64 k = 0; k < E && !found; ++k)
            if (at_e * Cyclotomic::xi_power(E, static_cast<i64>(k)) == at_a) {
                T[p] = make_rational(static_cast<long>(k), static_cast<long>(E));
                found = true;
            }
        if (!found) throw Error(Errc::data_integrity, "chi(a)/chi(e) is not a root of unity");
        labels.push_back("(" + std::to_string(A.rep) + "," + std::to_string(prims[p].chi) + ")");
    }
    return make_modular_data(std::move(S), std::move(T), std::move(labels));
}

bool double_galois_check(const GroupData& g, i64 ell) {
    const u64 E = g.exponent();
    if (!coprime(mod(ell, static_cast<i64>(E)), static_cast<i64>(E)) && E > 1)
        throw Error(Errc::not_coprime, std::to_string(ell) + " is not coprime to the exponent");
    const ModularData md = quantum_double_data(g);
    const i64 lifted = galois_lift(ell, E, md.field_order());
    const GaloisSymmetry gs = extract_galois(md, lifted);
    const auto prims = double_primaries(g);
    const auto pos = centralizer_positions(g);
    const i64 l = mod(ell, static_cast<i64>(E));

    auto index_of = [&](std::size_t cls, std::size_t chi) {
        for (std::size_t p = 0; p < prims.size(); ++p)
            if (prims[p].cls == cls && prims[p].chi == chi) return p;
        return prims.size();
    };

    for (std::size_t p = 0; p < prims.size(); ++p) {
        const auto& A = g.classes[prims[p].cls];
        const auto& chi = A.characters[prims[p].chi];
        int power = g.identity;
        for (i64 i = 0; i < l; ++i) power = g.mul(power, A.rep);
        // b·a^ℓ·b⁻¹ = rep of the class containing a^ℓ.
        std::size_t target = g.classes.size();
        for (std::size_t c = 0; c < g.classes.size(); ++c)
            if (std::binary_search(g.classes[c].elements.begin(), g.classes[c].elements.end(), power))
                target = c;
        const auto& B = g.classes[target];
        int b = -1;
        for (int x = 0; x < static_cast<int>(g.order()) && b < 0; ++x)
            if (g.mul(g.mul(x, power), g.inv(x)) == B.rep) b = x;
        // σ_ℓ χ^{b⁻¹} on C(rep): h ↦ σ_ℓ(χ(b⁻¹ h b)).
        std::vector<Cyclotomic> moved;
        for (int h : B.centralizer) {
            const int back = g.mul(g.mul(g.inv(b), h), b);
            moved.push_back(chi[pos[prims[p].cls][back]].galois(l));
        }
        std::size_t chi_index = B.characters.size();
        for (std::size_t i = 0; i < B.characters.size(); ++i)
            if (B.characters[i] == moved) chi_index = i;
        if (chi_index == B.characters.size()) return false;
        if (gs.perm[p] != index_of(target, chi_index)) return false;
    }
    return check_condition6(md, lifted);
}

}  // namespace rcft
