#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hookmod/combinatorics.hpp"
#include "hookmod/polyring.hpp"

namespace hookmod {

// ---------------------------------------------------------------------------
// Window statistics d_i^(k) and inv_i^(k)
// ---------------------------------------------------------------------------

// d_i^(k)(pi): descents of pi counted in the window between i and k.
inline std::vector<int> d_vec(const Permutation& pi, int k) {
    int n = pi.n();
    if (k < 1 || k > n) throw std::invalid_argument("d_vec: need 1 <= k <= n");
    auto des = pi.des();
    std::vector<int> d(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (i < k) {
            for (int r = i; r <= k - 1; ++r) d[i - 1] += des.count(r);
        } else if (i > k) {
            for (int r = k; r <= i - 1; ++r) d[i - 1] += des.count(r);
        }
    }
    return d;
}

// inv_i^(k)(pi): inversions of pi counted toward position k.
inline std::vector<int> inv_vec(const Permutation& pi, int k) {
    int n = pi.n();
    if (k < 1 || k > n) throw std::invalid_argument("inv_vec: need 1 <= k <= n");
    std::vector<int> v(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (i < k) {
            for (int j = i + 1; j <= k; ++j)
                if (pi(i) > pi(j)) v[i - 1]++;
        } else if (i > k) {
            for (int j = k; j < i; ++j)
                if (pi(j) > pi(i)) v[i - 1]++;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// The permutation-indexed monomial bases
// ---------------------------------------------------------------------------

namespace detail {
inline Monomial split_monomial(const Permutation& pi, int k, const std::vector<int>& xexp,
                               const std::vector<int>& yexp) {
    int n = pi.n();
    Monomial m(n);
    for (int i = 1; i <= k - 1; ++i) m.xe[pi(i) - 1] = xexp[i - 1];
    for (int i = k + 1; i <= n; ++i) m.ye[pi(i) - 1] = yexp[i - 1];
    return m;
}
}  // namespace detail

// a_pi^(k) = prod_{i<k} x_{pi(i)}^{d_i} * prod_{i>k} y_{pi(i)}^{d_i}.
inline Monomial descent_monomial(const Permutation& pi, int k) {
    auto d = d_vec(pi, k);
    return detail::split_monomial(pi, k, d, d);
}

// b_pi^(k): same split with inv_i^(k) exponents throughout.
inline Monomial artin_monomial(const Permutation& pi, int k) {
    auto v = inv_vec(pi, k);
    return detail::split_monomial(pi, k, v, v);
}

// c_pi^(k): descent exponents on the x side, inversion exponents on the y side.
inline Monomial haglund_monomial(const Permutation& pi, int k) {
    auto d = d_vec(pi, k);
    auto v = inv_vec(pi, k);
    return detail::split_monomial(pi, k, d, v);
}

// ---------------------------------------------------------------------------
// Kicking sequence
// ---------------------------------------------------------------------------

struct KickingTriple {
    std::vector<int> A;     // increasing, size k-1
    int c = 0;
    std::vector<int> Abar;  // increasing, size n-k
    Permutation pi;         // decreasing(A) . c . increasing(Abar)
    int rank = 0;           // position in the sequence, 0-based
};

// All N = n * C(n-1, k-1) triples, ordered so the associated permutations
// decrease in lexicographic order as words (largest word first). The final
// monomial is 1.
inline std::vector<std::pair<KickingTriple, Monomial>> kicking_sequence(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("kicking_sequence: need 1 <= k <= n");
    std::vector<std::pair<KickingTriple, Monomial>> out;
    std::vector<int> a(k - 1);
    auto emit = [&](const std::vector<int>& A, int c) {
        KickingTriple t;
        t.A = A;
        t.c = c;
        std::vector<int> word;
        for (auto it = A.rbegin(); it != A.rend(); ++it) word.push_back(*it);
        word.push_back(c);
        std::vector<bool> used(n + 1, false);
        for (int v : A) used[v] = true;
        used[c] = true;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) {
                t.Abar.push_back(v);
                word.push_back(v);
            }
        t.pi = Permutation(word);
        Monomial m(n);
        for (int v : t.A)
            if (v > c) m.xe[v - 1] = 1;
        for (int v : t.Abar)
            if (v < c) m.ye[v - 1] = 1;
        out.emplace_back(std::move(t), std::move(m));
    };
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k - 1) {
            std::vector<bool> in_a(n + 1, false);
            for (int v : a) in_a[v] = true;
            for (int c = 1; c <= n; ++c)
                if (!in_a[c]) emit(a, c);
            return;
        }
        for (int v = start; v <= n; ++v) {
            a[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return r.first.pi < l.first.pi;  // larger word earlier
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].first.rank = static_cast<int>(i);
    return out;
}

// ---------------------------------------------------------------------------
// Coinvariant-algebra factories and the composed basis
// ---------------------------------------------------------------------------

// A factory returns a coinvariant-algebra basis of S_m acting on the listed
// variables (1-based indices into one alphabet of the 2n-variable ring).
// It must return exactly m! polynomials for m variables.
using CoinvariantFactory =
    std::function<std::vector<Polynomial>(int n, const std::vector<int>& vars, bool y_alphabet)>;

// Garsia-Stanton descent monomials a_sigma over S_m, in the given variables.
inline std::vector<Polynomial> descent_factory(int n, const std::vector<int>& vars, bool y_alphabet) {
    int m = static_cast<int>(vars.size());
    std::vector<Polynomial> out;
    if (m == 0) {
        out.push_back(Polynomial::constant(n, 1));
        return out;
    }
    for (const auto& sigma : all_permutations(m)) {
        auto d = d_vec(sigma, m);  // classical suffix-descent exponents
        Monomial mono(n);
        for (int i = 1; i <= m; ++i) {
            int v = vars[sigma(i) - 1] - 1;
            if (y_alphabet) mono.ye[v] = d[i - 1]; else mono.xe[v] = d[i - 1];
        }
        out.push_back(Polynomial::term(mono, 1));
    }
    return out;
}

// Artin staircase monomials: exponent of the i-th listed variable below m-i.
inline std::vector<Polynomial> artin_factory(int n, const std::vector<int>& vars, bool y_alphabet) {
    int m = static_cast<int>(vars.size());
    std::vector<Polynomial> out;
    std::vector<int> e(m, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            Monomial mono(n);
            for (int i = 0; i < m; ++i) {
                int v = vars[i] - 1;
                if (y_alphabet) mono.ye[v] = e[i]; else mono.xe[v] = e[i];
            }
            out.push_back(Polynomial::term(mono, 1));
            return;
        }
        for (int val = 0; val <= m - 1 - pos; ++val) {
            e[pos] = val;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

namespace detail {

// Exact division of an antisymmetric difference by (z_a - z_b), both in the
// same alphabet. Synthetic division in z_a; the remainder must vanish.
inline Polynomial divide_by_var_difference(const Polynomial& g, int a, int b, bool y_alphabet, int n) {
    std::map<int, Polynomial> by_deg;  // z_a-degree -> coefficient polynomial
    for (const auto& [m, c] : g.terms()) {
        int d = y_alphabet ? m.ye[a - 1] : m.xe[a - 1];
        Monomial rest = m;
        if (y_alphabet) rest.ye[a - 1] = 0; else rest.xe[a - 1] = 0;
        auto [it, inserted] = by_deg.try_emplace(d, Polynomial(n));
        it->second.add_term(rest, c);
    }
    int top = by_deg.empty() ? 0 : by_deg.rbegin()->first;
    Polynomial zb = Polynomial::term(y_alphabet ? Monomial::y(n, b) : Monomial::x(n, b), 1);
    Polynomial carry(n);  // q_d while descending
    Polynomial result(n);
    for (int d = top; d >= 1; --d) {
        Polynomial gd = by_deg.count(d) ? by_deg[d] : Polynomial(n);
        Polynomial qd = gd + zb * carry;  // q_{d-1} = g_d + z_b q_d
        Polynomial za_pow = Polynomial::term(y_alphabet ? Monomial::y(n, a, d - 1) : Monomial::x(n, a, d - 1), 1);
        result += za_pow * qd;
        carry = qd;
    }
    Polynomial rem = (by_deg.count(0) ? by_deg[0] : Polynomial(n)) + zb * carry;
    if (!rem.is_zero()) throw std::invalid_argument("divide_by_var_difference: nonzero remainder");
    return result;
}

inline Polynomial swap_two_vars(const Polynomial& f, int a, int b, bool y_alphabet) {
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Monomial t = m;
        if (y_alphabet) std::swap(t.ye[a - 1], t.ye[b - 1]);
        else std::swap(t.xe[a - 1], t.xe[b - 1]);
        r.add_term(t, c);
    }
    return r;
}

}  // namespace detail

// Schubert polynomials of S_m in the listed variables, via divided differences
// from the staircase monomial. Conventions: staircase z_1^{m-1} z_2^{m-2}...,
// and d_i f = (f - s_i f) / (z_i - z_{i+1}). Guarded at m <= 5.
inline std::vector<Polynomial> schubert_factory(int n, const std::vector<int>& vars, bool y_alphabet) {
    int m = static_cast<int>(vars.size());
    if (m > 5) throw ScaleError("schubert_factory: more than 5 variables");
    if (m == 0) return {Polynomial::constant(n, 1)};

    std::map<Permutation, Polynomial> schub;
    std::vector<int> w0(m);
    for (int i = 0; i < m; ++i) w0[i] = m - i;
    Monomial stair(n);
    for (int i = 1; i <= m - 1; ++i) {
        int v = vars[i - 1] - 1;
        if (y_alphabet) stair.ye[v] = m - i; else stair.xe[v] = m - i;
    }
    schub.emplace(Permutation(w0), Polynomial::term(stair, 1));

    // Peel descents: S_{w s_i} = d_i S_w whenever position i is a descent.
    std::vector<Permutation> frontier{Permutation(w0)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& w : frontier) {
            const Polynomial& sw = schub.at(w);
            for (int i = 1; i < m; ++i) {
                if (w(i) <= w(i + 1)) continue;
                std::vector<int> word = w.w;
                std::swap(word[i - 1], word[i]);
                Permutation wsi(word);
                if (schub.count(wsi)) continue;
                Polynomial diff = sw - detail::swap_two_vars(sw, vars[i - 1], vars[i], y_alphabet);
                schub.emplace(wsi, detail::divide_by_var_difference(diff, vars[i - 1], vars[i], y_alphabet, n));
                next.push_back(wsi);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Polynomial> out;
    out.reserve(schub.size());
    for (const auto& [w, p] : schub) out.push_back(p);
    return out;
}

inline CoinvariantFactory factory_by_name(const std::string& name) {
    if (name == "descent") return descent_factory;
    if (name == "artin") return artin_factory;
    if (name == "schubert") return schubert_factory;
    throw ParseError("unknown coinvariant factory '" + name + "'");
}

// The kicking-composed basis: union over triples of m_(A,c,Abar) * B_A * C_Abar.
inline std::vector<Polynomial> composed_basis(int n, int k, const CoinvariantFactory& xfactory,
                                              const CoinvariantFactory& yfactory) {
    std::vector<Polynomial> out;
    Integer expect = factorial(n);
    for (const auto& [triple, mono] : kicking_sequence(n, k)) {
        auto bx = xfactory(n, triple.A, false);
        auto cy = yfactory(n, triple.Abar, true);
        Integer fx = factorial(triple.A.size()), fy = factorial(triple.Abar.size());
        if (Integer(static_cast<long>(bx.size())) != fx || Integer(static_cast<long>(cy.size())) != fy)
            throw std::invalid_argument("composed_basis: factory cardinality mismatch");
        Polynomial mp = Polynomial::term(mono, 1);
        for (const auto& b : bx)
            for (const auto& c : cy) out.push_back(mp * b * c);
    }
    if (Integer(static_cast<long>(out.size())) != expect)
        throw std::invalid_argument("composed_basis: assembled size is not n!");
    return out;
}

}  // namespace hookmod
