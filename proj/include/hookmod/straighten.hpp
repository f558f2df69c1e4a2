#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hookmod/bases.hpp"
#include "hookmod/combinatorics.hpp"
#include "hookmod/polyring.hpp"

namespace hookmod {

// ---------------------------------------------------------------------------
// Index permutation and exponent data of a normal-form monomial
// ---------------------------------------------------------------------------

// The index permutation orders the x-support by weakly decreasing exponents,
// then the untouched indices, then the y-support by weakly increasing
// exponents; ties always break toward the smaller index.
inline Permutation index_permutation(const Monomial& m, int k) {
    if (!monomial_in_Mnk(m, k))
        throw std::invalid_argument("index_permutation: monomial not in normal form");
    int n = m.nvars();
    struct Key { int cls, key, idx; };
    std::vector<Key> keys;
    keys.reserve(n);
    for (int i = 1; i <= n; ++i) {
        if (m.xe[i - 1] > 0) keys.push_back({0, -m.xe[i - 1], i});
        else if (m.ye[i - 1] > 0) keys.push_back({2, m.ye[i - 1], i});
        else keys.push_back({1, 0, i});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.cls != b.cls) return a.cls < b.cls;
        if (a.key != b.key) return a.key < b.key;
        return a.idx < b.idx;
    });
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = keys[i].idx;
    return Permutation(std::move(word));
}

// Exponents of m read along its index permutation: p_i is the exponent of
// x_{pi(i)} for i < k and of y_{pi(i)} for i > k (p_k = 0).
inline std::vector<int> exponents_along(const Monomial& m, const Permutation& pi, int k) {
    int n = m.nvars();
    std::vector<int> p(n + 1, 0);  // 1-based
    for (int i = 1; i <= n; ++i) {
        if (i < k) p[i] = m.xe[pi(i) - 1];
        else if (i > k) p[i] = m.ye[pi(i) - 1];
    }
    return p;
}

// lambda(m) = ((p_1,...,p_{k-1}), (p_n,...,p_{k+1})): a bipartition of the
// bidegree, zeros retained.
inline std::pair<std::vector<int>, std::vector<int>> exponent_bipartition(const Monomial& m, int k) {
    auto pi = index_permutation(m, k);
    auto p = exponents_along(m, pi, k);
    int n = m.nvars();
    std::vector<int> lx, ly;
    for (int i = 1; i <= k - 1; ++i) lx.push_back(p[i]);
    for (int i = n; i >= k + 1; --i) ly.push_back(p[i]);
    return {lx, ly};
}

// mu^(k)(m): conjugates of the two difference sequences p_i - d_i^(k)(pi).
inline std::pair<Partition, Partition> complementary_bipartition(const Monomial& m, int k) {
    auto pi = index_permutation(m, k);
    auto p = exponents_along(m, pi, k);
    auto d = d_vec(pi, k);
    int n = m.nvars();
    std::vector<int> dx, dy;
    for (int i = 1; i <= k - 1; ++i) dx.push_back(p[i] - d[i - 1]);
    for (int i = n; i >= k + 1; --i) dy.push_back(p[i] - d[i - 1]);
    for (int v : dx)
        if (v < 0) throw std::invalid_argument("complementary_bipartition: negative x difference");
    for (int v : dy)
        if (v < 0) throw std::invalid_argument("complementary_bipartition: negative y difference");
    return {Partition(dx).conjugate(), Partition(dy).conjugate()};
}

// ---------------------------------------------------------------------------
// The support-swapping bijection psi^(k) / phi^(k)
// ---------------------------------------------------------------------------

// psi^(k): M_n^(k) -> M_n^(n). Multiplies by (x_1...x_n)^u with u the largest
// y-exponent and cancels each y_j^{q_j} against x_j^{q_j}.
inline Monomial psi_k(const Monomial& m, int n, int k) {
    if (m.nvars() != n || !monomial_in_Mnk(m, k))
        throw std::invalid_argument("psi_k: monomial not in M_n^(k)");
    int u = 0;
    for (int e : m.ye) u = std::max(u, e);
    Monomial r(n);
    for (int i = 0; i < n; ++i) {
        r.xe[i] = m.xe[i] + u - m.ye[i];
        if (r.xe[i] < 0) throw std::invalid_argument("psi_k: internal exponent underflow");
    }
    return r;
}

// phi^(k): M_n^(n) -> M_n^(k). Rewrites the column factors of the exponent
// partition: columns of height < k stay as x-products, columns of height
// >= k become complementary y-products.
inline Monomial phi_k(const Monomial& m, int n, int k) {
    if (m.nvars() != n) throw std::invalid_argument("phi_k: wrong variable count");
    for (int e : m.ye)
        if (e != 0) throw std::invalid_argument("phi_k: monomial must be x-only");
    if (!monomial_in_Mnk(m, n))
        throw std::invalid_argument("phi_k: monomial divisible by x_1...x_n");
    auto pi = index_permutation(m, n);
    std::vector<int> lambda(n + 1, 0);
    for (int i = 1; i <= n; ++i) lambda[i] = m.xe[pi(i) - 1];
    Monomial r(n);
    for (int t = 1; t <= lambda[1]; ++t) {
        int col = 0;  // lambda'_t
        for (int i = 1; i <= n; ++i)
            if (lambda[i] >= t) ++col;
        if (col <= k - 1) {
            for (int i = 1; i <= col; ++i) r.xe[pi(i) - 1]++;
        } else {
            for (int i = col + 1; i <= n; ++i) r.ye[pi(i) - 1]++;
        }
    }
    return r;
}

// nu(m) = mu(psi^(k)(m)): the canonical complementary partition.
inline Partition canonical_nu(const Monomial& m, int n, int k) {
    Monomial w = psi_k(m, n, k);
    return complementary_bipartition(w, n).first;
}

// ---------------------------------------------------------------------------
// The straightening order
// ---------------------------------------------------------------------------

enum class PrecResult { less, greater, equal, incomparable };

// m1 prec_k m2 when lambda(m1) is strictly dominated by lambda(m2), or the
// bipartitions agree and inv(pi(m1)) > inv(pi(m2)). Only defined between
// monomials of equal bidegree.
inline PrecResult prec_k(const Monomial& m1, const Monomial& m2, int k) {
    if (m1.bidegree() != m2.bidegree())
        throw std::invalid_argument("prec_k: monomials must have equal bidegree");
    auto l1 = exponent_bipartition(m1, k);
    auto l2 = exponent_bipartition(m2, k);
    if (l1 == l2) {
        if (m1 == m2) return PrecResult::equal;
        int i1 = index_permutation(m1, k).inversions();
        int i2 = index_permutation(m2, k).inversions();
        if (i1 > i2) return PrecResult::less;
        if (i1 < i2) return PrecResult::greater;
        return PrecResult::incomparable;
    }
    bool le = dominance_leq(l1.first, l2.first) && dominance_leq(l1.second, l2.second);
    bool ge = dominance_leq(l2.first, l1.first) && dominance_leq(l2.second, l1.second);
    if (le) return PrecResult::less;
    if (ge) return PrecResult::greater;
    return PrecResult::incomparable;
}

// ---------------------------------------------------------------------------
// Straightening
// ---------------------------------------------------------------------------

struct StraighteningTerm {
    long long coef = 0;
    Permutation pi;
    Partition nu;  // parts in 1..n-1, stored decreasing; empty means e = 1
};

// e_nu^(k) = product of e_d^(k) over the parts of nu.
inline Polynomial e_nu_k(const Partition& nu, int n, int k) {
    Polynomial r = Polynomial::constant(n, 1);
    for (int d : nu.parts) r = r * elementary_ek(n, k, d);
    return r;
}

// The unique monomial whose straightening leads with (1, pi, nu): start from
// a_pi^(k) and apply the column factors m_(d) for each part d of nu.
inline Monomial lead_monomial_of(const Permutation& pi, const Partition& nu, int n, int k) {
    Monomial m = descent_monomial(pi, k);
    for (int d : nu.parts) {
        if (d <= k - 1) {
            for (int i = 1; i <= d; ++i) m.xe[pi(i) - 1]++;
        } else {
            for (int i = d + 1; i <= n; ++i) m.ye[pi(i) - 1]++;
        }
    }
    return m;
}

namespace detail {

struct TermKey {
    std::vector<int> pi_word;
    std::vector<int> nu_parts;
    bool operator<(const TermKey& o) const {
        if (pi_word != o.pi_word) return pi_word < o.pi_word;
        return nu_parts < o.nu_parts;
    }
};

using Expansion = std::map<TermKey, long long>;

struct StraightenCtx {
    int n, k;
    std::map<Monomial, Expansion, GrlexDesc> memo;

    const Expansion& straighten(const Monomial& m) {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Permutation pi = index_permutation(m, k);
        Partition nu = canonical_nu(m, n, k);
        Polynomial prod = mul_in_Pk(Polynomial::term(descent_monomial(pi, k), 1), e_nu_k(nu, n, k), n, k);
        if (prod.coeff(m) != 1)
            throw std::logic_error("straighten: lead coefficient of a_pi e_nu is not 1");
        Expansion result;
        result[TermKey{pi.w, nu.parts}] = 1;
        for (const auto& [mp, c] : prod.terms()) {
            if (mp == m) continue;
            if (prec_k(mp, m, k) != PrecResult::less)
                throw std::logic_error("straighten: non-lead monomial is not strictly smaller");
            if (c.get_den() != 1) throw std::logic_error("straighten: non-integer coefficient");
            long long ci = static_cast<long long>(c.get_num().get_si());
            const Expansion& sub = straighten(mp);
            for (const auto& [key, sc] : sub) {
                auto [sit, inserted] = result.try_emplace(key, 0);
                sit->second -= ci * sc;
                if (sit->second == 0) result.erase(sit);
            }
        }
        return memo.emplace(m, std::move(result)).first->second;
    }
};

}  // namespace detail

// Expansion of m as an integer combination of a_pi^(k) e_nu^(k) in P_n^(k).
// The first term is the lead (coefficient 1, pi(m), nu(m)); the remaining
// terms are listed in a fixed linear extension that respects the
// straightening order (larger first).
inline std::vector<StraighteningTerm> straighten(const Monomial& m, int n, int k) {
    if (m.nvars() != n || !monomial_in_Mnk(m, k))
        throw std::invalid_argument("straighten: monomial not in M_n^(k)");
    detail::StraightenCtx ctx{n, k, {}};
    const auto& expansion = ctx.straighten(m);

    struct Sortable {
        StraighteningTerm term;
        std::vector<long long> key;  // descending sort key
    };
    std::vector<Sortable> items;
    for (const auto& [tk, coef] : expansion) {
        StraighteningTerm t{coef, Permutation(tk.pi_word), Partition(tk.nu_parts)};
        Monomial lead = lead_monomial_of(t.pi, t.nu, n, k);
        auto [lx, ly] = exponent_bipartition(lead, k);
        std::vector<long long> key;
        long long s = 0;
        for (int v : lx) key.push_back(s += v);
        s = 0;
        for (int v : ly) key.push_back(s += v);
        key.push_back(-t.pi.inversions());
        items.push_back({std::move(t), std::move(key)});
    }
    std::sort(items.begin(), items.end(),
              [](const Sortable& a, const Sortable& b) { return a.key > b.key; });
    std::vector<StraighteningTerm> out;
    out.reserve(items.size());
    for (auto& s : items) out.push_back(std::move(s.term));
    return out;
}

// Re-multiplied form of a straightening expansion; used as the round-trip
// oracle in tests.
inline Polynomial expand_straightening(const std::vector<StraighteningTerm>& terms, int n, int k) {
    Polynomial acc(n);
    for (const auto& t : terms) {
        Polynomial p = mul_in_Pk(Polynomial::term(descent_monomial(t.pi, k), 1), e_nu_k(t.nu, n, k), n, k);
        acc += p * rational_of(t.coef);
    }
    return acc;
}

}  // namespace hookmod
