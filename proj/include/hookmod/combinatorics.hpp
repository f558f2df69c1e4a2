#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hookmod/errors.hpp"

namespace hookmod {

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

// Integer partition, stored with weakly decreasing positive parts and trailing
// zeros trimmed. part(i) is 1-based and returns 0 past the end, so callers can
// pad freely.
struct Partition {
    std::vector<int> parts;

    Partition() = default;

    explicit Partition(std::vector<int> p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < p.size() && p[i] < p[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        parts = std::move(p);
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    int part(int i) const {  // 1-based
        if (i < 1) throw std::invalid_argument("partition index is 1-based");
        return i <= length() ? parts[i - 1] : 0;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts.empty()) return Partition{};
        c.resize(parts[0], 0);
        for (int p : parts)
            for (int j = 0; j < p; ++j) c[j]++;
        return Partition(std::move(c));
    }

    // n(lambda) = sum (i-1) * lambda_i over parts in decreasing order.
    long long n_stat() const {
        long long s = 0;
        for (int i = 0; i < length(); ++i) s += static_cast<long long>(i) * parts[i];
        return s;
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < length(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> gen_partitions(int n) {
    if (n < 1) throw std::invalid_argument("gen_partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int bound) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int m = std::min(rest, bound); m >= 1; --m) {
            cur.push_back(m);
            self(self, rest - m, m);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// The hook shape with one row of n-k+1 cells and k-1 extra cells in column 1.
inline Partition hook_shape(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("hook_shape: need 1 <= k <= n");
    std::vector<int> p;
    p.push_back(n - k + 1);
    for (int i = 0; i < k - 1; ++i) p.push_back(1);
    return Partition(std::move(p));
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

struct Permutation {
    std::vector<int> w;  // w[i-1] = pi(i), values 1..n

    Permutation() = default;

    explicit Permutation(std::vector<int> word) : w(std::move(word)) {
        std::vector<bool> seen(w.size(), false);
        for (int v : w) {
            if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1])
                throw std::invalid_argument("permutation word is not a bijection on 1..n");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int n() const { return static_cast<int>(w.size()); }
    int operator()(int i) const { return w[i - 1]; }  // 1-based

    Permutation inverse() const {
        std::vector<int> v(w.size());
        for (int i = 1; i <= n(); ++i) v[w[i - 1] - 1] = i;
        return Permutation(std::move(v));
    }

    std::set<int> des() const {
        std::set<int> d;
        for (int i = 1; i < n(); ++i)
            if (w[i - 1] > w[i]) d.insert(i);
        return d;
    }

    int inversions() const {
        int c = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (w[i] > w[j]) ++c;
        return c;
    }

    int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

    // Left multiplication by the Coxeter generator s_j: swaps the values j, j+1.
    Permutation swap_values(int j) const {
        std::vector<int> v = w;
        for (int& x : v) {
            if (x == j) x = j + 1;
            else if (x == j + 1) x = j;
        }
        return Permutation(std::move(v));
    }

    bool operator==(const Permutation& o) const { return w == o.w; }
    bool operator<(const Permutation& o) const { return w < o.w; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += w.size() > 9 ? "," : "";
            s += std::to_string(w[i]);
        }
        return s;
    }
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Standard Young tableaux (French convention: rows[0] is the bottom row,
// rows strictly increase left to right, columns strictly increase bottom-up)
// ---------------------------------------------------------------------------

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // rows[r-1][c-1] = entry at (row r, col c)

    int n() const { return shape.weight(); }

    std::pair<int, int> cell_of(int value) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r][c] == value) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
        throw std::invalid_argument("value not present in tableau");
    }

    std::vector<int> reading_word() const {  // bottom row first
        std::vector<int> out;
        for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
        return out;
    }
};

// All SYT of the given shape, ordered by lexicographic row-reading word.
inline std::vector<StandardTableau> gen_syt(const Partition& shape) {
    if (shape.length() == 0) throw std::invalid_argument("gen_syt: shape must be nonempty");
    const int n = shape.weight();
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.parts[r], 0);
    std::vector<int> fill(shape.length(), 0);  // cells filled per row
    std::vector<StandardTableau> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(StandardTableau{shape, rows});
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            int c = fill[r];
            if (c >= shape.parts[r]) continue;
            if (r > 0 && fill[r - 1] <= c) continue;  // cell below must be filled
            rows[r][c] = v;
            fill[r]++;
            self(self, v + 1);
            fill[r]--;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

// Des(T): i such that i+1 lies strictly above and weakly to the left of i.
inline std::set<int> des_tableau(const StandardTableau& T) {
    std::set<int> d;
    for (int i = 1; i < T.n(); ++i) {
        auto [r1, c1] = T.cell_of(i);
        auto [r2, c2] = T.cell_of(i + 1);
        if (r2 > r1 && c2 <= c1) d.insert(i);
    }
    return d;
}

// maj_{i,j}(T) = sum of r over descents r with i <= r < j.
inline int maj_window(const StandardTableau& T, int i, int j) {
    if (!(1 <= i && i <= j && j <= T.n())) throw std::invalid_argument("maj_window: need 1 <= i <= j <= n");
    int s = 0;
    for (int r : des_tableau(T))
        if (i <= r && r < j) s += r;
    return s;
}

// comaj_{i,j}(T) = sum of (n-r) over descents r with i <= r < j.
inline int comaj_window(const StandardTableau& T, int i, int j) {
    if (!(1 <= i && i <= j && j <= T.n())) throw std::invalid_argument("comaj_window: need 1 <= i <= j <= n");
    int s = 0;
    for (int r : des_tableau(T))
        if (i <= r && r < j) s += T.n() - r;
    return s;
}

// ---------------------------------------------------------------------------
// (n,k)-bipartitions
// ---------------------------------------------------------------------------

// Pair (mu, nu) with mu_i - mu_{i+1} in {0,1} (i < k), nu_i - nu_{i+1} in {0,1}
// (i < n-k+1) and mu_k = nu_{n-k+1} = 0.
struct NKBipartition {
    int n = 0, k = 0;
    Partition mu, nu;

    NKBipartition() = default;

    NKBipartition(int n_, int k_, Partition mu_, Partition nu_)
        : n(n_), k(k_), mu(std::move(mu_)), nu(std::move(nu_)) {
        if (k < 1 || k > n) throw std::invalid_argument("NKBipartition: need 1 <= k <= n");
        if (mu.length() > k - 1) throw std::invalid_argument("NKBipartition: mu has too many parts");
        if (nu.length() > n - k) throw std::invalid_argument("NKBipartition: nu has too many parts");
        for (int i = 1; i < k; ++i) {
            int d = mu.part(i) - mu.part(i + 1);
            if (d != 0 && d != 1) throw std::invalid_argument("NKBipartition: mu steps must be 0 or 1");
        }
        for (int i = 1; i < n - k + 1; ++i) {
            int d = nu.part(i) - nu.part(i + 1);
            if (d != 0 && d != 1) throw std::invalid_argument("NKBipartition: nu steps must be 0 or 1");
        }
    }

    bool operator==(const NKBipartition& o) const {
        return n == o.n && k == o.k && mu == o.mu && nu == o.nu;
    }
    bool operator<(const NKBipartition& o) const {
        if (!(mu == o.mu)) return mu < o.mu;
        return nu < o.nu;
    }

    std::string str() const { return "(" + mu.str() + "," + nu.str() + ")"; }
};

// All (n,k)-bipartitions. Order: the k-1 mu-steps and n-k nu-steps are binary
// masks; masks are enumerated in increasing order, mu outer, nu inner.
inline std::vector<NKBipartition> nk_bipartitions(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("nk_bipartitions: need 1 <= k <= n");
    auto from_mask = [](unsigned mask, int len) {
        // mask bit i-1 = (part_i - part_{i+1}); parts are suffix sums of the bits
        std::vector<int> p(len, 0);
        for (int i = len; i >= 1; --i)
            p[i - 1] = ((mask >> (i - 1)) & 1u) + (i < len ? p[i] : 0);
        return Partition(std::move(p));
    };
    std::vector<NKBipartition> out;
    for (unsigned mm = 0; mm < (1u << (k - 1)); ++mm)
        for (unsigned nm = 0; nm < (1u << (n - k)); ++nm)
            out.emplace_back(n, k, from_mask(mm, k - 1), from_mask(nm, n - k));
    return out;
}

// A_lambda = { 1 <= i < n : mu_i - mu_{i+1} = 1  or  nu_{n-i} - nu_{n-i+1} = 1 }.
inline std::set<int> a_lambda(const NKBipartition& lam) {
    std::set<int> a;
    for (int i = 1; i < lam.n; ++i) {
        bool x_step = lam.mu.part(i) - lam.mu.part(i + 1) == 1;
        bool y_step = lam.n - i >= 1 && lam.nu.part(lam.n - i) - lam.nu.part(lam.n - i + 1) == 1;
        if (x_step || y_step) a.insert(i);
    }
    return a;
}

// comp(A) for A = {a_1 < ... < a_k} inside {1..n-1}: (a_1, a_2-a_1, ..., n-a_k).
inline std::vector<int> comp_of_set(int n, const std::set<int>& a) {
    std::vector<int> comp;
    int prev = 0;
    for (int x : a) {
        if (x < 1 || x >= n) throw std::invalid_argument("comp_of_set: A must lie in 1..n-1");
        comp.push_back(x - prev);
        prev = x;
    }
    comp.push_back(n - prev);
    return comp;
}

// Dominance by partial sums. Sequences may have unequal weights; this is the
// partial-sum extension used for the basis filtration.
inline bool dominance_leq(const std::vector<int>& a, const std::vector<int>& b) {
    long long sa = 0, sb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

inline bool dominance_leq(const Partition& a, const Partition& b) {
    return dominance_leq(a.parts, b.parts);
}

// Componentwise dominance on bipartitions.
inline bool dominance_leq(const std::pair<Partition, Partition>& a,
                          const std::pair<Partition, Partition>& b) {
    return dominance_leq(a.first, b.first) && dominance_leq(a.second, b.second);
}

}  // namespace hookmod
