#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hookmod/combinatorics.hpp"
#include "hookmod/errors.hpp"
#include "hookmod/qt_polynomial.hpp"

namespace hookmod {

// ---------------------------------------------------------------------------
// Hook Macdonald-Kostka polynomials via standard-tableau statistics
// ---------------------------------------------------------------------------

// K~_{lambda,(1^{k-1},n-k+1)}(q,t) = sum over SYT(lambda) of
// q^{maj_{1,n-k+1}} t^{comaj_{n-k+1,n}}.
inline QTPolynomial kostka_hook(const Partition& lambda, int n, int k) {
    if (lambda.weight() != n) throw std::invalid_argument("kostka_hook: |lambda| must equal n");
    if (k < 1 || k > n) throw std::invalid_argument("kostka_hook: need 1 <= k <= n");
    QTPolynomial r;
    for (const auto& T : gen_syt(lambda))
        r.add(maj_window(T, 1, n - k + 1), comaj_window(T, n - k + 1, n), 1);
    return r;
}

// Full Schur expansion of the modified Macdonald polynomial for the hook.
inline std::map<Partition, QTPolynomial> htilde_hook(int n, int k) {
    std::map<Partition, QTPolynomial> out;
    for (const auto& lam : gen_partitions(n)) out.emplace(lam, kostka_hook(lam, n, k));
    return out;
}

// ---------------------------------------------------------------------------
// Haglund filling statistics
// ---------------------------------------------------------------------------

// Bijective filling of a Ferrers shape; rows[0] is the bottom row.
struct Filling {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int n() const { return shape.weight(); }
    int at(int r, int c) const { return rows[r - 1][c - 1]; }  // 1-based

    // Reading order: rows top to bottom, left to right within a row.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            w.insert(w.end(), it->begin(), it->end());
        return w;
    }

    static Filling from_reading_word(const Partition& shape, const std::vector<int>& word) {
        Filling f;
        f.shape = shape;
        f.rows.resize(shape.length());
        std::size_t pos = 0;
        for (int r = shape.length(); r >= 1; --r)
            for (int c = 1; c <= shape.part(r); ++c) f.rows[r - 1].push_back(word[pos++]);
        return f;
    }
};

struct FillingStats {
    std::vector<std::pair<int, int>> des;  // descent cells (row, col)
    long long inv_pairs = 0;               // |Inv|
    long long inv = 0;                     // |Inv| - sum of arms over descents
    long long maj = 0;                     // sum of (leg+1) over descents
    std::set<int> d_set;                   // Des of the inverse reading word
};

inline FillingStats filling_stats(const Filling& xi) {
    const Partition& sh = xi.shape;
    FillingStats st;
    auto arm = [&](int r, int c) { return sh.part(r) - c; };
    auto leg = [&](int r, int c) {
        int l = 0;
        for (int rr = r + 1; rr <= sh.length(); ++rr)
            if (sh.part(rr) >= c) ++l;
        return l;
    };
    for (int r = 2; r <= sh.length(); ++r)
        for (int c = 1; c <= sh.part(r); ++c)
            if (xi.at(r, c) >= xi.at(r - 1, c)) {
                st.des.emplace_back(r, c);
                st.maj += leg(r, c) + 1;
            }

    // Attack pairs, u before v in reading order: same row with u left of v, or
    // u in the row above and strictly to the right of v.
    long long arm_sum = 0;
    for (auto& [r, c] : st.des) arm_sum += arm(r, c);
    for (int r = 1; r <= sh.length(); ++r) {
        for (int c = 1; c <= sh.part(r); ++c) {
            for (int c2 = c + 1; c2 <= sh.part(r); ++c2)
                if (xi.at(r, c) > xi.at(r, c2)) st.inv_pairs++;
            if (r > 1) {
                for (int c2 = 1; c2 < c && c2 <= sh.part(r - 1); ++c2)
                    if (xi.at(r, c) > xi.at(r - 1, c2)) st.inv_pairs++;
            }
        }
    }
    st.inv = st.inv_pairs - arm_sum;

    Permutation w(xi.reading_word());
    st.d_set = w.inverse().des();
    return st;
}

// Sum of q^{inv} t^{maj} over all n! bijective fillings of the hook shape.
inline QTPolynomial hilbert_fillings(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("hilbert_fillings: need 1 <= k <= n");
    if (n > 7) throw ScaleError("hilbert_fillings: n > 7 exceeds the guard");
    Partition sh = hook_shape(n, k);
    QTPolynomial r;
    for (const auto& pi : all_permutations(n)) {
        auto st = filling_stats(Filling::from_reading_word(sh, pi.w));
        r.add(static_cast<int>(st.inv), static_cast<int>(st.maj), 1);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Gessel quasi-symmetric functions and truncated Schur expansions
// ---------------------------------------------------------------------------

// Q_{n,D} in numvars variables: sum of x_{a_1}...x_{a_n} over weakly
// increasing words that rise strictly at the positions of D. Keys are
// exponent vectors of length numvars.
inline std::map<std::vector<int>, long long> quasisym_Q(int n, const std::set<int>& d, int numvars) {
    std::map<std::vector<int>, long long> out;
    std::vector<int> word(n);
    auto rec = [&](auto&& self, int pos, int min_letter) -> void {
        if (pos == n) {
            std::vector<int> exp(numvars, 0);
            for (int a : word) exp[a - 1]++;
            out[exp]++;
            return;
        }
        for (int a = min_letter; a <= numvars; ++a) {
            word[pos] = a;
            int next_min = d.count(pos + 1) ? a + 1 : a;  // strict rise demanded at D
            self(self, pos + 1, next_min);
        }
    };
    rec(rec, 0, 1);
    return out;
}

// s_lambda(x_1..x_numvars) by semistandard tableau enumeration.
inline std::map<std::vector<int>, long long> schur_truncated(const Partition& lambda, int numvars) {
    std::map<std::vector<int>, long long> out;
    std::vector<std::vector<int>> rows(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) rows[r].assign(lambda.parts[r], 0);
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == lambda.length()) {
            std::vector<int> exp(numvars, 0);
            for (const auto& row : rows)
                for (int v : row) exp[v - 1]++;
            out[exp]++;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc > lambda.part(r + 1)) { nr = r + 1; nc = 1; }
        int lo = 1;
        if (c > 1) lo = std::max(lo, rows[r][c - 2]);          // weakly increasing rows
        if (r > 0 && lambda.part(r) >= c) lo = std::max(lo, rows[r - 1][c - 1] + 1);  // strict up columns
        for (int v = lo; v <= numvars; ++v) {
            rows[r][c - 1] = v;
            self(self, nr, nc);
        }
    };
    rec(rec, 0, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Signed words, order-dependent descents, and the sign-reversing involutions
// ---------------------------------------------------------------------------

// Letters are nonzero ints: +v is the positive letter v, -v the negative one.
struct SignedWord {
    std::vector<int> a;

    int n() const { return static_cast<int>(a.size()); }
    int pos_count() const { int c = 0; for (int v : a) c += v > 0; return c; }
    int neg_count() const { return n() - pos_count(); }

    // Multiset of absolute values as an exponent vector over 1..m.
    std::vector<int> z_type(int m) const {
        std::vector<int> t(m, 0);
        for (int v : a) t[std::abs(v) - 1]++;
        return t;
    }

    bool operator==(const SignedWord& o) const { return a == o.a; }
    bool operator<(const SignedWord& o) const { return a < o.a; }
};

enum class WordOrder {
    positive,  // 1 < 2 < ... (positive letters only)
    prec,      // 1 < 2 < ... < m < m- < (m-1)- < ... < 1-
    precstar   // 1- < 2- < ... < m- < m < m-1 < ... < 1
};

// Rank of a letter in the chosen order; m is the truncated alphabet size.
inline int letter_rank(int v, WordOrder ord, int m) {
    switch (ord) {
        case WordOrder::positive:
            if (v < 0) throw std::invalid_argument("letter_rank: negative letter under positive order");
            return v;
        case WordOrder::prec:
            return v > 0 ? v : 2 * m + 1 - (-v);
        case WordOrder::precstar:
            return v < 0 ? -v : 2 * m + 1 - v;
    }
    return 0;
}

// Des(w, ord): equal negative letters make a descent, otherwise strictly
// larger rank does.
inline std::set<int> signed_descents(const SignedWord& w, WordOrder ord, int m) {
    std::set<int> d;
    for (int i = 1; i < w.n(); ++i) {
        int u = w.a[i - 1], v = w.a[i];
        int ru = letter_rank(u, ord, m), rv = letter_rank(v, ord, m);
        bool desc = (u < 0 && v < 0) ? ru >= rv : ru > rv;
        if (desc) d.insert(i);
    }
    return d;
}

struct WordStats {
    std::set<int> des;
    int maj_win = 0;    // maj_{1,n-k+1}
    int comaj_win = 0;  // comaj_{n-k+1,n}
    int pos = 0, neg = 0;
};

inline WordStats word_stats(const SignedWord& w, WordOrder ord, int m, int k) {
    int n = w.n();
    if (k < 1 || k > n) throw std::invalid_argument("word_stats: need 1 <= k <= n");
    WordStats st;
    st.des = signed_descents(w, ord, m);
    st.pos = w.pos_count();
    st.neg = w.neg_count();
    for (int i : st.des) {
        if (i < n - k + 1) st.maj_win += i;
        if (i >= n - k + 1) st.comaj_win += n - i;
    }
    return st;
}

// I_k: find the smallest repeated absolute letter j in |a_1..a_{n-k+1}|, take
// the rightmost occurrence a_t of that letter in the window, then flip the
// sign of the leftmost occurrence of the smallest absolute letter of
// |a_1..a_{t-1}|. Words with distinct absolute values in the window are fixed.
inline SignedWord involution_I(const SignedWord& w, int k) {
    int n = w.n();
    int limit = n - k + 1;
    int j = 0;
    {
        std::map<int, int> count;
        for (int i = 0; i < limit; ++i) count[std::abs(w.a[i])]++;
        for (const auto& [letter, c] : count)
            if (c >= 2) { j = letter; break; }
    }
    if (j == 0) return w;
    int t = 0;
    for (int i = limit; i >= 1; --i)
        if (std::abs(w.a[i - 1]) == j) { t = i; break; }
    int small = 0;
    for (int i = 1; i <= t - 1; ++i)
        if (small == 0 || std::abs(w.a[i - 1]) < small) small = std::abs(w.a[i - 1]);
    SignedWord b = w;
    for (int i = 1; i <= t - 1; ++i)
        if (std::abs(w.a[i - 1]) == small) { b.a[i - 1] = -b.a[i - 1]; break; }
    return b;
}

// J_k: mirror image acting on the window a_{n-k+1}..a_n, flipping the
// rightmost occurrence of the smallest absolute letter after the leftmost
// repeated letter.
inline SignedWord involution_J(const SignedWord& w, int k) {
    int n = w.n();
    int start = n - k + 1;
    int j = 0;
    {
        std::map<int, int> count;
        for (int i = start; i <= n; ++i) count[std::abs(w.a[i - 1])]++;
        for (const auto& [letter, c] : count)
            if (c >= 2) { j = letter; break; }
    }
    if (j == 0) return w;
    int t = 0;
    for (int i = start; i <= n; ++i)
        if (std::abs(w.a[i - 1]) == j) { t = i; break; }
    int small = 0;
    for (int i = t + 1; i <= n; ++i)
        if (small == 0 || std::abs(w.a[i - 1]) < small) small = std::abs(w.a[i - 1]);
    SignedWord b = w;
    for (int i = n; i >= t + 1; --i)
        if (std::abs(w.a[i - 1]) == small) { b.a[i - 1] = -b.a[i - 1]; break; }
    return b;
}

// Weight U(a): q^{pos} (-1)^{neg} q^{maj_{1,n-k+1}} t^{comaj_{n-k+1,n}}
// under the order prec. The z-monomial is tracked separately as z_type.
inline QTPolynomial weight_U(const SignedWord& w, int m, int k) {
    auto st = word_stats(w, WordOrder::prec, m, k);
    QTPolynomial r;
    r.add(st.pos + st.maj_win, st.comaj_win, st.neg % 2 == 0 ? 1 : -1);
    return r;
}

// Weight V(a): t^{pos} (-1)^{neg} q^{maj} t^{comaj} under precstar.
inline QTPolynomial weight_V(const SignedWord& w, int m, int k) {
    auto st = word_stats(w, WordOrder::precstar, m, k);
    QTPolynomial r;
    r.add(st.maj_win, st.pos + st.comaj_win, st.neg % 2 == 0 ? 1 : -1);
    return r;
}

// ---------------------------------------------------------------------------
// Axiom verification by signed-word sums
// ---------------------------------------------------------------------------

struct AxiomReport {
    bool a1 = false, a2 = false, a3 = false;
    bool fixed_point_match_1 = false, fixed_point_match_2 = false;
    std::vector<int> offending_type;  // empty when all pass
    std::string detail;

    bool all_ok() const { return a1 && a2 && a3; }
};

namespace detail {

inline void enumerate_signed_words(int n, int m, const std::function<void(const SignedWord&)>& visit) {
    SignedWord w;
    w.a.assign(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            visit(w);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            w.a[pos] = v;
            self(self, pos + 1);
            w.a[pos] = -v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

inline Partition type_partition(const std::vector<int>& exp) {
    std::vector<int> parts;
    for (int e : exp)
        if (e > 0) parts.push_back(e);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

}  // namespace detail

// Verifies the three characterizing properties of the hook Macdonald
// polynomial on the signed-word model with a truncated alphabet:
//   A1: the U-weighted sum is supported on monomial types dominated by
//       (k, 1^{n-k});
//   A2: the V-weighted sum is supported on types dominated by (n-k+1, 1^{k-1});
//   A3: the coefficient of z_1^n in the positive-word sum is 1.
// A1 and A2 are each computed twice: as the full signed sum and as the sum
// over involution fixed points; the two must agree term by term.
inline AxiomReport axiom_check(int n, int k, int numvars) {
    if (k < 1 || k > n) throw std::invalid_argument("axiom_check: need 1 <= k <= n");
    if (n > 5) throw ScaleError("axiom_check: n > 5 exceeds the guard");
    AxiomReport rep;
    int m = numvars;

    using ZSum = std::map<std::vector<int>, QTPolynomial>;
    auto accumulate = [&](bool use_v, bool fixed_only) {
        ZSum sum;
        detail::enumerate_signed_words(n, m, [&](const SignedWord& w) {
            if (fixed_only) {
                SignedWord img = use_v ? involution_J(w, k) : involution_I(w, k);
                if (!(img == w)) return;
            }
            QTPolynomial wt = use_v ? weight_V(w, m, k) : weight_U(w, m, k);
            auto [it, inserted] = sum.try_emplace(w.z_type(m), QTPolynomial{});
            it->second += wt;
            if (it->second.is_zero()) sum.erase(it);
        });
        return sum;
    };

    auto support_ok = [&](const ZSum& sum, const Partition& bound, std::vector<int>& offender) {
        for (const auto& [exp, qt] : sum) {
            if (!dominance_leq(detail::type_partition(exp), bound)) {
                offender = exp;
                return false;
            }
        }
        return true;
    };

    std::vector<int> bound1{k};
    bound1.insert(bound1.end(), n - k, 1);
    std::vector<int> bound2{n - k + 1};
    bound2.insert(bound2.end(), k - 1, 1);

    ZSum full1 = accumulate(false, false), fixed1 = accumulate(false, true);
    rep.fixed_point_match_1 = full1 == fixed1;
    rep.a1 = rep.fixed_point_match_1 && support_ok(full1, Partition(bound1), rep.offending_type);

    ZSum full2 = accumulate(true, false), fixed2 = accumulate(true, true);
    rep.fixed_point_match_2 = full2 == fixed2;
    rep.a2 = rep.fixed_point_match_2 && support_ok(full2, Partition(bound2), rep.offending_type);

    // A3 over positive words: only 1^n lands on z_1^n, with both statistics 0.
    QTPolynomial z1n;
    std::vector<int> word(n, 0);
    auto rec = [&](auto&& self, int p) -> void {
        if (p == n) {
            SignedWord w{word};
            if (w.z_type(m)[0] == n) {
                auto st = word_stats(w, WordOrder::prec, m, k);
                z1n.add(st.maj_win, st.comaj_win, 1);
            }
            return;
        }
        for (int v = 1; v <= m; ++v) {
            word[p] = v;
            self(self, p + 1);
        }
    };
    rec(rec, 0);
    rep.a3 = z1n == QTPolynomial::one();

    if (!rep.a1) rep.detail = "A1 support or involution reduction failed";
    else if (!rep.a2) rep.detail = "A2 support or involution reduction failed";
    else if (!rep.a3) rep.detail = "A3 normalization failed";
    return rep;
}

}  // namespace hookmod
