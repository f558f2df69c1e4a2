#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hookmod/bases.hpp"
#include "hookmod/combinatorics.hpp"
#include "hookmod/harmonics.hpp"
#include "hookmod/rational.hpp"
#include "hookmod/straighten.hpp"

namespace hookmod {

// ---------------------------------------------------------------------------
// Descent classes and the explicit action
// ---------------------------------------------------------------------------

// Basis of R_lambda^(k): the descent class {pi : Des(pi) = A_lambda}, in lex
// word order.
inline std::vector<Permutation> r_lambda_basis(const NKBipartition& lam) {
    auto target = a_lambda(lam);
    std::vector<Permutation> out;
    for (const auto& pi : all_permutations(lam.n))
        if (pi.des() == target) out.push_back(pi);
    return out;
}

// A_j(pi) for pi with j+1 immediately preceding j: all rearrangements of the
// maximal increasing window around the pair that stay increasing on both
// sides of the split, except pi and s_j pi themselves.
inline std::vector<Permutation> a_j_set(const Permutation& pi, int j) {
    int n = pi.n();
    if (j < 1 || j >= n) throw std::invalid_argument("a_j_set: need 1 <= j < n");
    auto inv = pi.inverse();
    int t = inv(j + 1);
    if (inv(j) != t + 1)
        throw std::invalid_argument("a_j_set: j+1 must immediately precede j in pi");
    auto des = pi.des();
    int m1 = 0, m2 = n;
    for (int i : des)
        if (i <= t - 1) m1 = std::max(m1, i);
    for (int i : des)
        if (i >= t + 1) m2 = std::min(m2, i);

    std::vector<int> window;
    for (int i = m1 + 1; i <= m2; ++i) window.push_back(pi(i));
    std::sort(window.begin(), window.end());
    int wlen = m2 - m1, first = t - m1;

    std::vector<Permutation> out;
    std::vector<int> pick(first);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == first) {
            std::vector<bool> used(wlen, false);
            std::vector<int> word = pi.w;
            for (int p = 0; p < first; ++p) {
                word[m1 + p] = window[pick[p]];
                used[pick[p]] = true;
            }
            int q = t;
            for (int i = 0; i < wlen; ++i)
                if (!used[i]) word[q++] = window[i];
            Permutation sigma(word);
            if (sigma == pi || sigma == pi.swap_values(j)) return;
            out.push_back(std::move(sigma));
            return;
        }
        for (int i = start; i < wlen; ++i) {
            pick[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct ActionMatrix {
    int j = 0;
    std::vector<std::vector<long long>> m;  // column = image of a basis element

    int dim() const { return static_cast<int>(m.size()); }
};

namespace detail {

inline ActionMatrix identity_action(int j, int dim) {
    ActionMatrix a;
    a.j = j;
    a.m.assign(dim, std::vector<long long>(dim, 0));
    for (int i = 0; i < dim; ++i) a.m[i][i] = 1;
    return a;
}

inline ActionMatrix matrix_product(const ActionMatrix& a, const ActionMatrix& b) {
    int d = a.dim();
    ActionMatrix r;
    r.j = -1;
    r.m.assign(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int l = 0; l < d; ++l) {
            if (a.m[i][l] == 0) continue;
            for (int c = 0; c < d; ++c) r.m[i][c] += a.m[i][l] * b.m[l][c];
        }
    return r;
}

}  // namespace detail

// Matrix of s_j on R_lambda^(k) in the descent basis. When j and j+1 are not
// adjacent in pi the image is the descent monomial of s_j pi; when j
// immediately precedes j+1 the basis element is fixed. In the remaining case
// the image monomial is straightened: terms carrying an invariant factor die
// in the quotient by the ideal, terms whose exponent bipartition sits
// strictly below lambda die in the filtration, and what survives is the
// column. Entries come out in {0, +-1}.
inline ActionMatrix action_matrix(const NKBipartition& lam, int j) {
    auto basis = r_lambda_basis(lam);
    std::map<Permutation, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) index.emplace(basis[i], i);
    auto target = a_lambda(lam);
    int n = lam.n, k = lam.k;

    ActionMatrix a;
    a.j = j;
    a.m.assign(basis.size(), std::vector<long long>(basis.size(), 0));
    for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
        const Permutation& pi = basis[c];
        auto inv = pi.inverse();
        int pj = inv(j), pj1 = inv(j + 1);
        if (std::abs(pj1 - pj) > 1) {
            // s_j . a_pi is literally the descent monomial of s_j pi, which
            // stays in the class.
            a.m[index.at(pi.swap_values(j))][c] = 1;
        } else if (pj1 == pj + 1) {
            a.m[c][c] = 1;
        } else {
            Monomial image = descent_monomial(pi, k);
            std::swap(image.xe[j - 1], image.xe[j]);
            std::swap(image.ye[j - 1], image.ye[j]);
            for (const auto& term : straighten(image, n, k)) {
                if (term.nu.length() > 0) continue;  // invariant factor: zero in the quotient
                auto it = index.find(term.pi);
                if (it != index.end()) {
                    a.m[it->second][c] += term.coef;
                } else {
                    // dropped terms must sit strictly below lambda in the filtration
                    auto lt = exponent_bipartition(descent_monomial(term.pi, k), k);
                    auto ll = exponent_bipartition(descent_monomial(pi, k), k);
                    if (!(dominance_leq(lt.first, ll.first) && dominance_leq(lt.second, ll.second)))
                        throw std::logic_error("action_matrix: term outside the filtration");
                }
            }
        }
    }
    return a;
}

inline std::vector<ActionMatrix> all_action_matrices(const NKBipartition& lam) {
    std::vector<ActionMatrix> out;
    for (int j = 1; j < lam.n; ++j) out.push_back(action_matrix(lam, j));
    return out;
}

// ---------------------------------------------------------------------------
// Characters and decomposition into irreducibles
// ---------------------------------------------------------------------------

struct ClassFunction {
    int n = 0;
    std::map<Partition, long long> values;  // cycle type -> character value

    long long dim() const {
        std::vector<int> ones(n, 1);
        return values.at(Partition(ones));
    }
};

namespace detail {

// Representative of the cycle type as adjacent-transposition indices: each
// cycle acts on a consecutive block, and the block cycle (a,a+1,...,b) is
// s_a s_{a+1} ... s_{b-1} applied by left multiplication in reverse.
inline std::vector<int> cycle_type_word(const Partition& type) {
    std::vector<int> gens;
    int a = 1;
    for (int c : type.parts) {
        for (int i = a; i < a + c - 1; ++i) gens.push_back(i);
        a += c;
    }
    return gens;
}

}  // namespace detail

// Character of the representation spanned by the generator matrices.
inline ClassFunction character_of(const std::vector<ActionMatrix>& gens, int n) {
    ClassFunction chi;
    chi.n = n;
    int dim = gens.empty() ? 1 : gens[0].dim();
    for (const auto& type : gen_partitions(n)) {
        ActionMatrix prod = detail::identity_action(0, dim);
        for (int g : detail::cycle_type_word(type)) prod = detail::matrix_product(prod, gens[g - 1]);
        long long tr = 0;
        for (int i = 0; i < dim; ++i) tr += prod.m[i][i];
        chi.values[type] = tr;
    }
    return chi;
}

namespace detail {

// Murnaghan-Nakayama recursion: strip one border strip per cycle length.
// A strip spanning rows i..jj (0-based, parts decreasing) shrinks row m to
// lam[m+1]-1 for m < jj and removes the remainder from row jj; the sign is
// (-1)^{rows spanned - 1}.
inline long long mn_eval(const std::vector<int>& lam, const std::vector<int>& type, std::size_t ti,
                         std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (ti == type.size()) return lam.empty() ? 1 : 0;
    auto key = std::make_pair(lam, ti);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = type[ti];
    long long sum = 0;
    int len = static_cast<int>(lam.size());
    for (int i = 0; i < len; ++i) {
        for (int jj = i; jj < len; ++jj) {
            std::vector<int> nl = lam;
            int removed = 0;
            bool valid = true;
            for (int m = i; m < jj; ++m) {
                int target = lam[m + 1] - 1;
                if (target > nl[m]) { valid = false; break; }
                removed += nl[m] - target;
                nl[m] = target;
            }
            if (!valid || removed >= r) continue;
            int take = r - removed;
            if (take > nl[jj]) continue;
            if (jj > i && take < 1) continue;
            nl[jj] -= take;
            bool part_ok = true;
            for (int m = 0; m + 1 < len; ++m)
                if (nl[m] < nl[m + 1]) { part_ok = false; break; }
            if (!part_ok) continue;
            while (!nl.empty() && nl.back() == 0) nl.pop_back();
            int height = jj - i;
            sum += (height % 2 == 0 ? 1 : -1) * mn_eval(nl, type, ti + 1, memo);
        }
    }
    memo[key] = sum;
    return sum;
}

}  // namespace detail

// Murnaghan-Nakayama evaluation of the irreducible character chi^lambda at a
// cycle type.
inline long long mn_character(const Partition& lambda, const Partition& type) {
    if (lambda.weight() != type.weight()) throw std::invalid_argument("mn_character: weight mismatch");
    if (lambda.weight() == 0) return 1;
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    return detail::mn_eval(lambda.parts, type.parts, 0, memo);
}

// Character table of S_n: chi^lambda per cycle type. Guarded at n <= 8.
inline std::map<Partition, ClassFunction> irreducible_characters(int n) {
    if (n > 8) throw ScaleError("irreducible_characters: n > 8 exceeds the guard");
    std::map<Partition, ClassFunction> table;
    auto types = gen_partitions(n);
    for (const auto& lam : gen_partitions(n)) {
        ClassFunction chi;
        chi.n = n;
        for (const auto& ty : types) chi.values[ty] = mn_character(lam, ty);
        table.emplace(lam, std::move(chi));
    }
    return table;
}

// |class of cycle type mu| = n! / (prod i^{m_i} m_i!).
inline Integer conjugacy_class_size(const Partition& type) {
    int n = type.weight();
    Integer z(1);
    std::map<int, int> mult;
    for (int p : type.parts) mult[p]++;
    for (const auto& [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return factorial(n) / z;
}

// Multiplicities <chi, chi^lambda>. Throws if any multiplicity fails to be a
// nonnegative integer, which signals an upstream bug.
inline std::map<Partition, long long> decompose(const ClassFunction& chi) {
    int n = chi.n;
    auto table = irreducible_characters(n);
    Integer order = factorial(n);
    std::map<Partition, long long> out;
    for (const auto& [lam, ir] : table) {
        Integer acc(0);
        for (const auto& [ty, val] : chi.values)
            acc += conjugacy_class_size(ty) * Integer(static_cast<long>(val)) *
                   Integer(static_cast<long>(ir.values.at(ty)));
        if (acc % order != 0) throw std::logic_error("decompose: non-integer multiplicity");
        Integer mult = acc / order;
        if (mult < 0) throw std::logic_error("decompose: negative multiplicity");
        if (mult != 0) out[lam] = mult.get_si();
    }
    return out;
}

// #{T in SYT(shape) : Des(T) = A}.
inline long long syt_descent_count(const Partition& shape, const std::set<int>& a) {
    long long c = 0;
    for (const auto& T : gen_syt(shape))
        if (des_tableau(T) == a) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// Bigraded decomposition of the hook module into descent representations
// ---------------------------------------------------------------------------

// Weight of a bipartition: t1 collects (n-i) over descent positions i >= k
// (the y side), t2 collects i over positions i < k (the x side). The module
// bidegree of the corresponding component is (x-degree, y-degree) = (t2, t1).
inline std::pair<int, int> bipartition_weight(const NKBipartition& lam) {
    int t1 = 0, t2 = 0;
    for (int i : a_lambda(lam)) {
        if (i >= lam.k) t1 += lam.n - i;
        else t2 += i;
    }
    return {t1, t2};
}

inline std::map<std::pair<int, int>, std::vector<NKBipartition>> bigraded_decomposition(int n, int k) {
    std::map<std::pair<int, int>, std::vector<NKBipartition>> out;
    for (const auto& lam : nk_bipartitions(n, k)) out[bipartition_weight(lam)].push_back(lam);
    return out;
}

// ---------------------------------------------------------------------------
// Multiplicity check against the tableau statistics
// ---------------------------------------------------------------------------

struct MultiplicityMismatch {
    Partition lambda;
    int xdeg = 0, ydeg = 0;
    long long from_module = 0, from_tableaux = 0;
};

struct MultiplicityReport {
    bool ok = true;
    std::vector<MultiplicityMismatch> mismatches;
};

namespace detail {

// Trace of sigma acting diagonally on one echelon bucket.
inline Rational bucket_trace(const Echelon& ech, const Permutation& sigma) {
    Rational tr(0);
    int idx = 0;
    for (const auto& [piv, row] : ech.rows()) {
        auto coords = ech.coordinates(diagonal_action(sigma, row));
        tr += coords[idx];
        ++idx;
    }
    return tr;
}

inline Permutation cycle_type_representative(const Partition& type) {
    int n = type.weight();
    std::vector<int> w(n);
    int a = 1;
    for (int c : type.parts) {
        for (int i = a; i < a + c - 1; ++i) w[i - 1] = i + 1;
        w[a + c - 2] = a;
        a += c;
    }
    return Permutation(w);
}

}  // namespace detail

// For every bidegree (h,h') and shape lambda, the multiplicity of chi^lambda
// in the (h,h') component of the hook module must equal the number of SYT of
// shape lambda with maj_{1,n-k+1} = h' and comaj_{n-k+1,n} = h (q counts the
// y-degree under the fixed orientation). Guarded at n <= 5.
inline MultiplicityReport stembridge_multiplicity_check(int n, int k) {
    if (n > 5) throw ScaleError("stembridge_multiplicity_check: n > 5 exceeds the guard");
    MultiplicityReport rep;
    auto H = hook_harmonics(n, k);
    auto types = gen_partitions(n);
    auto shapes = gen_partitions(n);

    // maj/comaj tables per shape
    std::map<Partition, std::map<std::pair<int, int>, long long>> tableau_counts;
    for (const auto& lam : shapes)
        for (const auto& T : gen_syt(lam))
            tableau_counts[lam][{maj_window(T, 1, n - k + 1), comaj_window(T, n - k + 1, n)}]++;

    std::set<std::pair<int, int>> all_bidegrees;
    for (const auto& [bd, e] : H.buckets) all_bidegrees.insert(bd);
    for (const auto& [lam, counts] : tableau_counts)
        for (const auto& [mc, c] : counts) all_bidegrees.insert({mc.second, mc.first});  // (x,y) = (comaj, maj)

    for (const auto& bd : all_bidegrees) {
        ClassFunction chi;
        chi.n = n;
        for (const auto& ty : types) {
            Rational tr(0);
            auto it = H.buckets.find(bd);
            if (it != H.buckets.end())
                tr = detail::bucket_trace(it->second, detail::cycle_type_representative(ty));
            if (tr.get_den() != 1) throw std::logic_error("stembridge_multiplicity_check: non-integer trace");
            chi.values[ty] = tr.get_num().get_si();
        }
        auto mults = decompose(chi);
        for (const auto& lam : shapes) {
            long long from_module = mults.count(lam) ? mults.at(lam) : 0;
            // orientation: q (maj) counts y-degree, t (comaj) counts x-degree
            long long from_tab = 0;
            auto it = tableau_counts.find(lam);
            if (it != tableau_counts.end()) {
                auto jt = it->second.find({bd.second, bd.first});
                if (jt != it->second.end()) from_tab = jt->second;
            }
            if (from_module != from_tab) {
                rep.ok = false;
                rep.mismatches.push_back({lam, bd.first, bd.second, from_module, from_tab});
            }
        }
    }
    return rep;
}

}  // namespace hookmod
