#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hookmod/combinatorics.hpp"
#include "hookmod/polyring.hpp"
#include "hookmod/qt_polynomial.hpp"

namespace hookmod {

// ---------------------------------------------------------------------------
// Exact row echelon forms of polynomial subspaces
// ---------------------------------------------------------------------------

// Reduced row echelon form over Q, rows keyed by leading monomial in the
// global order. The RREF of a subspace is unique, so two spanning sets of the
// same space produce identical Echelon objects.
class Echelon {
  public:
    using RowMap = std::map<Monomial, Polynomial, GrlexDesc>;

    // Fully reduces p; inserts the normalized remainder if nonzero.
    // Returns true if the dimension grew.
    bool insert(Polynomial p) {
        p = reduce(p);
        if (p.is_zero()) return false;
        Monomial lead = p.leading_monomial();
        p = p * (Rational(1) / p.coeff(lead));
        for (auto& [piv, row] : rows_) {
            Rational c = row.coeff(lead);
            if (c != 0) row -= p * c;
        }
        rows_.emplace(std::move(lead), std::move(p));
        return true;
    }

    Polynomial reduce(Polynomial p) const {
        for (const auto& [piv, row] : rows_) {
            Rational c = p.coeff(piv);
            if (c != 0) p -= row * c;
        }
        return p;
    }

    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

    // Coordinates of p in the row basis (row order = pivot order).
    // Throws if p is outside the span.
    std::vector<Rational> coordinates(Polynomial p) const {
        std::vector<Rational> out;
        out.reserve(rows_.size());
        for (const auto& [piv, row] : rows_) {
            Rational c = p.coeff(piv);
            out.push_back(c);
            if (c != 0) p -= row * c;
        }
        if (!p.is_zero()) throw std::invalid_argument("coordinates: polynomial outside span");
        return out;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    const RowMap& rows() const { return rows_; }

    bool operator==(const Echelon& o) const { return rows_ == o.rows_; }

  private:
    RowMap rows_;
};

// Bigraded subspace: one echelon per (x-degree, y-degree) bucket.
struct BigradedBasis {
    std::map<std::pair<int, int>, Echelon> buckets;

    // Routes a homogeneous polynomial into its bucket.
    bool insert(const Polynomial& p) {
        if (p.is_zero()) return false;
        auto bd = p.homogeneous_bidegree();
        if (!bd) throw std::invalid_argument("BigradedBasis::insert: polynomial is not bihomogeneous");
        return buckets[*bd].insert(p);
    }

    static BigradedBasis from_polynomials(const std::vector<Polynomial>& ps) {
        BigradedBasis b;
        for (const auto& p : ps) b.insert(p);
        return b;
    }

    int total_dim() const {
        int d = 0;
        for (const auto& [bd, e] : buckets) d += e.dim();
        return d;
    }

    int dim_at(int xdeg, int ydeg) const {
        auto it = buckets.find({xdeg, ydeg});
        return it == buckets.end() ? 0 : it->second.dim();
    }

    bool operator==(const BigradedBasis& o) const { return buckets == o.buckets; }
};

// ---------------------------------------------------------------------------
// The determinant Delta_mu and the module it spans
// ---------------------------------------------------------------------------

// Cells of mu in row-major order from the bottom row, as (row, col) 1-based.
inline std::vector<std::pair<int, int>> shape_cells(const Partition& mu) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = 1; c <= mu.part(r); ++c) cells.emplace_back(r, c);
    return cells;
}

// Delta_mu = det( x_i^{row(w_j)-1} y_i^{col(w_j)-1} ), expanded by Leibniz
// over S_n. Guarded at n <= 7 (n! terms).
inline Polynomial delta_mu(const Partition& mu, int n) {
    if (mu.weight() != n) throw std::invalid_argument("delta_mu: |mu| must equal n");
    if (n > 7) throw ScaleError("delta_mu: n > 7 exceeds the expansion guard");
    auto cells = shape_cells(mu);
    Polynomial d(n);
    for (const auto& sigma : all_permutations(n)) {
        Monomial m(n);
        for (int i = 1; i <= n; ++i) {
            auto [row, col] = cells[sigma(i) - 1];
            m.xe[i - 1] = row - 1;
            m.ye[i - 1] = col - 1;
        }
        d.add_term(m, sigma.sign());
    }
    return d;
}

// Closure of a bihomogeneous polynomial under all partial derivatives,
// echelonized per bidegree. Buckets only feed buckets of lower total degree,
// so one sweep from the top degree down is complete.
inline BigradedBasis derivative_span(const Polynomial& delta) {
    BigradedBasis basis;
    if (delta.is_zero()) return basis;
    basis.insert(delta);
    auto bd = *delta.homogeneous_bidegree();
    int n = delta.nvars();
    for (int total = bd.first + bd.second; total > 0; --total) {
        for (const auto& [key, ech] : basis.buckets) {
            if (key.first + key.second != total) continue;
            for (const auto& [piv, row] : ech.rows()) {
                for (int i = 1; i <= n; ++i) {
                    for (bool y_var : {false, true}) {
                        Polynomial d = row.partial(y_var, i);
                        if (!d.is_zero()) basis.insert(d);
                    }
                }
            }
        }
    }
    return basis;
}

// The hook module pipeline: span of all derivatives of Delta over the hook
// shape. Guarded at n <= 6.
inline BigradedBasis hook_harmonics(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("hook_harmonics: need 1 <= k <= n");
    if (n > 6) throw ScaleError("hook_harmonics: n > 6 exceeds the pipeline guard");
    return derivative_span(delta_mu(hook_shape(n, k), n));
}

// ---------------------------------------------------------------------------
// Hook ideal generators
// ---------------------------------------------------------------------------

struct HookIdealGens {
    int n = 0, k = 0;
    std::vector<Polynomial> generators;
};

// Generators of the dual ideal for the hook shape: power sums p_1..p_n in
// each alphabet (they generate the symmetric functions without constant
// term), all squarefree x-monomials of support size k, all squarefree
// y-monomials of support size n-k+1, and the products x_i y_i.
inline HookIdealGens hook_ideal_generators(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("hook_ideal_generators: need 1 <= k <= n");
    HookIdealGens g{n, k, {}};
    for (int j = 1; j <= n; ++j) {
        g.generators.push_back(power_sum(n, j, false));
        g.generators.push_back(power_sum(n, j, true));
    }
    auto squarefree = [&](int size, bool y_alphabet) {
        std::vector<int> idx(size);
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == size) {
                Monomial m(n);
                for (int t = 0; t < size; ++t) {
                    if (y_alphabet) m.ye[idx[t] - 1] = 1; else m.xe[idx[t] - 1] = 1;
                }
                g.generators.push_back(Polynomial::term(m, 1));
                return;
            }
            for (int i = start; i <= n; ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 1);
    };
    squarefree(k, false);
    squarefree(n - k + 1, true);
    for (int i = 1; i <= n; ++i) {
        Monomial m(n);
        m.xe[i - 1] = 1;
        m.ye[i - 1] = 1;
        g.generators.push_back(Polynomial::term(m, 1));
    }
    return g;
}

// ---------------------------------------------------------------------------
// Hilbert series and the q/t orientation
// ---------------------------------------------------------------------------

// Hilbert series of a bigraded basis in module coordinates:
// q tracks x-degree, t tracks y-degree.
inline QTPolynomial bigraded_hilbert(const BigradedBasis& b) {
    QTPolynomial h;
    for (const auto& [bd, e] : b.buckets) h.add(bd.first, bd.second, e.dim());
    return h;
}

// Orientation between module bidegree (x,y) and the (q,t) of the tableau
// statistics. Fixed once by matching the module Hilbert series against the
// standard-tableau sums at n = 3, 4: q counts the y-degree and t counts the
// x-degree. Every cross-convention comparison goes through to_tableau_qt.
enum class QtOrientation { q_counts_x, q_counts_y };
inline constexpr QtOrientation kQtOrientation = QtOrientation::q_counts_y;

inline QTPolynomial to_tableau_qt(const QTPolynomial& module_coords) {
    return kQtOrientation == QtOrientation::q_counts_y ? module_coords.swap_qt() : module_coords;
}

// ---------------------------------------------------------------------------
// Diagonal action
// ---------------------------------------------------------------------------

// sigma . P = P(x_{sigma(1)},...,x_{sigma(n)}; y_{sigma(1)},...,y_{sigma(n)}).
inline Polynomial diagonal_action(const Permutation& sigma, const Polynomial& f) {
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Monomial t(f.nvars());
        for (int i = 1; i <= f.nvars(); ++i) {
            t.xe[sigma(i) - 1] = m.xe[i - 1];
            t.ye[sigma(i) - 1] = m.ye[i - 1];
        }
        r.add_term(t, c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Basis certification by duality
// ---------------------------------------------------------------------------

namespace detail {

// Rank of a dense rational matrix by Gaussian elimination.
inline int rank_rational(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

struct CertifyBlock {
    int xdeg = 0, ydeg = 0;
    int dim = 0;   // bucket dimension of the harmonic side
    int rank = 0;  // rank of the pairing block
    bool ok = false;
};

struct CertifyReport {
    int n = 0, k = 0;
    std::string basis_name;
    bool ok = false;
    std::vector<CertifyBlock> blocks;
};

// candidates is a basis of the quotient dual to H exactly when the pairing
// matrix <candidate_i, h_j> is invertible. The pairing respects bidegree, so
// the matrix is block diagonal and each bucket is checked on its own.
inline CertifyReport certify_basis(const std::vector<Polynomial>& candidates,
                                   const BigradedBasis& h, int n, int k,
                                   const std::string& basis_name = "") {
    CertifyReport rep{n, k, basis_name, true, {}};
    if (static_cast<int>(candidates.size()) != h.total_dim())
        throw std::invalid_argument("certify_basis: candidate count != dim of module");

    std::map<std::pair<int, int>, std::vector<const Polynomial*>> by_degree;
    for (const auto& c : candidates) {
        auto bd = c.homogeneous_bidegree();
        if (!bd) throw std::invalid_argument("certify_basis: candidates must be bihomogeneous");
        by_degree[*bd].push_back(&c);
    }

    // Candidates in a bidegree where H vanishes can never pair nontrivially.
    for (const auto& [bd, cs] : by_degree) {
        if (h.buckets.find(bd) == h.buckets.end()) {
            rep.blocks.push_back(CertifyBlock{bd.first, bd.second, 0, 0, false});
            rep.ok = false;
        }
    }

    for (const auto& [bd, ech] : h.buckets) {
        CertifyBlock blk{bd.first, bd.second, ech.dim(), 0, false};
        auto it = by_degree.find(bd);
        int ncand = it == by_degree.end() ? 0 : static_cast<int>(it->second.size());
        if (ncand > 0) {
            std::vector<std::vector<Rational>> m(ncand);
            int i = 0;
            for (const Polynomial* c : it->second) {
                m[i].reserve(ech.dim());
                for (const auto& [piv, row] : ech.rows()) m[i].push_back(diff_pair(*c, row));
                ++i;
            }
            blk.rank = detail::rank_rational(std::move(m));
        }
        blk.ok = ncand == ech.dim() && blk.rank == ech.dim();
        rep.ok = rep.ok && blk.ok;
        rep.blocks.push_back(blk);
    }
    return rep;
}

}  // namespace hookmod
