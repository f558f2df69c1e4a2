#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hookmod/combinatorics.hpp"
#include "hookmod/errors.hpp"
#include "hookmod/rational.hpp"

namespace hookmod {

// ---------------------------------------------------------------------------
// Monomials in x_1..x_n, y_1..y_n
// ---------------------------------------------------------------------------

struct Monomial {
    std::vector<int> xe, ye;  // exponents, index i-1 holds the exponent of x_i / y_i

    Monomial() = default;
    explicit Monomial(int n) : xe(n, 0), ye(n, 0) {}

    static Monomial one(int n) { return Monomial(n); }

    static Monomial x(int n, int i, int e = 1) {
        Monomial m(n);
        m.xe[i - 1] = e;
        return m;
    }
    static Monomial y(int n, int i, int e = 1) {
        Monomial m(n);
        m.ye[i - 1] = e;
        return m;
    }

    int nvars() const { return static_cast<int>(xe.size()); }
    bool is_one() const {
        for (int e : xe) if (e) return false;
        for (int e : ye) if (e) return false;
        return true;
    }

    int xdeg() const { int s = 0; for (int e : xe) s += e; return s; }
    int ydeg() const { int s = 0; for (int e : ye) s += e; return s; }
    std::pair<int, int> bidegree() const { return {xdeg(), ydeg()}; }

    std::vector<int> supp_x() const {
        std::vector<int> s;
        for (int i = 0; i < nvars(); ++i) if (xe[i] > 0) s.push_back(i + 1);
        return s;
    }
    std::vector<int> supp_y() const {
        std::vector<int> s;
        for (int i = 0; i < nvars(); ++i) if (ye[i] > 0) s.push_back(i + 1);
        return s;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) {
            r.xe[i] = xe[i] + o.xe[i];
            r.ye[i] = ye[i] + o.ye[i];
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (xe[i] > o.xe[i] || ye[i] > o.ye[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return xe == o.xe && ye == o.ye; }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        auto app = [&](char v, int i, int e) {
            if (!e) return;
            if (!s.empty()) s += " ";
            s += v;
            s += std::to_string(i + 1);
            if (e > 1) s += "^" + std::to_string(e);
        };
        for (int i = 0; i < nvars(); ++i) app('x', i, xe[i]);
        for (int i = 0; i < nvars(); ++i) app('y', i, ye[i]);
        return s;
    }
};

// Graded lexicographic order with x1 > ... > xn > y1 > ... > yn. Returns
// +1 / 0 / -1. This is the one monomial order used everywhere (echelon forms,
// serialization), so all outputs are reproducible.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.xdeg() + a.ydeg(), db = b.xdeg() + b.ydeg();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.xe[i] != b.xe[i]) return a.xe[i] < b.xe[i] ? -1 : 1;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.ye[i] != b.ye[i]) return a.ye[i] < b.ye[i] ? -1 : 1;
    return 0;
}

struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

// ---------------------------------------------------------------------------
// Sparse polynomials over exact rationals
// ---------------------------------------------------------------------------

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    Polynomial() = default;
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p(m.nvars());
        p.add_term(m, c);
        return p;
    }

    static Polynomial constant(int n, const Rational& c) { return term(Monomial::one(n), c); }

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw std::invalid_argument("leading_monomial of zero polynomial");
        return terms_.begin()->first;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(n_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial r(n_);
        if (c == 0) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    Polynomial operator-() const { return *this * Rational(-1); }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // Exact partial derivative with respect to x_i or y_i (1-based).
    Polynomial partial(bool y_var, int i) const {
        Polynomial r(n_);
        for (const auto& [m, c] : terms_) {
            int e = y_var ? m.ye[i - 1] : m.xe[i - 1];
            if (e == 0) continue;
            Monomial d = m;
            if (y_var) d.ye[i - 1]--; else d.xe[i - 1]--;
            r.add_term(d, c * e);
        }
        return r;
    }

    // Bidegree if every term has the same one.
    std::optional<std::pair<int, int>> homogeneous_bidegree() const {
        std::optional<std::pair<int, int>> bd;
        for (const auto& [m, c] : terms_) {
            auto b = m.bidegree();
            if (!bd) bd = b;
            else if (*bd != b) return std::nullopt;
        }
        return bd;
    }

    // Canonical text form: terms in decreasing monomial order, rational
    // coefficients as a/b.
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (a != 1 || m.is_one()) {
                os << a.get_str();
                if (!m.is_one()) os << " ";
            }
            if (!m.is_one()) os << m.str();
        }
        return os.str();
    }

  private:
    int n_ = 0;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// ---------------------------------------------------------------------------
// Differential pairing
// ---------------------------------------------------------------------------

// f(d)g applied in full: each term c * m of f acts as the differential
// operator c * d^m.
inline Polynomial apply_diff_operator(const Polynomial& f, const Polynomial& g) {
    Polynomial r(g.nvars());
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            if (!mf.divides(mg)) continue;
            Rational c = cf * cg;
            Monomial q(g.nvars());
            auto falling = [&c](int e, int d) {  // e*(e-1)*...*(e-d+1)
                for (int t = 0; t < d; ++t) c *= (e - t);
                return e - d;
            };
            for (int i = 0; i < g.nvars(); ++i) {
                q.xe[i] = falling(mg.xe[i], mf.xe[i]);
                q.ye[i] = falling(mg.ye[i], mf.ye[i]);
            }
            r.add_term(q, c);
        }
    }
    return r;
}

// <f,g> = constant term of f(d)g. On monomials the pairing is diagonal:
// <m,m> = prod p_i! q_i! and distinct monomials pair to zero, so the sum runs
// over common monomials only.
inline Rational diff_pair(const Polynomial& f, const Polynomial& g) {
    Rational s(0);
    const auto& a = f.term_count() <= g.term_count() ? f : g;
    const auto& b = f.term_count() <= g.term_count() ? g : f;
    for (const auto& [m, ca] : a.terms()) {
        Rational cb = b.coeff(m);
        if (cb == 0) continue;
        Integer w(1);
        for (int e : m.xe) w *= factorial(e);
        for (int e : m.ye) w *= factorial(e);
        s += ca * cb * Rational(w);
    }
    return s;
}

// ---------------------------------------------------------------------------
// The quotient P_n^(k) and its monomial normal form M_n^(k)
// ---------------------------------------------------------------------------

// m lies in M_n^(k): x-support at most k-1, y-support at most n-k, disjoint.
inline bool monomial_in_Mnk(const Monomial& m, int k) {
    int n = m.nvars();
    int sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) {
        if (m.xe[i] > 0 && m.ye[i] > 0) return false;
        if (m.xe[i] > 0) ++sx;
        if (m.ye[i] > 0) ++sy;
    }
    return sx <= k - 1 && sy <= n - k;
}

// Normal form mod the monomial ideal I_k: drop every term outside M_n^(k).
inline Polynomial reduce_mod_Ik(const Polynomial& f, int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("reduce_mod_Ik: need 1 <= k <= n");
    Polynomial r(n);
    for (const auto& [m, c] : f.terms())
        if (monomial_in_Mnk(m, k)) r.add_term(m, c);
    return r;
}

inline Polynomial mul_in_Pk(const Polynomial& f, const Polynomial& g, int n, int k) {
    return reduce_mod_Ik(f * g, n, k);
}

// Elementary symmetric polynomial e_m in the listed variables (1-based
// indices) of one alphabet.
inline Polynomial elementary_symmetric(int n, const std::vector<int>& vars, int m, bool y_alphabet) {
    if (m < 0 || m > static_cast<int>(vars.size()))
        throw std::invalid_argument("elementary_symmetric: m out of range");
    Polynomial r(n);
    std::vector<int> idx(m);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == m) {
            Monomial mono(n);
            for (int t = 0; t < m; ++t) {
                int v = vars[idx[t]] - 1;
                if (y_alphabet) mono.ye[v]++; else mono.xe[v]++;
            }
            r.add_term(mono, 1);
            return;
        }
        for (int i = start; i < static_cast<int>(vars.size()); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return r;
}

inline std::vector<int> all_vars(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

// e_m^(k): e_m(x) for m <= k-1, else e_{n-m}(y).
inline Polynomial elementary_ek(int n, int k, int m) {
    if (m < 1 || m > n - 1) throw std::invalid_argument("elementary_ek: need 1 <= m <= n-1");
    if (m <= k - 1) return elementary_symmetric(n, all_vars(n), m, false);
    return elementary_symmetric(n, all_vars(n), n - m, true);
}

// Power sum p_j in one full alphabet.
inline Polynomial power_sum(int n, int j, bool y_alphabet) {
    Polynomial r(n);
    for (int i = 1; i <= n; ++i)
        r.add_term(y_alphabet ? Monomial::y(n, i, j) : Monomial::x(n, i, j), 1);
    return r;
}

// ---------------------------------------------------------------------------
// Monomial input grammar: whitespace-separated tokens x<i>[^<e>] / y<i>[^<e>]
// ---------------------------------------------------------------------------

inline Monomial parse_monomial(const std::string& text, int n) {
    Monomial m(n);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
            throw ParseError("bad monomial token '" + tok + "'");
        std::size_t caret = tok.find('^');
        std::string idx_s = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        std::string exp_s = caret == std::string::npos ? "1" : tok.substr(caret + 1);
        int idx = 0, exp = 0;
        try {
            idx = std::stoi(idx_s);
            exp = std::stoi(exp_s);
        } catch (const std::exception&) {
            throw ParseError("bad monomial token '" + tok + "'");
        }
        if (idx < 1 || idx > n) throw ParseError("variable index out of range in '" + tok + "'");
        if (exp < 1) throw ParseError("exponent must be positive in '" + tok + "'");
        if (tok[0] == 'x') m.xe[idx - 1] += exp; else m.ye[idx - 1] += exp;
    }
    return m;
}

}  // namespace hookmod
