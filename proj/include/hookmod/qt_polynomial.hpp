#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace hookmod {

// Bivariate integer polynomial in q and t. Coefficients at desk scale are
// tableau/word counts, well within 64 bits.
struct QTPolynomial {
    std::map<std::pair<int, int>, long long> coeffs;  // (q-exp, t-exp) -> coefficient

    static QTPolynomial one() {
        QTPolynomial p;
        p.add(0, 0, 1);
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }

    void add(int qe, int te, long long c) {
        if (c == 0) return;
        auto key = std::make_pair(qe, te);
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
            coeffs.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    QTPolynomial& operator+=(const QTPolynomial& o) {
        for (const auto& [k, c] : o.coeffs) add(k.first, k.second, c);
        return *this;
    }
    friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { a += b; return a; }

    QTPolynomial& operator-=(const QTPolynomial& o) {
        for (const auto& [k, c] : o.coeffs) add(k.first, k.second, -c);
        return *this;
    }
    friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { a -= b; return a; }

    QTPolynomial operator*(const QTPolynomial& o) const {
        QTPolynomial r;
        for (const auto& [k1, c1] : coeffs)
            for (const auto& [k2, c2] : o.coeffs)
                r.add(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }

    QTPolynomial operator*(long long s) const {
        QTPolynomial r;
        for (const auto& [k, c] : coeffs) r.add(k.first, k.second, c * s);
        return r;
    }

    long long at(int qe, int te) const {
        auto it = coeffs.find({qe, te});
        return it == coeffs.end() ? 0 : it->second;
    }

    long long eval_q1_t1() const {
        long long s = 0;
        for (const auto& [k, c] : coeffs) s += c;
        return s;
    }

    QTPolynomial swap_qt() const {
        QTPolynomial r;
        for (const auto& [k, c] : coeffs) r.add(k.second, k.first, c);
        return r;
    }

    bool operator==(const QTPolynomial& o) const { return coeffs == o.coeffs; }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : coeffs) {
            long long a = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool mono = k.first > 0 || k.second > 0;
            if (a != 1 || !mono) {
                os << a;
                if (mono) os << " ";
            }
            if (k.first > 0) {
                os << "q";
                if (k.first > 1) os << "^" << k.first;
                if (k.second > 0) os << " ";
            }
            if (k.second > 0) {
                os << "t";
                if (k.second > 1) os << "^" << k.second;
            }
        }
        return os.str();
    }
};

}  // namespace hookmod
