#pragma once

#include <json.hpp>

#include "hookmod/harmonics.hpp"
#include "hookmod/macdonald.hpp"
#include "hookmod/represent.hpp"
#include "hookmod/straighten.hpp"

// JSON views of the library's report types. Field order is fixed by
// nlohmann::ordered_json so identical runs emit identical bytes.
namespace hookmod {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts); }

inline Json to_json(const QTPolynomial& q) {
    Json coeffs = Json::array();
    for (const auto& [k, c] : q.coeffs) coeffs.push_back({k.first, k.second, c});
    return Json{{"coeffs", coeffs}, {"str", q.str()}};
}

inline Json to_json(const CertifyReport& r) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks)
        blocks.push_back(Json{{"xdeg", b.xdeg}, {"ydeg", b.ydeg}, {"dim", b.dim}, {"rank", b.rank}, {"ok", b.ok}});
    return Json{{"n", r.n}, {"k", r.k}, {"basis_name", r.basis_name}, {"ok", r.ok}, {"blocks", blocks}};
}

inline Json to_json(const std::vector<StraighteningTerm>& terms) {
    Json arr = Json::array();
    for (const auto& t : terms)
        arr.push_back(Json{{"coef", t.coef}, {"pi", t.pi.w}, {"nu", t.nu.parts}});
    return arr;
}

inline Json kostka_table_json(int n, int k) {
    Json arr = Json::array();
    for (const auto& [lam, poly] : htilde_hook(n, k))
        arr.push_back(Json{{"lambda", lam.parts}, {"poly", to_json(poly)}});
    return Json{{"n", n}, {"k", k}, {"table", arr}};
}

inline Json decompose_json(int n, int k) {
    Json arr = Json::array();
    for (const auto& lam : nk_bipartitions(n, k)) {
        auto A = a_lambda(lam);
        auto w = bipartition_weight(lam);
        Json mult = Json::object();
        for (const auto& sh : gen_partitions(n)) {
            long long c = syt_descent_count(sh, A);
            if (c) mult[sh.str()] = c;
        }
        arr.push_back(Json{{"lambda", Json{{"mu", lam.mu.parts}, {"nu", lam.nu.parts}}},
                           {"A_lambda", std::vector<int>(A.begin(), A.end())},
                           {"dim", static_cast<long long>(r_lambda_basis(lam).size())},
                           {"weights", {w.first, w.second}},
                           {"multiplicities", mult}});
    }
    return Json{{"n", n}, {"k", k}, {"components", arr}};
}

inline Json action_json(const NKBipartition& lam) {
    auto basis = r_lambda_basis(lam);
    Json basis_j = Json::array();
    for (const auto& p : basis) basis_j.push_back(p.w);
    Json mats = Json::array();
    for (const auto& g : all_action_matrices(lam)) mats.push_back(Json{{"j", g.j}, {"matrix", g.m}});
    auto A = a_lambda(lam);
    return Json{{"lambda", Json{{"mu", lam.mu.parts}, {"nu", lam.nu.parts}}},
                {"A_lambda", std::vector<int>(A.begin(), A.end())},
                {"dim", static_cast<long long>(basis.size())},
                {"basis", basis_j},
                {"matrices", mats}};
}

inline Json to_json(const AxiomReport& r) {
    return Json{{"A1", r.a1},
                {"A2", r.a2},
                {"A3", r.a3},
                {"fixed_point_match_A1", r.fixed_point_match_1},
                {"fixed_point_match_A2", r.fixed_point_match_2},
                {"offending_type", r.offending_type},
                {"detail", r.detail}};
}

}  // namespace hookmod
