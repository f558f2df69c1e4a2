// Command-line surface for the hook-module library. Every command prints
// machine-readable output (JSON by default) and is deterministic: fixed
// orders, no timestamps.
//
// Exit codes: 0 ok, 2 scale guard, 3 verification failure, 4 parse error.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hookmod/hookmod.hpp"
#include "hookmod/json_out.hpp"

namespace {

using namespace hookmod;

constexpr int kExitOk = 0;
constexpr int kExitGuard = 2;
constexpr int kExitVerify = 3;
constexpr int kExitParse = 4;

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            int v = std::stoi(tok);
            if (v > 0) parts.push_back(v);
            else if (v < 0) throw ParseError("negative part in partition '" + text + "'");
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad partition '" + text + "'");
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

NKBipartition parse_bipartition(const std::string& text, int n, int k) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw ParseError("bipartition must be 'MU|NU' with comma-separated parts, e.g. '2,1|1'");
    try {
        return NKBipartition(n, k, parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1)));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid bipartition: ") + e.what());
    }
}

// Hilbert series of the hook module in tableau (q,t) coordinates, by the
// requested method. All four must agree. Guards: the derivative pipeline is
// capped at n = 6, fillings at n = 7, the permutation/tableau sums at n = 8.
QTPolynomial hilbert_by_method(const std::string& method, int n, int k) {
    if (n > 8) throw ScaleError("hilbert: n > 8 exceeds the guard");
    if (method == "derivatives") return to_tableau_qt(bigraded_hilbert(hook_harmonics(n, k)));
    if (method == "descent") {
        QTPolynomial h;
        for (const auto& pi : all_permutations(n)) {
            auto bd = descent_monomial(pi, k).bidegree();
            h.add(bd.second, bd.first, 1);  // q counts y-degree
        }
        return h;
    }
    if (method == "fillings") return hilbert_fillings(n, k);
    if (method == "stembridge") {
        QTPolynomial h;
        for (const auto& lam : gen_partitions(n))
            h += kostka_hook(lam, n, k) * static_cast<long long>(gen_syt(lam).size());
        return h;
    }
    throw ParseError("unknown method '" + method + "'");
}

std::vector<Polynomial> build_candidate_basis(const std::string& name, int n, int k) {
    auto monomial_set = [&](Monomial (*f)(const Permutation&, int)) {
        std::vector<Polynomial> out;
        for (const auto& pi : all_permutations(n)) out.push_back(Polynomial::term(f(pi, k), 1));
        return out;
    };
    if (name == "descent") return monomial_set(&descent_monomial);
    if (name == "artin") return monomial_set(&artin_monomial);
    if (name == "haglund") return monomial_set(&haglund_monomial);
    if (name == "schubert") return composed_basis(n, k, schubert_factory, schubert_factory);
    if (name.rfind("kicking:", 0) == 0) {
        std::string spec = name.substr(8);
        auto comma = spec.find(',');
        if (comma == std::string::npos)
            throw ParseError("kicking basis needs two factories, e.g. kicking:descent,artin");
        return composed_basis(n, k, factory_by_name(spec.substr(0, comma)),
                              factory_by_name(spec.substr(comma + 1)));
    }
    throw ParseError("unknown basis '" + name + "'");
}

void emit(const Json& payload, const std::string& format) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else {
        throw ParseError("this command supports --format json only");
    }
}

int cmd_kostka(int n, int k, const std::string& format) {
    if (n > 10) throw ScaleError("kostka: n > 10 exceeds the guard");
    auto table = htilde_hook(n, k);
    if (format == "json") {
        std::cout << kostka_table_json(n, k).dump(2) << "\n";
    } else if (format == "text") {
        for (const auto& [lam, poly] : table) std::cout << lam.str() << ": " << poly.str() << "\n";
    } else if (format == "csv") {
        std::cout << "lambda,qexp,texp,coef\n";
        for (const auto& [lam, poly] : table)
            for (const auto& [key, c] : poly.coeffs)
                std::cout << "\"" << lam.str() << "\"," << key.first << "," << key.second << "," << c << "\n";
    } else {
        throw ParseError("unknown format '" + format + "'");
    }
    return kExitOk;
}

int cmd_hilbert(int n, int k, const std::string& method, const std::string& format) {
    std::vector<std::string> methods;
    if (method == "all") methods = {"derivatives", "descent", "fillings", "stembridge"};
    else methods = {method};
    std::map<std::string, QTPolynomial> results;
    for (const auto& m : methods) results.emplace(m, hilbert_by_method(m, n, k));
    bool agree = true;
    for (const auto& [m, h] : results)
        if (!(h == results.begin()->second)) agree = false;

    if (format == "json") {
        Json out{{"n", n}, {"k", k}};
        Json per = Json::object();
        for (const auto& [m, h] : results) per[m] = to_json(h);
        out["methods"] = per;
        if (methods.size() > 1) out["agree"] = agree;
        std::cout << out.dump(2) << "\n";
    } else if (format == "text") {
        for (const auto& [m, h] : results) std::cout << m << ": " << h.str() << "\n";
        if (methods.size() > 1) std::cout << (agree ? "agree" : "DISAGREE") << "\n";
    } else if (format == "csv") {
        std::cout << "method,qexp,texp,coef\n";
        for (const auto& [m, h] : results)
            for (const auto& [key, c] : h.coeffs)
                std::cout << m << "," << key.first << "," << key.second << "," << c << "\n";
    } else {
        throw ParseError("unknown format '" + format + "'");
    }
    return agree ? kExitOk : kExitVerify;
}

int cmd_basis_check(int n, int k, const std::string& basis, const std::string& format) {
    if (n > 6) throw ScaleError("basis-check: n > 6 exceeds the pipeline guard");
    auto candidates = build_candidate_basis(basis, n, k);
    auto report = certify_basis(candidates, hook_harmonics(n, k), n, k, basis);
    if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else if (format == "text") {
        std::cout << "basis " << basis << " at n=" << n << " k=" << k << ": "
                  << (report.ok ? "ok" : "FAIL") << "\n";
        for (const auto& b : report.blocks)
            if (!b.ok)
                std::cout << "  block (" << b.xdeg << "," << b.ydeg << "): dim " << b.dim
                          << " rank " << b.rank << "\n";
    } else {
        throw ParseError("unknown format '" + format + "'");
    }
    return report.ok ? kExitOk : kExitVerify;
}

int cmd_straighten(const std::string& monomial, int n, int k, const std::string& format) {
    if (n > 8) throw ScaleError("straighten: n > 8 exceeds the guard");
    Monomial m = parse_monomial(monomial, n);
    if (!monomial_in_Mnk(m, k))
        throw ParseError("monomial is not in normal form for this (n,k)");
    auto terms = straighten(m, n, k);
    if (format == "json") {
        std::cout << Json{{"n", n}, {"k", k}, {"monomial", m.str()}, {"terms", to_json(terms)}}.dump(2)
                  << "\n";
    } else if (format == "text") {
        for (const auto& t : terms)
            std::cout << t.coef << " * a[" << t.pi.str() << "] * e" << t.nu.str() << "\n";
    } else {
        throw ParseError("unknown format '" + format + "'");
    }
    return kExitOk;
}

int cmd_decompose(int n, int k, const std::string& format) {
    if (n > 8) throw ScaleError("decompose: n > 8 exceeds the guard");
    if (format == "json") {
        std::cout << decompose_json(n, k).dump(2) << "\n";
    } else if (format == "text") {
        for (const auto& lam : nk_bipartitions(n, k)) {
            auto w = bipartition_weight(lam);
            std::cout << lam.str() << "  weight q^" << w.first << " t^" << w.second << "  dim "
                      << r_lambda_basis(lam).size() << "\n";
        }
    } else if (format == "csv") {
        std::cout << "mu,nu,t1,t2,dim\n";
        for (const auto& lam : nk_bipartitions(n, k)) {
            auto w = bipartition_weight(lam);
            std::cout << "\"" << lam.mu.str() << "\",\"" << lam.nu.str() << "\"," << w.first << ","
                      << w.second << "," << r_lambda_basis(lam).size() << "\n";
        }
    } else {
        throw ParseError("unknown format '" + format + "'");
    }
    return kExitOk;
}

int cmd_verify_axioms(int n, int k, int numvars, const std::string& format) {
    auto rep = axiom_check(n, k, numvars);
    if (format == "json") {
        Json out{{"n", n}, {"k", k}, {"numvars", numvars}};
        out.update(to_json(rep));
        std::cout << out.dump(2) << "\n";
    } else if (format == "text") {
        std::cout << "A1 " << (rep.a1 ? "pass" : "FAIL") << "\nA2 " << (rep.a2 ? "pass" : "FAIL")
                  << "\nA3 " << (rep.a3 ? "pass" : "FAIL") << "\n";
        if (!rep.offending_type.empty()) {
            std::cout << "offending type:";
            for (int e : rep.offending_type) std::cout << " " << e;
            std::cout << "\n";
        }
    } else {
        throw ParseError("unknown format '" + format + "'");
    }
    return rep.all_ok() ? kExitOk : kExitVerify;
}

int cmd_action(int n, int k, const std::string& lambda, const std::string& format) {
    if (n > 7) throw ScaleError("action: n > 7 exceeds the guard");
    auto lam = parse_bipartition(lambda, n, k);
    emit(action_json(lam), format);
    return kExitOk;
}

int cmd_selftest(unsigned seed) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    check(gen_partitions(8).size() == 22, "partition counts");
    {
        long long sq = 0;
        for (const auto& lam : gen_partitions(5)) {
            long long f = static_cast<long long>(gen_syt(lam).size());
            sq += f * f;
        }
        check(sq == 120, "sum of f^2 = n!");
    }
    {
        bool ok = true;
        for (int k = 1; k <= 3; ++k) {
            auto base = hilbert_by_method("derivatives", 3, k);
            for (const std::string m : {"descent", "fillings", "stembridge"})
                ok = ok && hilbert_by_method(m, 3, k) == base;
        }
        check(ok, "hilbert methods agree at n=3");
    }
    {
        std::mt19937 rng(seed);
        bool ok = true;
        for (int trial = 0; trial < 25; ++trial) {
            int n = 3 + static_cast<int>(rng() % 2), k = 1 + static_cast<int>(rng() % n);
            Monomial m(n);
            std::vector<int> idx(n);
            std::iota(idx.begin(), idx.end(), 1);
            std::shuffle(idx.begin(), idx.end(), rng);
            int sx = static_cast<int>(rng() % k), sy = static_cast<int>(rng() % (n - k + 1));
            for (int i = 0; i < sx; ++i) m.xe[idx[i] - 1] = 1 + rng() % 3;
            for (int i = 0; i < sy; ++i) m.ye[idx[sx + i] - 1] = 1 + rng() % 3;
            ok = ok && phi_k(psi_k(m, n, k), n, k) == m;
            auto terms = straighten(m, n, k);
            ok = ok && expand_straightening(terms, n, k) == reduce_mod_Ik(Polynomial::term(m, 1), n, k);
        }
        check(ok, "psi/phi and straightening round-trips (seeded)");
    }
    check(axiom_check(2, 1, 2).all_ok() && axiom_check(2, 2, 2).all_ok(), "axioms at n=2");
    return failures == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Garsia-Haiman hook modules"};
    app.require_subcommand(1);

    int n = 0, k = 0, numvars = 0;
    unsigned seed = 1;
    std::string format = "json", method = "all", basis = "descent", lambda, monomial;

    auto add_nk = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of letters")->required();
        cmd->add_option("--k", k, "hook parameter, 1 <= k <= n")->required();
        cmd->add_option("--format", format, "output format: json|text|csv");
    };

    auto* kostka = app.add_subcommand("kostka", "Macdonald-Kostka polynomials of the hook, all shapes");
    add_nk(kostka);

    auto* hilbert = app.add_subcommand("hilbert", "bigraded Hilbert series of the hook module");
    add_nk(hilbert);
    hilbert->add_option("--method", method, "derivatives|descent|fillings|stembridge|all");

    auto* basis_check = app.add_subcommand("basis-check", "certify a candidate basis by the differential pairing");
    add_nk(basis_check);
    basis_check->add_option("--basis", basis, "descent|artin|haglund|schubert|kicking:<x>,<y>");

    auto* straighten_cmd = app.add_subcommand("straighten", "expand a monomial over descent-basis elements");
    add_nk(straighten_cmd);
    straighten_cmd
        ->add_option("--monomial", monomial,
                     "whitespace-separated tokens x<i>[^<e>] / y<i>[^<e>], e.g. \"x1^2 y2^4 x3^2 y5 x6^3\"")
        ->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "descent-representation decomposition of the hook module");
    add_nk(decompose_cmd);

    auto* verify = app.add_subcommand("verify-axioms", "signed-word verification of the Macdonald axioms");
    add_nk(verify);
    verify->add_option("--numvars", numvars, "alphabet size (default n)");

    auto* action = app.add_subcommand("action", "symmetric-group action matrices on a descent representation");
    add_nk(action);
    action->add_option("--lambda", lambda, "bipartition 'MU|NU', comma-separated parts, e.g. '2,1|1'")
        ->required();

    auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");
    selftest->add_option("--seed", seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (kostka->parsed()) return cmd_kostka(n, k, format);
        if (hilbert->parsed()) return cmd_hilbert(n, k, method, format);
        if (basis_check->parsed()) return cmd_basis_check(n, k, basis, format);
        if (straighten_cmd->parsed()) return cmd_straighten(monomial, n, k, format);
        if (decompose_cmd->parsed()) return cmd_decompose(n, k, format);
        if (verify->parsed()) return cmd_verify_axioms(n, k, numvars > 0 ? numvars : n, format);
        if (action->parsed()) return cmd_action(n, k, lambda, format);
        if (selftest->parsed()) return cmd_selftest(seed);
    } catch (const ScaleError& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitOk;
}
