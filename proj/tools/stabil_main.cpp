// stabil — command-line front end for the stabilkit shared library.
//
// Exit codes: 0 success (or "stable"/"valid"), 1 negative verdict
// ("unstable"/"invalid"), 2 input error, 3 precondition violation.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "stabilkit.h"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { stabil_string_free(s); }
};

struct GraphGuard {
    stabil_graph* g = nullptr;
    ~GraphGuard() { stabil_graph_free(g); }
};

struct SolutionGuard {
    stabil_solution* s = nullptr;
    ~SolutionGuard() { stabil_solution_free(s); }
};

int status_to_exit(stabil_status st) {
    switch (st) {
        case STABIL_OK: return 0;
        case STABIL_ERR_PARSE: return kExitInput;
        case STABIL_ERR_PRECONDITION: return kExitPrecondition;
        case STABIL_ERR_BOUND: return kExitPrecondition;
        default: return kExitInternal;
    }
}

int report_failure(stabil_status st, const char* err) {
    const char* kind = st == STABIL_ERR_PARSE ? "parse error"
                       : st == STABIL_ERR_PRECONDITION ? "precondition"
                       : st == STABIL_ERR_BOUND ? "size bound"
                                                : "error";
    std::cerr << kind << ": " << (err ? err : "unknown") << "\n";
    return status_to_exit(st);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return out.good();
}

int load_graph(const std::string& path, GraphGuard& g) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "parse error: cannot read file '" << path << "'\n";
        return kExitInput;
    }
    StringGuard err;
    stabil_status st = stabil_graph_parse(text.c_str(), &g.g, &err.s);
    if (st != STABIL_OK) return report_failure(st, err.s);
    return 0;
}

int oracle_max_n_from_env() {
    const char* env = std::getenv("STABILKIT_ORACLE_MAX_N");
    if (!env || !*env) return 0;
    return std::atoi(env);
}

int cmd_ged(const std::string& file) {
    GraphGuard g;
    if (int rc = load_graph(file, g)) return rc;
    StringGuard text;
    stabil_status st = stabil_ged_text(g.g, &text.s);
    if (st != STABIL_OK) return report_failure(st, nullptr);
    std::cout << text.s;
    return 0;
}

int cmd_stable(const std::string& file) {
    GraphGuard g;
    if (int rc = load_graph(file, g)) return rc;
    int stable = 0;
    stabil_status st = stabil_is_stable(g.g, &stable);
    if (st != STABIL_OK) return report_failure(st, nullptr);
    std::cout << (stable ? "stable" : "unstable") << "\n";
    return stable ? 0 : kExitNegative;
}

int cmd_stabilize(const std::string& file, const std::string& algo, const std::string& out_path) {
    GraphGuard g;
    if (int rc = load_graph(file, g)) return rc;

    SolutionGuard sol;
    StringGuard err;
    stabil_status st;
    long long cplus = 0, tutte = 0;
    int k = 0;
    bool is_tutte_all = algo == "tutte-all";
    if (is_tutte_all) {
        st = stabil_solve_tutte_all(g.g, &sol.s, &cplus, &tutte, &k, &err.s);
    } else {
        stabil_algo a;
        if (algo == "exact-fpt") a = STABIL_ALGO_EXACT_FPT;
        else if (algo == "factor-critical") a = STABIL_ALGO_FACTOR_CRITICAL;
        else if (algo == "approx") a = STABIL_ALGO_APPROX;
        else if (algo == "oracle") a = STABIL_ALGO_ORACLE;
        else {
            std::cerr << "parse error: unknown algorithm '" << algo << "'\n";
            return kExitInput;
        }
        st = stabil_solve(g.g, a, oracle_max_n_from_env(), &sol.s, &err.s);
    }
    if (st != STABIL_OK) return report_failure(st, err.s);

    std::cout << "cost2=" << stabil_solution_cost2(sol.s) << "\n";
    if (is_tutte_all) {
        std::cout << "nontrivial_components=" << cplus << "\n";
        std::cout << "tutte_size=" << tutte << "\n";
        std::cout << "k=" << k << "\n";
    }
    if (!out_path.empty()) {
        StringGuard text;
        stabil_solution_to_text(sol.s, &text.s);
        if (!write_file(out_path, text.s)) {
            std::cerr << "error: cannot write certificate to '" << out_path << "'\n";
            return kExitInput;
        }
    }
    return 0;
}

int cmd_verify(const std::string& file, const std::string& cert_path) {
    GraphGuard g;
    if (int rc = load_graph(file, g)) return rc;
    std::string cert_text;
    if (!read_file(cert_path, cert_text)) {
        std::cerr << "parse error: cannot read file '" << cert_path << "'\n";
        return kExitInput;
    }
    SolutionGuard sol;
    StringGuard err;
    stabil_status st = stabil_solution_parse(cert_text.c_str(), &sol.s, &err.s);
    if (st != STABIL_OK) return report_failure(st, err.s);
    int valid = 0;
    StringGuard report;
    st = stabil_verify(g.g, sol.s, &valid, &report.s);
    if (st != STABIL_OK) return report_failure(st, nullptr);
    if (valid) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid\n";
    if (report.s) std::cout << report.s;
    return kExitNegative;
}

int write_instance(stabil_graph* g, const char* meta, const std::string& out_path) {
    StringGuard text;
    stabil_graph_to_text(g, &text.s);
    if (!write_file(out_path, text.s)) {
        std::cerr << "error: cannot write instance to '" << out_path << "'\n";
        return kExitInput;
    }
    if (meta && !write_file(out_path + ".meta", meta)) {
        std::cerr << "error: cannot write metadata to '" << out_path << ".meta'\n";
        return kExitInput;
    }
    std::cout << "n=" << stabil_graph_vertex_count(g) << "\n";
    std::cout << "m=" << stabil_graph_edge_count(g) << "\n";
    std::cout << "out=" << out_path << "\n";
    return 0;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list");
        out.push_back(std::stoi(tok));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability and minimum fractional additive stabilizers"};
    app.require_subcommand(1);

    std::string file, cert, algo = "exact-fpt", out_path;

    auto* ged = app.add_subcommand("ged", "print the Gallai-Edmonds decomposition");
    ged->add_option("file", file)->required();

    auto* stable = app.add_subcommand("stable", "decide stability (exit 0 stable, 1 unstable)");
    stable->add_option("file", file)->required();

    auto* stab = app.add_subcommand("stabilize", "compute a minimum stabilizer certificate");
    stab->add_option("file", file)->required();
    stab->add_option("--algo", algo)
        ->check(CLI::IsMember({"exact-fpt", "factor-critical", "approx", "tutte-all", "oracle"}));
    stab->add_option("--out", out_path, "write the certificate to this file");

    auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
    verify->add_option("file", file)->required();
    verify->add_option("cert", cert)->required();

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);

    std::string base_path, sets_spec, ears_spec, prob_spec = "1/2";
    int k = 1, q = 0, elems = 0, big_n = 1, rn = 8;
    unsigned long long seed = 1;

    auto* gm = gen->add_subcommand("mkec", "minimum-k-edge-coverage reduction instance");
    gm->add_option("--base", base_path)->required();
    gm->add_option("--k", k)->required();
    gm->add_option("--q", q, "copies of the base vertex set (0 = minimal admissible)");
    gm->add_option("--out", out_path)->required();

    auto* gs = gen->add_subcommand("setcover", "set-cover reduction instance");
    gs->add_option("--sets", sets_spec, "e.g. \"1,2;2,3;1,2,3\"")->required();
    gs->add_option("--elems", elems)->required();
    gs->add_option("--bigN", big_n, "clique size parameter (cliques have 2N+1 vertices)");
    gs->add_option("--out", out_path)->required();

    auto* gf = gen->add_subcommand("fc", "random factor-critical graph from odd ears");
    gf->add_option("--ears", ears_spec, "comma-separated odd lengths, e.g. 3,3,5")->required();
    gf->add_option("--seed", seed);
    gf->add_option("--out", out_path)->required();

    auto* gr = gen->add_subcommand("random", "seeded random graph");
    gr->add_option("--n", rn)->required();
    gr->add_option("--p", prob_spec, "edge probability num/den, e.g. 1/2");
    gr->add_option("--seed", seed);
    gr->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (ged->parsed()) return cmd_ged(file);
        if (stable->parsed()) return cmd_stable(file);
        if (stab->parsed()) return cmd_stabilize(file, algo, out_path);
        if (verify->parsed()) return cmd_verify(file, cert);
        if (gen->parsed()) {
            StringGuard meta, err;
            GraphGuard out;
            stabil_status st = STABIL_OK;
            if (gm->parsed()) {
                GraphGuard base;
                if (int rc = load_graph(base_path, base)) return rc;
                st = stabil_gen_mkec(base.g, k, q, &out.g, &meta.s, &err.s);
            } else if (gs->parsed()) {
                st = stabil_gen_setcover(sets_spec.c_str(), elems, big_n, &out.g, &meta.s, &err.s);
            } else if (gf->parsed()) {
                std::vector<int> ears = parse_int_list(ears_spec);
                st = stabil_gen_factor_critical(ears.data(), static_cast<int>(ears.size()), seed,
                                                &out.g, &meta.s, &err.s);
            } else if (gr->parsed()) {
                long long num = 1, den = 2;
                size_t slash = prob_spec.find('/');
                if (slash == std::string::npos) {
                    num = std::stoll(prob_spec);
                    den = 1;
                } else {
                    num = std::stoll(prob_spec.substr(0, slash));
                    den = std::stoll(prob_spec.substr(slash + 1));
                }
                st = stabil_gen_random(rn, num, den, seed, &out.g, &meta.s, &err.s);
            }
            if (st != STABIL_OK) return report_failure(st, err.s);
            return write_instance(out.g, meta.s, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
