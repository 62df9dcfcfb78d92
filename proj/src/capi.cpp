#include "stabilkit.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "stabilkit/approx.hpp"
#include "stabilkit/fc.hpp"
#include "stabilkit/fpt.hpp"
#include "stabilkit/ged.hpp"
#include "stabilkit/generators.hpp"
#include "stabilkit/io.hpp"
#include "stabilkit/oracle.hpp"

using namespace stabilkit;

struct stabil_graph {
    Graph g;
};
struct stabil_solution {
    StabilizerSolution s;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

// Runs fn, translating the library's exception taxonomy to status codes.
template <typename Fn>
stabil_status guarded(char** err, Fn&& fn) {
    try {
        fn();
        return STABIL_OK;
    } catch (const ParseError& e) {
        set_err(err, e.what());
        return STABIL_ERR_PARSE;
    } catch (const PreconditionError& e) {
        set_err(err, e.what());
        return STABIL_ERR_PRECONDITION;
    } catch (const BoundError& e) {
        set_err(err, e.what());
        return STABIL_ERR_BOUND;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return STABIL_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

void stabil_string_free(char* s) { std::free(s); }

stabil_status stabil_graph_parse(const char* text, stabil_graph** out, char** err) {
    if (!text || !out) return STABIL_ERR_ARGUMENT;
    return guarded(err, [&] { *out = new stabil_graph{parse_graph(text)}; });
}

stabil_status stabil_graph_to_text(const stabil_graph* g, char** out) {
    if (!g || !out) return STABIL_ERR_ARGUMENT;
    *out = dup_string(serialize_graph(g->g));
    return STABIL_OK;
}

int stabil_graph_vertex_count(const stabil_graph* g) { return g ? g->g.vertex_count() : -1; }
int stabil_graph_edge_count(const stabil_graph* g) { return g ? g->g.edge_count() : -1; }
void stabil_graph_free(stabil_graph* g) { delete g; }

stabil_status stabil_ged_text(const stabil_graph* g, char** out) {
    if (!g || !out) return STABIL_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        GEDecomposition d = decompose(g->g);
        std::ostringstream os;
        auto join = [](const std::vector<int>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(v[i]);
            }
            return s;
        };
        os << "X=" << join(d.X) << '\n';
        os << "Y=" << join(d.Y) << '\n';
        os << "Z=" << join(d.Z) << '\n';
        os << "components=" << d.components.size() << '\n';
        for (size_t i = 0; i < d.components.size(); ++i)
            os << "component" << i << "=" << join(d.components[i]) << '\n';
        *out = dup_string(os.str());
    });
}

stabil_status stabil_is_stable(const stabil_graph* g, int* stable) {
    if (!g || !stable) return STABIL_ERR_ARGUMENT;
    return guarded(nullptr, [&] { *stable = is_stable(g->g) ? 1 : 0; });
}

stabil_status stabil_solve(const stabil_graph* g, stabil_algo algo, int oracle_max_n,
                           stabil_solution** out, char** err) {
    if (!g || !out) return STABIL_ERR_ARGUMENT;
    if (oracle_max_n <= 0) oracle_max_n = kDefaultOracleMaxN;
    return guarded(err, [&] {
        StabilizerSolution s;
        switch (algo) {
            case STABIL_ALGO_EXACT_FPT: s = solve_exact(g->g); break;
            case STABIL_ALGO_FACTOR_CRITICAL: s = solve_factor_critical(g->g); break;
            case STABIL_ALGO_APPROX: s = solve_approx(g->g); break;
            case STABIL_ALGO_TUTTE_ALL: s = solve_tutte_all(g->g).solution; break;
            case STABIL_ALGO_ORACLE: s = solve_oracle(g->g, oracle_max_n); break;
            default: throw PreconditionError("unknown algorithm");
        }
        *out = new stabil_solution{std::move(s)};
    });
}

stabil_status stabil_solve_tutte_all(const stabil_graph* g, stabil_solution** out,
                                     long long* nontrivial_components, long long* tutte_size,
                                     int* k, char** err) {
    if (!g || !out) return STABIL_ERR_ARGUMENT;
    return guarded(err, [&] {
        TutteAllResult res = solve_tutte_all(g->g);
        *out = new stabil_solution{std::move(res.solution)};
        if (nontrivial_components) *nontrivial_components = res.nontrivial_components;
        if (tutte_size) *tutte_size = res.tutte_size;
        if (k) *k = res.k;
    });
}

stabil_status stabil_solution_parse(const char* text, stabil_solution** out, char** err) {
    if (!text || !out) return STABIL_ERR_ARGUMENT;
    return guarded(err, [&] { *out = new stabil_solution{parse_solution(text)}; });
}

stabil_status stabil_solution_to_text(const stabil_solution* s, char** out) {
    if (!s || !out) return STABIL_ERR_ARGUMENT;
    *out = dup_string(serialize_solution(s->s));
    return STABIL_OK;
}

long long stabil_solution_cost2(const stabil_solution* s) {
    return s ? s->s.cost.doubled() : -1;
}

void stabil_solution_free(stabil_solution* s) { delete s; }

stabil_status stabil_verify(const stabil_graph* g, const stabil_solution* s, int* valid,
                            char** report) {
    if (!g || !s || !valid) return STABIL_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        Verdict v = verify_certificate(g->g, s->s);
        *valid = v.valid() ? 1 : 0;
        if (report) {
            std::string text;
            for (const std::string& line : v.violations) text += line + "\n";
            *report = dup_string(text);
        }
    });
}

stabil_status stabil_gen_mkec(const stabil_graph* base, int k, int q, stabil_graph** out,
                              char** meta_json, char** err) {
    if (!base || !out) return STABIL_ERR_ARGUMENT;
    return guarded(err, [&] {
        MkecInstance inst = gen_mkec(base->g, k, q);
        if (meta_json) *meta_json = dup_string(mkec_metadata_json(inst));
        *out = new stabil_graph{std::move(inst.graph)};
    });
}

stabil_status stabil_gen_setcover(const char* sets_spec, int n_elems, int big_n,
                                  stabil_graph** out, char** meta_json, char** err) {
    if (!sets_spec || !out) return STABIL_ERR_ARGUMENT;
    return guarded(err, [&] {
        std::vector<std::vector<int>> sets;
        std::string spec(sets_spec);
        std::stringstream outer(spec);
        std::string part;
        while (std::getline(outer, part, ';')) {
            std::vector<int> set;
            std::stringstream inner(part);
            std::string tok;
            while (std::getline(inner, tok, ',')) {
                if (tok.empty()) throw ParseError(0, "empty element label in set spec");
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw ParseError(0, "bad element label '" + tok + "'");
                set.push_back(v);
            }
            if (set.empty()) throw ParseError(0, "empty set in set spec");
            sets.push_back(std::move(set));
        }
        SetCoverInstance inst = gen_setcover(sets, n_elems, big_n);
        if (meta_json) *meta_json = dup_string(setcover_metadata_json(inst));
        *out = new stabil_graph{std::move(inst.graph)};
    });
}

stabil_status stabil_gen_factor_critical(const int* ear_lengths, int num_ears,
                                         unsigned long long seed, stabil_graph** out,
                                         char** meta_json, char** err) {
    if (!ear_lengths || !out || num_ears <= 0) return STABIL_ERR_ARGUMENT;
    return guarded(err, [&] {
        std::vector<int> ears(ear_lengths, ear_lengths + num_ears);
        Graph g = gen_factor_critical(ears, seed);
        if (meta_json) {
            std::vector<long long> params(ears.begin(), ears.end());
            *meta_json = dup_string(simple_metadata_json("factor_critical", params, seed));
        }
        *out = new stabil_graph{std::move(g)};
    });
}

stabil_status stabil_gen_random(int n, long long p_num, long long p_den,
                                unsigned long long seed, stabil_graph** out, char** meta_json,
                                char** err) {
    if (!out) return STABIL_ERR_ARGUMENT;
    return guarded(err, [&] {
        Graph g = gen_random(n, p_num, p_den, seed);
        if (meta_json)
            *meta_json = dup_string(simple_metadata_json("random", {n, p_num, p_den}, seed));
        *out = new stabil_graph{std::move(g)};
    });
}

}  // extern "C"
