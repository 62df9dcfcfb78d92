#include "stabilkit/oracle.hpp"

#include <algorithm>
#include <functional>

#include "stabilkit/lp.hpp"
#include "stabilkit/matching.hpp"

namespace stabilkit {

std::vector<Matching> enumerate_maximum_matchings(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n)
        throw BoundError("graph exceeds the oracle size bound (" + std::to_string(max_n) +
                         " vertices)");
    const int nu = matching_number(g);
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<Matching> out;
    std::vector<Edge> current;
    std::vector<char> used(g.vertex_count(), false);

    // Include/exclude in edge order; output arrives lexicographically sorted.
    std::function<void(int)> rec = [&](int idx) {
        if (static_cast<int>(current.size()) == nu) {
            out.push_back(Matching(current));
            return;
        }
        if (idx == m) return;
        int need = nu - static_cast<int>(current.size());
        if (m - idx < need) return;
        const Edge& e = edges[idx];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = true;
            current.push_back(e);
            rec(idx + 1);
            current.pop_back();
            used[e.u] = used[e.v] = false;
        }
        rec(idx + 1);
    };
    rec(0);
    return out;
}

StabilizerSolution solve_oracle(const Graph& g, int max_n) {
    std::vector<Matching> matchings = enumerate_maximum_matchings(g, max_n);
    bool have = false;
    HalfInt best_cost;
    Matching best_m;
    LpGmResult best_lp;
    for (const Matching& m : matchings) {
        auto lp = solve_lp_gm(g, m);
        if (!lp) continue;
        if (!have || lp->cost < best_cost) {
            have = true;
            best_cost = lp->cost;
            best_m = m;
            best_lp = *lp;
        }
    }
    if (!have) throw InternalError("no maximum matching admits a certificate");
    return make_solution(g, best_m, best_lp.y, best_lp.c);
}

Verdict verify_certificate(const Graph& g, const StabilizerSolution& s) {
    Verdict verdict;
    auto flag = [&](const std::string& msg) { verdict.violations.push_back(msg); };

    if (s.n != g.vertex_count()) {
        flag("vertex count mismatch (certificate " + std::to_string(s.n) + ", graph " +
             std::to_string(g.vertex_count()) + ")");
        return verdict;
    }
    bool matching_ok = s.matching.contained_in(g);
    if (!matching_ok) flag("matching is not a matching in the graph");
    if (static_cast<int>(s.y.size()) != s.n) {
        flag("cover vector length mismatch");
        return verdict;
    }

    std::vector<int> mate(s.n, -1);
    if (matching_ok) mate = s.matching.mate_vector(s.n);

    for (const auto& [e, val] : s.c) {
        if (g.edge_index(e.u, e.v) < 0 || mate[e.u] != e.v)
            flag("stabilizer entry on edge (" + std::to_string(e.u) + "," +
                 std::to_string(e.v) + ") outside the matching");
        if (val < HalfInt::zero() || val > HalfInt::one())
            flag("stabilizer entry on edge (" + std::to_string(e.u) + "," +
                 std::to_string(e.v) + ") outside [0,1]");
    }
    for (int v = 0; v < s.n; ++v) {
        if (s.y[v] < HalfInt::zero()) flag("negative cover value at vertex " + std::to_string(v));
        if (matching_ok && mate[v] == -1 && s.y[v] != HalfInt::zero())
            flag("exposed vertex " + std::to_string(v) + " has nonzero cover value");
    }
    for (const Edge& e : g.edges()) {
        HalfInt lhs = s.y[e.u] + s.y[e.v];
        HalfInt rhs = HalfInt::one() + s.c_at(e);
        if (lhs < rhs)
            flag("cover constraint violated at edge (" + std::to_string(e.u) + "," +
                 std::to_string(e.v) + ")");
        else if (matching_ok && mate[e.u] == e.v && lhs != rhs)
            flag("matching edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                 ") not tight");
    }
    HalfInt total_y;
    for (const HalfInt& y : s.y) total_y += y;
    HalfInt matched_value = HalfInt::whole(s.matching.size()) + s.c_sum();
    if (matched_value != total_y || s.cost != s.c_sum())
        flag("primal-dual equality violated");
    return verdict;
}

int mkec_bruteforce(const Graph& g, int k, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n) throw BoundError("mkec_bruteforce exceeds the size bound");
    if (k > g.edge_count())
        throw PreconditionError("mkec_bruteforce: k exceeds the edge count");
    if (k <= 0) return 0;
    int best = n + 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        int induced = 0;
        for (const Edge& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++induced;
        if (induced >= k) best = size;
    }
    return best;
}

}  // namespace stabilkit
