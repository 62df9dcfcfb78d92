#include "stabilkit/lp.hpp"

#include <algorithm>
#include <functional>

namespace stabilkit {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Bipartite maximum matching (Kuhn) plus Konig minimum-vertex-cover
// extraction with forced-in and forced-out vertices on either side.
// Vertices: left 0..nl-1, right 0..nr-1, adj[l] lists right indices.
struct KonigCover {
    std::vector<char> in_cover_left, in_cover_right;
};

KonigCover konig_min_cover(int nl, int nr, const std::vector<std::vector<int>>& adj,
                           const std::vector<char>& forced_in_left,
                           const std::vector<char>& forced_in_right) {
    // Edges with a forced-in endpoint are already covered; match the rest.
    std::vector<std::vector<int>> res(nl);
    for (int l = 0; l < nl; ++l) {
        if (forced_in_left[l]) continue;
        for (int r : adj[l])
            if (!forced_in_right[r]) res[l].push_back(r);
    }
    std::vector<int> mate_l(nl, -1), mate_r(nr, -1);
    std::vector<char> used;
    std::function<bool(int)> try_augment = [&](int l) -> bool {
        for (int r : res[l]) {
            if (used[r]) continue;
            used[r] = true;
            if (mate_r[r] == -1 || try_augment(mate_r[r])) {
                mate_l[l] = r;
                mate_r[r] = l;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < nl; ++l) {
        if (res[l].empty()) continue;
        used.assign(nr, false);
        try_augment(l);
    }
    // Alternating reachability from unmatched left vertices.
    std::vector<char> reach_l(nl, false), reach_r(nr, false);
    std::vector<int> stack;
    for (int l = 0; l < nl; ++l)
        if (mate_l[l] == -1 && !res[l].empty()) {
            reach_l[l] = true;
            stack.push_back(l);
        }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : res[l]) {
            if (reach_r[r]) continue;
            reach_r[r] = true;
            int l2 = mate_r[r];
            if (l2 != -1 && !reach_l[l2]) {
                reach_l[l2] = true;
                stack.push_back(l2);
            }
        }
    }
    KonigCover cover;
    cover.in_cover_left.assign(nl, false);
    cover.in_cover_right.assign(nr, false);
    for (int l = 0; l < nl; ++l) {
        if (forced_in_left[l]) cover.in_cover_left[l] = true;
        else if (mate_l[l] != -1 && !reach_l[l]) cover.in_cover_left[l] = true;
    }
    for (int r = 0; r < nr; ++r) {
        if (forced_in_right[r]) cover.in_cover_right[r] = true;
        else if (reach_r[r]) cover.in_cover_right[r] = true;
    }
    return cover;
}

}  // namespace

HalfInt CoveringResult::y_at(int v) const {
    auto it = std::lower_bound(y.begin(), y.end(), v,
                               [](const auto& entry, int key) { return entry.first < key; });
    if (it == y.end() || it->first != v) throw InternalError("vertex missing from LP result");
    return it->second;
}

std::optional<CoveringResult> solve_covering_lp(const Graph& g, const CoveringLP& p) {
    const int k = static_cast<int>(p.vertices.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) local[p.vertices[i]] = i;
    for (int v : p.zero_fixed)
        if (local[v] < 0) throw PreconditionError("zero_fixed vertex outside U");
    for (int v : p.half_lower) {
        if (local[v] < 0) throw PreconditionError("half_lower vertex outside U");
        if (contains(p.zero_fixed, v))
            throw PreconditionError("vertex both zero_fixed and half_lower");
    }

    // Doubled bipartite program: copies v1 (left) and v2 (right) per v,
    // edges (u1,v2) and (v1,u2) per edge, and the copy edge (v1,v2) for
    // each half-lower vertex (a loop {v,v} is the constraint 2 y_v >= 1).
    // Zero-fixed copies leave the program; their neighbors are forced into
    // the cover. The Konig cover of the rest is the integral optimum;
    // averaging the two copies gives the half-integral y.
    std::vector<char> zero(k, false), half(k, false);
    for (int v : p.zero_fixed) zero[local[v]] = true;
    for (int v : p.half_lower) half[local[v]] = true;

    std::vector<std::pair<int, int>> lp_edges;  // local indices
    for (const Edge& e : g.edges()) {
        int a = local[e.u], b = local[e.v];
        if (a < 0 || b < 0) continue;
        if (zero[a] && zero[b]) return std::nullopt;
        lp_edges.push_back({a, b});
    }

    std::vector<char> forced_in_left(k, false), forced_in_right(k, false);
    std::vector<std::vector<int>> adj(k);
    auto add_doubled_edge = [&](int l, int r) {
        if (zero[l] && zero[r]) throw InternalError("unreachable: infeasible edge survived");
        if (zero[l]) { forced_in_right[r] = true; return; }
        if (zero[r]) { forced_in_left[l] = true; return; }
        adj[l].push_back(r);
    };
    for (const auto& [a, b] : lp_edges) {
        add_doubled_edge(a, b);
        add_doubled_edge(b, a);
    }
    for (int i = 0; i < k; ++i)
        if (half[i]) add_doubled_edge(i, i);

    KonigCover cover = konig_min_cover(k, k, adj, forced_in_left, forced_in_right);

    CoveringResult result;
    HalfInt total;
    for (int i = 0; i < k; ++i) {
        long long doubled = (cover.in_cover_left[i] ? 1 : 0) + (cover.in_cover_right[i] ? 1 : 0);
        HalfInt y = HalfInt::from_doubled(doubled);
        result.y.push_back({p.vertices[i], y});
        total += y;
    }
    result.objective = total;
    return result;
}

std::optional<LpGmResult> solve_lp_gm(const Graph& g, const Matching& m) {
    if (!m.contained_in(g)) throw PreconditionError("matching not contained in graph");
    const int n = g.vertex_count();
    std::vector<int> mate = m.mate_vector(n);

    CoveringLP p;
    for (int v = 0; v < n; ++v) {
        p.vertices.push_back(v);
        if (mate[v] == -1) p.zero_fixed.push_back(v);
    }
    auto res = solve_covering_lp(g, p);
    if (!res) return std::nullopt;

    LpGmResult out;
    out.y.resize(n);
    for (const auto& [v, y] : res->y) out.y[v] = y;
    for (const Edge& e : m.edges()) {
        HalfInt c = out.y[e.u] + out.y[e.v] - HalfInt::one();
        if (c < HalfInt::zero()) throw InternalError("negative c on matching edge");
        if (c != HalfInt::zero()) out.c.push_back({e, c});
    }
    out.cost = res->objective - HalfInt::whole(m.size());
    return out;
}

Rat tau_f(const Graph& g, const std::vector<std::pair<Edge, HalfInt>>& c) {
    const int n = g.vertex_count();
    if (n == 0) return Rat(0);
    // Dual route on the bipartite double: the minimum cover of the doubled
    // program equals a maximum-weight bipartite matching, computed as an
    // assignment with integer weights 2(1+c_e); the cover value is a
    // quarter of the assignment value.
    std::vector<std::vector<long long>> weight(n, std::vector<long long>(n, 0));
    for (const Edge& e : g.edges()) {
        weight[e.u][e.v] = 2;
        weight[e.v][e.u] = 2;
    }
    for (const auto& [e, val] : c) {
        if (val < HalfInt::zero() || val > HalfInt::one())
            throw PreconditionError("tau_f: c entry outside [0,1]");
        if (g.edge_index(e.u, e.v) < 0)
            throw PreconditionError("tau_f: c entry on a non-edge");
        weight[e.u][e.v] = 2 + val.doubled();
        weight[e.v][e.u] = 2 + val.doubled();
    }
    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost[i][j] = -weight[i][j];
    auto [assignment, total] = min_cost_assignment(cost);
    return Rat(-total, 4);
}

}  // namespace stabilkit
