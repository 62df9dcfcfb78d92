#include "stabilkit/ged.hpp"

#include <algorithm>

#include "stabilkit/matching.hpp"

namespace stabilkit {

std::vector<int> inessential_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (matching_exposing(g, v)) out.push_back(v);
    return out;
}

GEDecomposition decompose(const Graph& g) {
    GEDecomposition d;
    d.X = inessential_vertices(g);
    const int n = g.vertex_count();
    std::vector<char> in_x(n, false), in_y(n, false);
    for (int v : d.X) in_x[v] = true;
    for (int v : d.X)
        for (int u : g.neighbors(v))
            if (!in_x[u]) in_y[u] = true;
    for (int v = 0; v < n; ++v) {
        if (in_y[v]) d.Y.push_back(v);
        else if (!in_x[v]) d.Z.push_back(v);
    }
    // Connected components of G[X], by DFS from the smallest unvisited vertex.
    std::vector<char> seen(n, false);
    for (int root : d.X) {
        if (seen[root]) continue;
        std::vector<int> comp, stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (in_x[u] && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        d.components.push_back(std::move(comp));
    }
    for (const auto& comp : d.components) d.trivial_flags.push_back(comp.size() == 1);
    return d;
}

bool is_stable(const Graph& g) {
    std::vector<int> x = inessential_vertices(g);
    std::vector<char> in_x(g.vertex_count(), false);
    for (int v : x) in_x[v] = true;
    for (const Edge& e : g.edges())
        if (in_x[e.u] && in_x[e.v]) return false;
    return true;
}

}  // namespace stabilkit
