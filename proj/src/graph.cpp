#include "stabilkit/graph.hpp"

#include <algorithm>

namespace stabilkit {

Edge make_edge(int a, int b) {
    if (a == b) throw InternalError("self-loop edge (" + std::to_string(a) + ")");
    if (a > b) std::swap(a, b);
    return Edge{a, b};
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InternalError("negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v >= n_ || e.u >= e.v)
            throw InternalError("bad edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") in graph on " +
                                std::to_string(n_) + " vertices");
        if (i > 0 && edges_[i - 1] == e)
            throw InternalError("duplicate edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
    }
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
    if (a == b) return -1;
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
    if (it != edges_.end() && *it == Edge{a, b})
        return static_cast<int>(it - edges_.begin());
    return -1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* new_to_old) {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw InternalError("duplicate vertex in induced subgraph");
    std::vector<int> old_to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count())
            throw InternalError("induced subgraph vertex out of range");
        old_to_new[verts[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int u = old_to_new[e.u], v = old_to_new[e.v];
        if (u >= 0 && v >= 0) edges.push_back(make_edge(u, v));
    }
    if (new_to_old) *new_to_old = verts;
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    std::vector<int> seen;
    for (const Edge& e : edges_) {
        if (e.u >= e.v) throw InternalError("matching edge not normalized");
        seen.push_back(e.u);
        seen.push_back(e.v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InternalError("matching edges are not disjoint");
}

std::vector<int> Matching::mate_vector(int n) const {
    std::vector<int> mate(n, -1);
    for (const Edge& e : edges_) {
        if (e.v >= n) throw InternalError("matching endpoint out of range");
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    return mate;
}

bool Matching::covers(int v) const {
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) return true;
    return false;
}

bool Matching::contained_in(const Graph& g) const {
    for (const Edge& e : edges_)
        if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) return false;
    return true;
}

}  // namespace stabilkit
