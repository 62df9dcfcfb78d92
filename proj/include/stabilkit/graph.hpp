#ifndef STABILKIT_GRAPH_HPP
#define STABILKIT_GRAPH_HPP

#include <compare>
#include <vector>

#include "stabilkit/errors.hpp"

namespace stabilkit {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Orders the endpoints; rejects self-loops.
Edge make_edge(int a, int b);

// Simple undirected graph on vertices 0..n-1 with a canonical sorted edge
// list. Immutable after construction; two graphs compare equal iff they
// have the same vertex count and edge list.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int a, int b) const;
    // Index into edges() of {a,b}, or -1.
    int edge_index(int a, int b) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Induced subgraph on `vertices` (need not be sorted; duplicates rejected).
// new_to_old receives the vertex relabeling (new index -> original id).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* new_to_old);

// Set of pairwise-disjoint edges. Construction validates disjointness; the
// edge list is kept sorted.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }

    // mate[v] = partner of v, or -1 when exposed. n must bound all endpoints.
    std::vector<int> mate_vector(int n) const;
    bool covers(int v) const;
    // True iff every edge is an edge of g (endpoint ranges included).
    bool contained_in(const Graph& g) const;

    bool operator==(const Matching& o) const { return edges_ == o.edges_; }

private:
    std::vector<Edge> edges_;
};

}  // namespace stabilkit

#endif
