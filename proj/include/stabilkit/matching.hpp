#ifndef STABILKIT_MATCHING_HPP
#define STABILKIT_MATCHING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stabilkit/graph.hpp"
#include "stabilkit/rational.hpp"

namespace stabilkit {

// Maximum-cardinality matching via blossom augmentation, O(n^3).
// Deterministic: augmenting roots and adjacency are scanned in index order.
Matching max_cardinality_matching(const Graph& g);

int matching_number(const Graph& g);

// A matching of size nu(g) exposing w, if one exists.
std::optional<Matching> matching_exposing(const Graph& g, int w);

// Weighted bipartite graph; `left` is the side that must be covered.
// Endpoints of edges are labels appearing in left/right (the two label
// spaces are independent).
struct WeightedBipartite {
    struct WEdge {
        int l = 0;
        int r = 0;
        Rat w;
    };
    std::vector<int> left;
    std::vector<int> right;
    std::vector<WEdge> edges;
};

struct BipartiteMatching {
    std::vector<std::pair<int, int>> pairs;  // (left label, right label), sorted
    Rat weight;

    bool matches_right(int r) const;
};

// Among matchings covering every left vertex, returns one of maximum total
// weight; nullopt when no matching covers the left side. Ties are broken by
// the lexicographically smallest sorted (l,r) pair sequence. Weights must
// be nonnegative.
std::optional<BipartiteMatching> max_weight_covering_matching(const WeightedBipartite& b);

// Value and matched-right-label set of the optimum, skipping the
// lexicographic tie-break work. Used on hot paths where only the weight
// and the set of matched components matter (both are tie-invariant here
// because all edges at one right vertex carry equal weight).
std::optional<BipartiteMatching> max_weight_covering_matching_any(const WeightedBipartite& b);

// Exact Hungarian algorithm: minimum-cost perfect assignment on an n x n
// int64 matrix. Returns (row_of_col, total cost).
std::pair<std::vector<int>, long long> min_cost_assignment(
    const std::vector<std::vector<long long>>& cost);

}  // namespace stabilkit

#endif
