#ifndef STABILKIT_GENERATORS_HPP
#define STABILKIT_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabilkit/graph.hpp"

namespace stabilkit {

// Instance family encoding minimum-k-edge-coverage: one triangle per base
// edge, q stacked copies of the base vertex set as the Tutte side, padding
// so the triangle count is |Y'| + k, and |Y'|(q-1) fully-connected filler
// triangles.
struct MkecInstance {
    Graph graph;  // G-hat
    Graph base;
    int k = 0;
    int q = 0;
    int y_width = 0;                               // |Y'| = base n + extra columns
    std::vector<int> extra_y_cols;                 // column indices beyond base n
    std::vector<std::vector<int>> y_copies;        // q rows of y_width vertex ids
    std::map<Edge, std::array<int, 3>> triangle_of_edge;
    std::vector<std::array<int, 3>> padding_triangles;  // connected to all of Y''
    std::vector<std::array<int, 3>> cprime_triangles;   // connected to all of Y''

    std::vector<int> tutte_vertices() const;  // all of Y'', sorted
    int triangle_count() const;
};

// q = 0 requests the minimal admissible value max(k, max degree of base).
// Throws PreconditionError when k >= |E(base)| or q below the max degree.
MkecInstance gen_mkec(const Graph& base, int k, int q);

std::string mkec_metadata_json(const MkecInstance& inst);

// Instance family encoding set cover: n copies of every set vertex, a
// (2N+1)-clique hanging off each copy, and one odd cycle per element with
// a fully-connected dummy vertex when the element frequency is even.
struct SetCoverInstance {
    struct CliqueInfo {
        int set_index = 0;   // 1-based j
        int copy_index = 0;  // 1-based i
        int c_vertex = 0;    // designated clique vertex adjacent to S_j^i
        std::vector<int> vertices;
    };
    struct CycleInfo {
        int elem_index = 0;  // 1-based i
        bool has_dummy = false;
        std::vector<int> vertices;  // x_i^1..x_i^L; dummy last when present
    };

    Graph graph;
    std::vector<std::vector<int>> sets;  // 1-based element labels
    int n_elems = 0;
    int N = 0;
    bool below_theoretical_bound = false;  // N <= (n*m)^2
    std::vector<std::vector<int>> y_vertex;  // y_vertex[j-1][i-1] = id of S_j^i
    std::vector<CliqueInfo> cliques;         // j-major order
    std::vector<CycleInfo> cycles;

    std::vector<int> tutte_vertices() const;  // all S_j^i, sorted
};

// Requires every element to appear in at least two sets and N >= 1.
SetCoverInstance gen_setcover(const std::vector<std::vector<int>>& sets, int n_elems, int N);

std::string setcover_metadata_json(const SetCoverInstance& inst);

// Graph grown from a single vertex by attaching odd ears at seeded-random
// endpoints; the result is verified factor-critical. Lengths must be odd;
// the first ear becomes a cycle and must have length >= 3.
Graph gen_factor_critical(const std::vector<int>& ear_lengths, std::uint64_t seed);

// Seeded Erdos-Renyi-style graph: each pair is an edge with probability
// p_num/p_den. Same parameters always produce the same graph.
Graph gen_random(int n, long long p_num, long long p_den, std::uint64_t seed);

std::string simple_metadata_json(const std::string& kind, const std::vector<long long>& params,
                                 std::uint64_t seed);

}  // namespace stabilkit

#endif
