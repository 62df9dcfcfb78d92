#ifndef STABILKIT_GED_HPP
#define STABILKIT_GED_HPP

#include <vector>

#include "stabilkit/graph.hpp"

namespace stabilkit {

// Gallai-Edmonds decomposition V = X u Y u Z:
//   X = inessential vertices (exposed by some maximum matching),
//   Y = N(X) \ X (the Tutte set), Z = the rest.
// components lists the connected components of G[X], each sorted, ordered
// by smallest vertex; every one is factor-critical.
struct GEDecomposition {
    std::vector<int> X, Y, Z;
    std::vector<std::vector<int>> components;
    std::vector<bool> trivial_flags;  // per component: |K| == 1
};

// { v : nu(g - v) = nu(g) }, by n independent essentiality tests.
std::vector<int> inessential_vertices(const Graph& g);

GEDecomposition decompose(const Graph& g);

// True iff G[X] has no edges, i.e. nu(g) = tau_f(g).
bool is_stable(const Graph& g);

}  // namespace stabilkit

#endif
