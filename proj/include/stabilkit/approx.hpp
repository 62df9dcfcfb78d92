#ifndef STABILKIT_APPROX_HPP
#define STABILKIT_APPROX_HPP

#include <vector>

#include "stabilkit/ged.hpp"
#include "stabilkit/graph.hpp"
#include "stabilkit/rational.hpp"
#include "stabilkit/solution.hpp"

namespace stabilkit {

// Splitting off Z: the induced core on X u Y plus a perfect matching of
// G[Z]. Solutions on the core extend to g with y = 1/2 on Z and c = 0 on
// all edges touching Z, at no extra cost.
struct ZReduction {
    Graph core;
    std::vector<int> core_to_orig;  // new index -> original vertex
    std::vector<int> orig_to_core;  // -1 for vertices of Z
    Matching z_matching;            // perfect matching of G[Z], original ids
};

ZReduction reduce_by_Z(const Graph& g);

// Extends a solution on the core back to the full graph.
StabilizerSolution extend_over_Z(const Graph& g, const ZReduction& zr,
                                 const StabilizerSolution& core_solution);

// Zero-cost certificate for a stable graph: y = 0 on X, 1 on Y, 1/2 on Z.
StabilizerSolution stable_zero_solution(const Graph& g);

struct ApproxResult {
    StabilizerSolution solution;
    long long exposed_components = 0;  // r = #components - |Y|
    Rat max_exposed_f;                 // max f(K) over exposed components (0 if none)
};

// Contract-each-component approximation: weight components by f(K), match
// them to the Tutte set by maximum weight covering Y, expose the rest at
// their cheapest vertex. Requires every component of G[X] to be
// nontrivial (PreconditionError names an offending singleton otherwise).
// Feasible always; cost at most OPT^2 on unstable inputs.
ApproxResult solve_approx_detail(const Graph& g);
StabilizerSolution solve_approx(const Graph& g);

}  // namespace stabilkit

#endif
