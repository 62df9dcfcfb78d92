#ifndef STABILKIT_FC_HPP
#define STABILKIT_FC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stabilkit/graph.hpp"
#include "stabilkit/lp.hpp"
#include "stabilkit/solution.hpp"

namespace stabilkit {

// One factor-critical component K together with its neighborhood in the
// Tutte set and the vertices pinned to y >= 1/2 (pins stand in for the
// loops of the loop-augmented component; a loop at v is exactly the
// constraint 2*y_v >= 1).
struct ComponentContext {
    std::vector<int> component;  // K, sorted
    std::vector<int> boundary;   // N(V(K)), sorted, disjoint from K
    std::vector<int> pins;       // subset of K, sorted
};

struct ExposureCost {
    Rat value;
    std::vector<std::pair<int, HalfInt>> y;  // over K u boundary

    HalfInt y_at(int v) const;
};

// Cost lower bound for solutions whose matching exposes w in K: the value
// of the covering LP on G[K u boundary] with y_w = 0 and y >= 1/2 on
// boundary u pins, minus (|K|-1)/2 + |boundary|/2. w must lie in K and
// must not be pinned.
ExposureCost exposure_cost(const Graph& g, const ComponentContext& ctx, int w);

inline Rat ell(const Graph& g, const ComponentContext& ctx, int w) {
    return exposure_cost(g, ctx, w).value;
}

struct BestExposure {
    Rat value;
    int argmin_w;  // smallest optimal vertex
};

// f(K): minimum of exposure_cost over all w in K. Requires ctx.pins empty.
BestExposure f_of_K(const Graph& g, const ComponentContext& ctx);

bool is_factor_critical(const Graph& g);

// Exact minimum fractional additive stabilizer of a factor-critical graph:
// expose the argmin vertex, take the LP-optimal cover, read c off the tight
// matching edges. Throws PreconditionError if g is not factor-critical.
StabilizerSolution solve_factor_critical(const Graph& g);

// Stabilization cost of component K when it is left unmatched under a
// fixed Tutte subset: pins = vertices of K adjacent to out_S. When every
// vertex is pinned the component has to be matched (must_be_matched).
// The value excludes boundary vertices from the objective; their cost is
// charged by the subset-cost formula in the Tutte-subset solver.
struct KappaResult {
    bool must_be_matched = false;
    Rat value;
    // Assembly data for the winning exposure (empty for trivial K):
    int w = -1;
    std::vector<std::pair<int, HalfInt>> y;   // over K
    Matching internal_matching;               // near-perfect in K exposing w
    std::vector<std::pair<Edge, HalfInt>> c;  // nonzero entries on internal edges
};

KappaResult kappa(const Graph& g, const ComponentContext& ctx,
                  const std::vector<int>& in_S, const std::vector<int>& out_S);

}  // namespace stabilkit

#endif
