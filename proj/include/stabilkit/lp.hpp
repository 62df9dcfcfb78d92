#ifndef STABILKIT_LP_HPP
#define STABILKIT_LP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stabilkit/graph.hpp"
#include "stabilkit/halfint.hpp"
#include "stabilkit/matching.hpp"
#include "stabilkit/solution.hpp"

namespace stabilkit {

// The normalized covering LP every program in this library reduces to:
//   minimize sum_{v in U} y_v
//   s.t. y_u + y_v >= 1 on every edge of G[U], y >= 0,
//        y_v  = 0   for v in zero_fixed,
//        y_v >= 1/2 for v in half_lower.
// zero_fixed and half_lower must be disjoint subsets of U.
struct CoveringLP {
    std::vector<int> vertices;    // U, sorted
    std::vector<int> zero_fixed;  // sorted
    std::vector<int> half_lower;  // sorted
};

struct CoveringResult {
    std::vector<std::pair<int, HalfInt>> y;  // one entry per v in U, sorted by v
    HalfInt objective;

    HalfInt y_at(int v) const;
};

// Exact optimum with a guaranteed half-integral solution, obtained by
// solving the bipartite-doubled program integrally (Konig cover on the
// double, with y_v >= 1/2 encoded as the copy edge (v1,v2)) and averaging
// the two copies. nullopt iff some edge of G[U] has both endpoints fixed
// to zero.
std::optional<CoveringResult> solve_covering_lp(const Graph& g, const CoveringLP& p);

struct LpGmResult {
    std::vector<std::pair<Edge, HalfInt>> c;  // nonzero entries, on matching edges
    std::vector<HalfInt> y;                   // per vertex of g
    HalfInt cost;                             // sum of c
};

// Minimum-cost reweighting certified by the fixed matching m:
//   min sum_{e in m} c_e  s.t.  y_u + y_v = 1 + c_uv on m, y_u + y_v >= 1
//   off m, y = 0 on exposed vertices, c,y >= 0.
// Solved by eliminating c into the covering LP above. nullopt iff some edge
// joins two exposed vertices (m cannot certify any stabilizer).
std::optional<LpGmResult> solve_lp_gm(const Graph& g, const Matching& m);

// Exact value of the minimum fractional (1+c)-vertex cover. Always
// feasible; the value need not be half-integral for general c.
Rat tau_f(const Graph& g, const std::vector<std::pair<Edge, HalfInt>>& c);

}  // namespace stabilkit

#endif
