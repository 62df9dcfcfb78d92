#ifndef STABILKIT_SOLUTION_HPP
#define STABILKIT_SOLUTION_HPP

#include <utility>
#include <vector>

#include "stabilkit/graph.hpp"
#include "stabilkit/halfint.hpp"

namespace stabilkit {

// A stabilizer certificate: matching M, fractional vertex cover y and edge
// weight increase c, plus the total cost sum(c). c holds only its nonzero
// entries, sorted by edge. Equality is field-wise and exact.
struct StabilizerSolution {
    int n = 0;
    Matching matching;
    std::vector<HalfInt> y;
    std::vector<std::pair<Edge, HalfInt>> c;
    HalfInt cost;

    bool operator==(const StabilizerSolution&) const = default;

    HalfInt c_at(Edge e) const;
    HalfInt c_sum() const;
};

// Builds a solution and checks every structural invariant against g:
//   - matching is a matching in g,
//   - c is supported on the matching with 0 <= c_e <= 1,
//   - y >= 0 and y_u + y_v >= 1 + c_uv on every edge,
//   - exposed vertices have y = 0 and matching edges are tight,
//   - cost = sum(c) = sum(y) - |matching|.
// Zero c entries are dropped. Violations throw InternalError: every solver
// in this project is expected to produce valid certificates.
StabilizerSolution make_solution(const Graph& g, Matching matching,
                                 std::vector<HalfInt> y,
                                 std::vector<std::pair<Edge, HalfInt>> c);

}  // namespace stabilkit

#endif
