#ifndef STABILKIT_FPT_HPP
#define STABILKIT_FPT_HPP

#include <optional>
#include <vector>

#include "stabilkit/ged.hpp"
#include "stabilkit/graph.hpp"
#include "stabilkit/rational.hpp"
#include "stabilkit/solution.hpp"

namespace stabilkit {

// Outcome of fixing the cover to 1 on a Tutte subset and 1/2 on the rest
// of the Tutte set. Infeasible when some component that has to be matched
// cannot be.
struct SubsetOutcome {
    std::vector<int> S_hat;  // sorted subset of Y
    bool feasible = false;
    Rat f_value;
    std::optional<StabilizerSolution> solution;  // present iff feasible
};

// Optimal stabilizer among those with y = 1 on S_hat and y = 1/2 on
// Y \ S_hat. Requires Z to be empty in ged (reduce_by_Z first) and
// ged == decompose(g).
SubsetOutcome mfasp_for_subset(const Graph& g, const GEDecomposition& ged,
                               const std::vector<int>& S_hat);

// Exact minimum fractional additive stabilizer by enumerating all subsets
// of the Tutte set (after splitting off Z). Stable inputs short-circuit to
// the zero certificate. Subsets are scanned by increasing popcount, then
// lexicographically; the first minimum wins.
StabilizerSolution solve_exact(const Graph& g);

struct TutteAllResult {
    StabilizerSolution solution;
    long long nontrivial_components = 0;  // |C+|
    long long tutte_size = 0;             // |Y|
    // Smallest integer k >= 1 with |C+| >= (1+1/k)|Y|, or 0 when none
    // exists; when k > 0 the cost is at most (k/2+1) * OPT.
    int k = 0;
};

// The whole-Tutte-set outcome (S_hat = Y); always feasible.
TutteAllResult solve_tutte_all(const Graph& g);

}  // namespace stabilkit

#endif
