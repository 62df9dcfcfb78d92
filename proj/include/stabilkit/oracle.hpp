#ifndef STABILKIT_ORACLE_HPP
#define STABILKIT_ORACLE_HPP

#include <string>
#include <vector>

#include "stabilkit/graph.hpp"
#include "stabilkit/solution.hpp"

namespace stabilkit {

inline constexpr int kDefaultOracleMaxN = 12;

// All maximum-cardinality matchings, each exactly once, ordered
// lexicographically by their sorted edge sequences. Throws BoundError when
// the graph exceeds max_n.
std::vector<Matching> enumerate_maximum_matchings(const Graph& g,
                                                  int max_n = kDefaultOracleMaxN);

// Ground-truth optimum: the cheapest certified reweighting over all
// maximum matchings. First matching in enumeration order wins ties.
StabilizerSolution solve_oracle(const Graph& g, int max_n = kDefaultOracleMaxN);

struct Verdict {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Checks a certificate against a graph and lists every violated condition:
// matching validity, support and range of c, cover feasibility,
// complementary slackness, and the primal-dual value equality (including
// the recorded cost). An empty list certifies that (g, 1+c) is stable with
// the given matching optimal.
Verdict verify_certificate(const Graph& g, const StabilizerSolution& s);

// Minimum number of vertices whose induced subgraph has at least k edges,
// by subset enumeration.
int mkec_bruteforce(const Graph& g, int k, int max_n = 12);

}  // namespace stabilkit

#endif
