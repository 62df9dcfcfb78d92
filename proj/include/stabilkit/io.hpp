#ifndef STABILKIT_IO_HPP
#define STABILKIT_IO_HPP

#include <string>
#include <string_view>

#include "stabilkit/graph.hpp"
#include "stabilkit/solution.hpp"

namespace stabilkit {

// Instance format: first line "n m", then m lines "u v" with 0-indexed
// endpoints; lines starting with '#' are ignored; LF endings. Malformed
// lines, out-of-range vertices, self-loops and duplicate edges raise
// ParseError naming the offending line.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Certificate format (single JSON object, fixed key order, doubled-integer
// encoding):
//   {"n":..,"matching":[[u,v],..],"y2":[..],"c2":[[u,v,int],..],"cost2":..}
// Only nonzero c entries are listed. parse(serialize(s)) == s.
std::string serialize_solution(const StabilizerSolution& s);
StabilizerSolution parse_solution(std::string_view text);

}  // namespace stabilkit

#endif
