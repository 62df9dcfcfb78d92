#include "stabilkit/solution.hpp"

#include <algorithm>

namespace stabilkit {

HalfInt StabilizerSolution::c_at(Edge e) const {
    auto it = std::lower_bound(c.begin(), c.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    if (it != c.end() && it->first == e) return it->second;
    return HalfInt::zero();
}

HalfInt StabilizerSolution::c_sum() const {
    HalfInt s;
    for (const auto& [e, val] : c) s += val;
    return s;
}

StabilizerSolution make_solution(const Graph& g, Matching matching,
                                 std::vector<HalfInt> y,
                                 std::vector<std::pair<Edge, HalfInt>> c) {
    const int n = g.vertex_count();
    if (static_cast<int>(y.size()) != n)
        throw InternalError("solution cover vector has wrong length");
    if (!matching.contained_in(g))
        throw InternalError("solution matching uses edges outside the graph");

    std::sort(c.begin(), c.end());
    std::vector<std::pair<Edge, HalfInt>> nonzero;
    for (const auto& [e, val] : c) {
        if (val == HalfInt::zero()) continue;
        if (!nonzero.empty() && nonzero.back().first == e)
            throw InternalError("duplicate stabilizer entry");
        nonzero.push_back({e, val});
    }

    StabilizerSolution s;
    s.n = n;
    s.matching = std::move(matching);
    s.y = std::move(y);
    s.c = std::move(nonzero);

    std::vector<int> mate = s.matching.mate_vector(n);

    for (const auto& [e, val] : s.c) {
        if (mate[e.u] != e.v)
            throw InternalError("stabilizer entry on a non-matching edge");
        if (val < HalfInt::zero() || val > HalfInt::one())
            throw InternalError("stabilizer entry outside [0,1]");
    }
    for (int v = 0; v < n; ++v) {
        if (s.y[v] < HalfInt::zero()) throw InternalError("negative cover value");
        if (mate[v] == -1 && s.y[v] != HalfInt::zero())
            throw InternalError("exposed vertex with nonzero cover value");
    }
    for (const Edge& e : g.edges()) {
        HalfInt lhs = s.y[e.u] + s.y[e.v];
        HalfInt rhs = HalfInt::one() + s.c_at(e);
        if (lhs < rhs) throw InternalError("cover constraint violated");
        if (mate[e.u] == e.v && lhs != rhs)
            throw InternalError("matching edge not tight");
    }

    HalfInt total_y;
    for (const HalfInt& val : s.y) total_y += val;
    s.cost = s.c_sum();
    if (s.cost != total_y - HalfInt::whole(s.matching.size()))
        throw InternalError("cost does not equal cover total minus matching size");
    return s;
}

}  // namespace stabilkit
