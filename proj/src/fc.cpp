#include "stabilkit/fc.hpp"

#include <algorithm>

#include "stabilkit/matching.hpp"

namespace stabilkit {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

Rat halfint_sum_minus_offsets(HalfInt objective, size_t k_size, size_t boundary_size) {
    Rat value = objective.to_rat();
    value -= Rat(static_cast<long long>(k_size) - 1, 2);
    value -= Rat(static_cast<long long>(boundary_size), 2);
    return value;
}

}  // namespace

HalfInt ExposureCost::y_at(int v) const {
    auto it = std::lower_bound(y.begin(), y.end(), v,
                               [](const auto& entry, int key) { return entry.first < key; });
    if (it == y.end() || it->first != v) throw InternalError("vertex missing from exposure result");
    return it->second;
}

ExposureCost exposure_cost(const Graph& g, const ComponentContext& ctx, int w) {
    if (!contains(ctx.component, w))
        throw PreconditionError("exposure vertex not in the component");
    if (contains(ctx.pins, w))
        throw PreconditionError("exposure vertex is pinned");
    CoveringLP p;
    p.vertices = sorted_union(ctx.component, ctx.boundary);
    p.zero_fixed = {w};
    p.half_lower = sorted_union(ctx.boundary, ctx.pins);
    auto res = solve_covering_lp(g, p);
    if (!res) throw InternalError("exposure LP infeasible");
    ExposureCost out;
    out.value = halfint_sum_minus_offsets(res->objective, ctx.component.size(),
                                          ctx.boundary.size());
    out.y = std::move(res->y);
    return out;
}

BestExposure f_of_K(const Graph& g, const ComponentContext& ctx) {
    if (!ctx.pins.empty()) throw PreconditionError("f_of_K requires no pins");
    BestExposure best;
    bool first = true;
    for (int w : ctx.component) {
        Rat v = exposure_cost(g, ctx, w).value;
        if (first || v < best.value) {
            best.value = v;
            best.argmin_w = w;
            first = false;
        }
    }
    if (first) throw PreconditionError("empty component");
    return best;
}

bool is_factor_critical(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0 || n == 0) return false;
    if (matching_number(g) != (n - 1) / 2) return false;
    for (int w = 0; w < n; ++w)
        if (!matching_exposing(g, w)) return false;
    return true;
}

StabilizerSolution solve_factor_critical(const Graph& g) {
    if (!is_factor_critical(g))
        throw PreconditionError("input graph is not factor-critical");
    const int n = g.vertex_count();

    ComponentContext ctx;
    for (int v = 0; v < n; ++v) ctx.component.push_back(v);
    BestExposure best = f_of_K(g, ctx);
    ExposureCost opt = exposure_cost(g, ctx, best.argmin_w);

    auto m = matching_exposing(g, best.argmin_w);
    if (!m) throw InternalError("factor-critical graph lost an exposing matching");

    std::vector<HalfInt> y(n);
    for (const auto& [v, val] : opt.y) y[v] = val;
    std::vector<std::pair<Edge, HalfInt>> c;
    for (const Edge& e : m->edges()) {
        HalfInt val = y[e.u] + y[e.v] - HalfInt::one();
        if (val != HalfInt::zero()) c.push_back({e, val});
    }
    StabilizerSolution s = make_solution(g, std::move(*m), std::move(y), std::move(c));
    if (s.cost.to_rat() != best.value)
        throw InternalError("factor-critical cost mismatch with f(K)");
    return s;
}

KappaResult kappa(const Graph& g, const ComponentContext& ctx,
                  const std::vector<int>& in_S, const std::vector<int>& out_S) {
    if (sorted_union(in_S, out_S) != ctx.boundary)
        throw PreconditionError("kappa: in_S and out_S must split the boundary");

    std::vector<int> pins;
    for (int v : ctx.component) {
        bool pinned = false;
        for (int u : g.neighbors(v))
            if (contains(out_S, u)) { pinned = true; break; }
        if (pinned) pins.push_back(v);
    }

    KappaResult out;
    if (pins.size() == ctx.component.size()) {
        out.must_be_matched = true;
        return out;
    }
    if (ctx.component.size() == 1) {
        // Unpinned singleton: y = 0 is feasible and free.
        out.value = Rat(0);
        out.w = ctx.component[0];
        out.y = {{ctx.component[0], HalfInt::zero()}};
        return out;
    }

    bool first = true;
    CoveringResult best_lp;
    for (int w : ctx.component) {
        if (contains(pins, w)) continue;
        CoveringLP p;
        p.vertices = ctx.component;
        p.zero_fixed = {w};
        p.half_lower = pins;
        auto res = solve_covering_lp(g, p);
        if (!res) throw InternalError("kappa LP infeasible");
        Rat value = halfint_sum_minus_offsets(res->objective, ctx.component.size(), 0);
        if (first || value < out.value) {
            out.value = value;
            out.w = w;
            best_lp = *res;
            first = false;
        }
    }
    if (first) throw InternalError("kappa: no admissible exposure vertex");

    std::vector<int> new_to_old;
    Graph sub = induced_subgraph(g, ctx.component, &new_to_old);
    int w_local = static_cast<int>(std::lower_bound(new_to_old.begin(), new_to_old.end(),
                                                    out.w) - new_to_old.begin());
    auto sub_matching = matching_exposing(sub, w_local);
    if (!sub_matching || sub_matching->size() * 2 + 1 != static_cast<int>(new_to_old.size()))
        throw InternalError("component is not factor-critical");
    std::vector<Edge> edges;
    for (const Edge& e : sub_matching->edges())
        edges.push_back(make_edge(new_to_old[e.u], new_to_old[e.v]));
    out.internal_matching = Matching(std::move(edges));
    out.y = best_lp.y;
    for (const Edge& e : out.internal_matching.edges()) {
        HalfInt val = best_lp.y_at(e.u) + best_lp.y_at(e.v) - HalfInt::one();
        if (val < HalfInt::zero()) throw InternalError("kappa: negative c entry");
        if (val != HalfInt::zero()) out.c.push_back({e, val});
    }
    return out;
}

}  // namespace stabilkit
