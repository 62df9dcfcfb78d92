#include "stabilkit/approx.hpp"

#include <algorithm>
#include <map>

#include "stabilkit/fc.hpp"
#include "stabilkit/matching.hpp"

namespace stabilkit {

ZReduction reduce_by_Z(const Graph& g) {
    GEDecomposition ged = decompose(g);
    ZReduction zr;
    std::vector<int> xy = ged.X;
    xy.insert(xy.end(), ged.Y.begin(), ged.Y.end());
    std::sort(xy.begin(), xy.end());
    zr.core = induced_subgraph(g, xy, &zr.core_to_orig);
    zr.orig_to_core.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < zr.core_to_orig.size(); ++i)
        zr.orig_to_core[zr.core_to_orig[i]] = static_cast<int>(i);

    std::vector<int> z_to_orig;
    Graph gz = induced_subgraph(g, ged.Z, &z_to_orig);
    Matching mz = max_cardinality_matching(gz);
    if (mz.size() * 2 != static_cast<int>(ged.Z.size()))
        throw InternalError("G[Z] has no perfect matching");
    std::vector<Edge> zedges;
    for (const Edge& e : mz.edges())
        zedges.push_back(make_edge(z_to_orig[e.u], z_to_orig[e.v]));
    zr.z_matching = Matching(std::move(zedges));
    return zr;
}

StabilizerSolution extend_over_Z(const Graph& g, const ZReduction& zr,
                                 const StabilizerSolution& core_solution) {
    std::vector<HalfInt> y(g.vertex_count(), HalfInt::half());
    for (size_t i = 0; i < zr.core_to_orig.size(); ++i) y[zr.core_to_orig[i]] = core_solution.y[i];

    std::vector<Edge> medges = zr.z_matching.edges();
    for (const Edge& e : core_solution.matching.edges())
        medges.push_back(make_edge(zr.core_to_orig[e.u], zr.core_to_orig[e.v]));

    std::vector<std::pair<Edge, HalfInt>> c;
    for (const auto& [e, val] : core_solution.c)
        c.push_back({make_edge(zr.core_to_orig[e.u], zr.core_to_orig[e.v]), val});

    return make_solution(g, Matching(std::move(medges)), std::move(y), std::move(c));
}

StabilizerSolution stable_zero_solution(const Graph& g) {
    GEDecomposition ged = decompose(g);
    std::vector<HalfInt> y(g.vertex_count(), HalfInt::half());
    for (int v : ged.X) y[v] = HalfInt::zero();
    for (int v : ged.Y) y[v] = HalfInt::one();
    Matching m = max_cardinality_matching(g);
    return make_solution(g, std::move(m), std::move(y), {});
}

ApproxResult solve_approx_detail(const Graph& g) {
    GEDecomposition ged = decompose(g);
    for (size_t i = 0; i < ged.components.size(); ++i)
        if (ged.trivial_flags[i])
            throw PreconditionError("trivial component {" +
                                    std::to_string(ged.components[i][0]) +
                                    "} in G[X]; use the exact solver instead");

    if (is_stable(g)) {
        ApproxResult out;
        out.solution = stable_zero_solution(g);
        out.exposed_components = 0;
        out.max_exposed_f = Rat(0);
        return out;
    }

    ZReduction zr = reduce_by_Z(g);
    const Graph& core = zr.core;
    GEDecomposition cged = decompose(core);

    const int ncomp = static_cast<int>(cged.components.size());
    std::vector<ComponentContext> ctxs(ncomp);
    std::vector<BestExposure> best(ncomp);
    std::vector<ExposureCost> exposure(ncomp);
    std::vector<char> in_y(core.vertex_count(), false);
    for (int b : cged.Y) in_y[b] = true;
    for (int i = 0; i < ncomp; ++i) {
        ctxs[i].component = cged.components[i];
        std::vector<char> nb(core.vertex_count(), false);
        for (int v : ctxs[i].component)
            for (int u : core.neighbors(v))
                if (in_y[u]) nb[u] = true;
        for (int b : cged.Y)
            if (nb[b]) ctxs[i].boundary.push_back(b);
        best[i] = f_of_K(core, ctxs[i]);
        exposure[i] = exposure_cost(core, ctxs[i], best[i].argmin_w);
    }

    // Contracted bipartite graph: Tutte vertices vs pseudo-vertices, edges
    // inside Y dropped, every edge at a pseudo-vertex weighted f(K).
    WeightedBipartite bip;
    bip.left = cged.Y;
    for (int i = 0; i < ncomp; ++i) bip.right.push_back(i);
    for (int i = 0; i < ncomp; ++i)
        for (int b : ctxs[i].boundary) bip.edges.push_back({b, i, best[i].value});
    auto cover_matching = max_weight_covering_matching(bip);
    if (!cover_matching) throw InternalError("Tutte set cannot be covered");

    std::vector<int> matched_to(ncomp, -1);  // component -> Tutte vertex
    for (const auto& [b, i] : cover_matching->pairs) matched_to[i] = b;

    std::vector<HalfInt> y(core.vertex_count(), HalfInt::zero());
    std::vector<Edge> medges;
    Rat max_exposed_f(0);
    long long exposed_count = 0;

    for (int i = 0; i < ncomp; ++i) {
        std::vector<int> new_to_old;
        Graph sub = induced_subgraph(core, ctxs[i].component, &new_to_old);
        int expose_orig;
        if (matched_to[i] >= 0) {
            int b = matched_to[i];
            int u = -1;
            for (int v : ctxs[i].component)
                if (core.has_edge(v, b)) { u = v; break; }
            if (u < 0) throw InternalError("matched component lost its edge");
            medges.push_back(make_edge(u, b));
            expose_orig = u;
            for (int v : ctxs[i].component) y[v] = HalfInt::half();
        } else {
            ++exposed_count;
            expose_orig = best[i].argmin_w;
            if (best[i].value > max_exposed_f) max_exposed_f = best[i].value;
            for (int v : ctxs[i].component) y[v] = exposure[i].y_at(v);
        }
        int w_local = static_cast<int>(std::lower_bound(new_to_old.begin(), new_to_old.end(),
                                                        expose_orig) - new_to_old.begin());
        auto sub_matching = matching_exposing(sub, w_local);
        if (!sub_matching) throw InternalError("component is not factor-critical");
        for (const Edge& e : sub_matching->edges())
            medges.push_back(make_edge(new_to_old[e.u], new_to_old[e.v]));
    }

    for (int b : cged.Y) {
        HalfInt val = HalfInt::half();
        for (int i = 0; i < ncomp; ++i) {
            if (matched_to[i] >= 0) continue;
            if (!std::binary_search(ctxs[i].boundary.begin(), ctxs[i].boundary.end(), b)) continue;
            HalfInt candidate = exposure[i].y_at(b);
            if (candidate > val) val = candidate;
        }
        y[b] = val;
    }

    Matching mbar(std::move(medges));
    std::vector<std::pair<Edge, HalfInt>> c;
    for (const Edge& e : mbar.edges()) {
        HalfInt val = y[e.u] + y[e.v] - HalfInt::one();
        if (val != HalfInt::zero()) c.push_back({e, val});
    }
    StabilizerSolution core_solution = make_solution(core, std::move(mbar), std::move(y),
                                                     std::move(c));

    ApproxResult out;
    out.solution = extend_over_Z(g, zr, core_solution);
    out.exposed_components = exposed_count;
    out.max_exposed_f = max_exposed_f;
    if (exposed_count != ncomp - static_cast<int>(cged.Y.size()))
        throw InternalError("exposed component count differs from the deficiency");
    return out;
}

StabilizerSolution solve_approx(const Graph& g) { return solve_approx_detail(g).solution; }

}  // namespace stabilkit
