#include "stabilkit/fpt.hpp"

#include <algorithm>
#include <map>

#include "stabilkit/approx.hpp"
#include "stabilkit/fc.hpp"
#include "stabilkit/matching.hpp"

namespace stabilkit {

namespace {

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Shared state for evaluating Tutte subsets on a Z-free graph. Component
// costs are cached per (component, pinned boundary) pair: the sentinel
// weight keeps the arithmetic exact and the feasibility rule is simply
// "every must-be-matched pseudo-vertex ended up matched".
class SubsetSolver {
public:
    SubsetSolver(const Graph& g, const GEDecomposition& ged) : g_(g), ged_(ged) {
        if (!ged.Z.empty())
            throw PreconditionError("Tutte-subset solver requires Z to be empty");
        const int ncomp = static_cast<int>(ged.components.size());
        ctxs_.resize(ncomp);
        std::vector<char> in_y(g.vertex_count(), false);
        for (int b : ged.Y) in_y[b] = true;
        for (int i = 0; i < ncomp; ++i) {
            ctxs_[i].component = ged.components[i];
            std::vector<char> nb(g.vertex_count(), false);
            for (int v : ctxs_[i].component)
                for (int u : g.neighbors(v))
                    if (in_y[u]) nb[u] = true;
            for (int b : ged.Y)
                if (nb[b]) ctxs_[i].boundary.push_back(b);
        }
    }

    SubsetOutcome evaluate(const std::vector<int>& S_hat, bool build_solution) {
        for (int v : S_hat)
            if (!contains(ged_.Y, v))
                throw PreconditionError("subset vertex outside the Tutte set");

        const int ncomp = static_cast<int>(ctxs_.size());
        SubsetOutcome out;
        out.S_hat = S_hat;

        std::vector<const KappaResult*> costs(ncomp);
        std::vector<char> in_T(ncomp, false);
        std::vector<Rat> weight(ncomp);
        Rat finite_total(0);
        for (int i = 0; i < ncomp; ++i) {
            std::vector<int> out_b;
            std::vector<int> in_b;
            for (int b : ctxs_[i].boundary)
                (contains(S_hat, b) ? in_b : out_b).push_back(b);
            costs[i] = &cached_kappa(i, in_b, out_b);
            in_T[i] = ctxs_[i].component.size() == 1 && out_b.empty();
            if (in_T[i]) {
                weight[i] = Rat(1, 2);
                finite_total += weight[i];
            } else if (!costs[i]->must_be_matched) {
                weight[i] = costs[i]->value;
                finite_total += weight[i];
            }
        }
        Rat sentinel = finite_total + Rat(1) + Rat(static_cast<long long>(ged_.Y.size()));

        WeightedBipartite bip;
        bip.left = ged_.Y;
        for (int i = 0; i < ncomp; ++i) bip.right.push_back(i);
        for (int i = 0; i < ncomp; ++i) {
            Rat w = (!in_T[i] && costs[i]->must_be_matched) ? sentinel : weight[i];
            for (int b : ctxs_[i].boundary) bip.edges.push_back({b, i, w});
        }
        auto matching = build_solution ? max_weight_covering_matching(bip)
                                       : max_weight_covering_matching_any(bip);
        if (!matching) throw InternalError("Tutte set cannot be covered");

        std::vector<int> matched_to(ncomp, -1);
        for (const auto& [b, i] : matching->pairs) matched_to[i] = b;
        for (int i = 0; i < ncomp; ++i)
            if (!in_T[i] && costs[i]->must_be_matched && matched_to[i] < 0) {
                out.feasible = false;
                return out;
            }

        out.feasible = true;
        Rat f = Rat(static_cast<long long>(S_hat.size()), 2);
        for (int i = 0; i < ncomp; ++i) {
            if (matched_to[i] >= 0) {
                if (in_T[i]) f -= Rat(1, 2);
            } else if (!in_T[i]) {
                f += costs[i]->value;
            }
        }
        out.f_value = f;

        if (build_solution) out.solution = assemble(S_hat, costs, in_T, matched_to);
        return out;
    }

private:
    const KappaResult& cached_kappa(int comp, const std::vector<int>& in_b,
                                    const std::vector<int>& out_b) {
        auto key = std::make_pair(comp, out_b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        KappaResult res = kappa(g_, ctxs_[comp], in_b, out_b);
        return cache_.emplace(std::move(key), std::move(res)).first->second;
    }

    StabilizerSolution assemble(const std::vector<int>& S_hat,
                                const std::vector<const KappaResult*>& costs,
                                const std::vector<char>& in_T,
                                const std::vector<int>& matched_to) {
        const int ncomp = static_cast<int>(ctxs_.size());
        std::vector<HalfInt> y(g_.vertex_count(), HalfInt::zero());
        for (int b : ged_.Y) y[b] = contains(S_hat, b) ? HalfInt::one() : HalfInt::half();

        std::vector<Edge> medges;
        for (int i = 0; i < ncomp; ++i) {
            const auto& comp = ctxs_[i].component;
            if (matched_to[i] >= 0) {
                int b = matched_to[i];
                int u = -1;
                for (int v : comp)
                    if (g_.has_edge(v, b)) { u = v; break; }
                if (u < 0) throw InternalError("matched component lost its edge");
                medges.push_back(make_edge(u, b));
                if (in_T[i]) {
                    y[comp[0]] = HalfInt::zero();
                } else {
                    for (int v : comp) y[v] = HalfInt::half();
                    if (comp.size() > 1) {
                        std::vector<int> new_to_old;
                        Graph sub = induced_subgraph(g_, comp, &new_to_old);
                        int u_local = static_cast<int>(
                            std::lower_bound(new_to_old.begin(), new_to_old.end(), u) -
                            new_to_old.begin());
                        auto sub_matching = matching_exposing(sub, u_local);
                        if (!sub_matching) throw InternalError("component is not factor-critical");
                        for (const Edge& e : sub_matching->edges())
                            medges.push_back(make_edge(new_to_old[e.u], new_to_old[e.v]));
                    }
                }
            } else if (in_T[i]) {
                y[comp[0]] = HalfInt::zero();
            } else {
                for (const auto& [v, val] : costs[i]->y) y[v] = val;
                for (const Edge& e : costs[i]->internal_matching.edges()) medges.push_back(e);
            }
        }

        Matching m(std::move(medges));
        std::vector<std::pair<Edge, HalfInt>> c;
        for (const Edge& e : m.edges()) {
            HalfInt val = y[e.u] + y[e.v] - HalfInt::one();
            if (val != HalfInt::zero()) c.push_back({e, val});
        }
        return make_solution(g_, std::move(m), std::move(y), std::move(c));
    }

    const Graph& g_;
    const GEDecomposition& ged_;
    std::vector<ComponentContext> ctxs_;
    std::map<std::pair<int, std::vector<int>>, KappaResult> cache_;
};

// Subsets of the Tutte set ordered by popcount, then lexicographically as
// sorted vertex sequences.
std::vector<unsigned> subset_masks_in_order(int bits) {
    std::vector<unsigned> masks(1u << bits);
    for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        while (a && b) {
            int la = __builtin_ctz(a), lb = __builtin_ctz(b);
            if (la != lb) return la < lb;
            a &= a - 1;
            b &= b - 1;
        }
        return false;
    });
    return masks;
}

std::vector<int> mask_to_subset(unsigned mask, const std::vector<int>& y) {
    std::vector<int> out;
    for (size_t i = 0; i < y.size(); ++i)
        if (mask >> i & 1) out.push_back(y[i]);
    return out;
}

}  // namespace

SubsetOutcome mfasp_for_subset(const Graph& g, const GEDecomposition& ged,
                               const std::vector<int>& S_hat) {
    SubsetSolver solver(g, ged);
    std::vector<int> s = S_hat;
    std::sort(s.begin(), s.end());
    SubsetOutcome out = solver.evaluate(s, true);
    if (out.feasible && out.solution->cost.to_rat() != out.f_value)
        throw InternalError("assembled cost differs from the subset cost formula");
    return out;
}

StabilizerSolution solve_exact(const Graph& g) {
    if (is_stable(g)) return stable_zero_solution(g);

    ZReduction zr = reduce_by_Z(g);
    GEDecomposition cged = decompose(zr.core);
    SubsetSolver solver(zr.core, cged);

    const int ybits = static_cast<int>(cged.Y.size());
    if (ybits > 25) throw BoundError("Tutte set too large for subset enumeration");
    bool have = false;
    Rat best_f;
    unsigned best_mask = 0;
    for (unsigned mask : subset_masks_in_order(ybits)) {
        SubsetOutcome out = solver.evaluate(mask_to_subset(mask, cged.Y), false);
        if (!out.feasible) continue;
        if (!have || out.f_value < best_f) {
            have = true;
            best_f = out.f_value;
            best_mask = mask;
        }
    }
    if (!have) throw InternalError("no feasible Tutte subset on an unstable graph");

    SubsetOutcome winner = solver.evaluate(mask_to_subset(best_mask, cged.Y), true);
    if (!winner.feasible || winner.f_value != best_f)
        throw InternalError("winning subset changed value on reconstruction");
    return extend_over_Z(g, zr, *winner.solution);
}

TutteAllResult solve_tutte_all(const Graph& g) {
    ZReduction zr = reduce_by_Z(g);
    GEDecomposition cged = decompose(zr.core);
    SubsetSolver solver(zr.core, cged);
    SubsetOutcome out = solver.evaluate(cged.Y, true);
    if (!out.feasible) throw InternalError("full Tutte subset must be feasible");

    TutteAllResult res;
    res.solution = extend_over_Z(g, zr, *out.solution);
    for (bool trivial : cged.trivial_flags)
        if (!trivial) ++res.nontrivial_components;
    res.tutte_size = static_cast<long long>(cged.Y.size());
    if (res.tutte_size == 0) {
        res.k = 1;
    } else if (res.nontrivial_components > res.tutte_size) {
        long long gap = res.nontrivial_components - res.tutte_size;
        res.k = static_cast<int>((res.tutte_size + gap - 1) / gap);
    } else {
        res.k = 0;
    }
    return res;
}

}  // namespace stabilkit
