#include "stabilkit/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

namespace stabilkit {

namespace {

// Edmonds blossom augmentation on the vertices with alive[v] set.
// Classic base[]/contract formulation; deterministic because roots and
// adjacency lists are scanned in index order.
class BlossomMatcher {
public:
    BlossomMatcher(const Graph& g, const std::vector<char>& alive)
        : g_(g), alive_(alive), n_(g.vertex_count()), mate_(n_, -1) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v) {
            if (!alive_[v] || mate_[v] != -1) continue;
            int leaf = find_path(v);
            while (leaf != -1) {
                int prev = parent_[leaf];
                int next = mate_[prev];
                mate_[leaf] = prev;
                mate_[prev] = leaf;
                leaf = next;
            }
        }
        return mate_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_path(int root) {
        visited_.assign(n_, false);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        visited_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (!alive_[to]) continue;
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    in_blossom_.assign(n_, false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur_base;
                        if (!visited_[i]) {
                            visited_[i] = true;
                            q.push(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    visited_[mate_[to]] = true;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    const std::vector<char>& alive_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> visited_, in_blossom_;
};

Matching mate_to_matching(const std::vector<int>& mate) {
    std::vector<Edge> edges;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) edges.push_back(Edge{v, mate[v]});
    return Matching(std::move(edges));
}

}  // namespace

Matching max_cardinality_matching(const Graph& g) {
    std::vector<char> alive(g.vertex_count(), 1);
    return mate_to_matching(BlossomMatcher(g, alive).run());
}

int matching_number(const Graph& g) { return max_cardinality_matching(g).size(); }

std::optional<Matching> matching_exposing(const Graph& g, int w) {
    if (w < 0 || w >= g.vertex_count())
        throw PreconditionError("matching_exposing: vertex out of range");
    int nu = matching_number(g);
    std::vector<char> alive(g.vertex_count(), 1);
    alive[w] = 0;
    Matching m = mate_to_matching(BlossomMatcher(g, alive).run());
    if (m.size() == nu) return m;
    return std::nullopt;
}

std::pair<std::vector<int>, long long> min_cost_assignment(
    const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) return {{}, 0};
    const long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = 0;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_of_col(n);
    long long total = 0;
    for (int j = 1; j <= n; ++j) {
        row_of_col[j - 1] = p[j] - 1;
        total += cost[p[j] - 1][j - 1];
    }
    return {row_of_col, total};
}

namespace {

// Scaled instance of the covering-matching problem: shifted integer
// weights so that any maximum-weight matching has maximum cardinality.
struct ScaledBipartite {
    int nl = 0, nr = 0;
    std::vector<int> lpos, rpos;                   // label -> index maps via sorted lists
    std::vector<std::vector<long long>> weight;    // nl x nr, -1 for non-edges
    long long shift = 0;                           // added to every real edge
};

int index_of(const std::vector<int>& sorted_labels, int label) {
    auto it = std::lower_bound(sorted_labels.begin(), sorted_labels.end(), label);
    if (it == sorted_labels.end() || *it != label) return -1;
    return static_cast<int>(it - sorted_labels.begin());
}

ScaledBipartite scale(const WeightedBipartite& b) {
    ScaledBipartite s;
    s.lpos = b.left;
    s.rpos = b.right;
    std::sort(s.lpos.begin(), s.lpos.end());
    std::sort(s.rpos.begin(), s.rpos.end());
    if (std::adjacent_find(s.lpos.begin(), s.lpos.end()) != s.lpos.end() ||
        std::adjacent_find(s.rpos.begin(), s.rpos.end()) != s.rpos.end())
        throw PreconditionError("duplicate label in bipartite side");
    s.nl = static_cast<int>(s.lpos.size());
    s.nr = static_cast<int>(s.rpos.size());

    long long den_lcm = 1;
    for (const auto& e : b.edges) {
        if (e.w < Rat(0)) throw PreconditionError("negative bipartite edge weight");
        den_lcm = std::lcm(den_lcm, e.w.den());
        if (den_lcm > (1LL << 40)) throw InternalError("bipartite weight denominators too large");
    }
    s.weight.assign(s.nl, std::vector<long long>(s.nr, -1));
    long long total = 0;
    for (const auto& e : b.edges) {
        int li = index_of(s.lpos, e.l), ri = index_of(s.rpos, e.r);
        if (li < 0 || ri < 0) throw PreconditionError("bipartite edge endpoint not in side list");
        if (s.weight[li][ri] >= 0) throw PreconditionError("duplicate bipartite edge");
        long long w = e.w.num() * (den_lcm / e.w.den());
        s.weight[li][ri] = w;
        total += w;
    }
    s.shift = total + den_lcm;  // strictly exceeds the sum of all weights
    return s;
}

// Max total shifted weight over matchings avoiding banned cells, with rows
// in `skip_row` / columns in `skip_col` removed. Returns the best value.
long long best_value(const ScaledBipartite& s, const std::vector<char>& skip_row,
                     const std::vector<char>& skip_col,
                     std::vector<std::pair<int, int>>* chosen) {
    std::vector<int> rows, cols;
    for (int i = 0; i < s.nl; ++i)
        if (!skip_row[i]) rows.push_back(i);
    for (int j = 0; j < s.nr; ++j)
        if (!skip_col[j]) cols.push_back(j);
    int nn = static_cast<int>(std::max(rows.size(), cols.size()));
    if (nn == 0) return 0;
    std::vector<std::vector<long long>> cost(nn, std::vector<long long>(nn, 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            long long w = s.weight[rows[i]][cols[j]];
            if (w >= 0) cost[i][j] = -(w + s.shift);
        }
    auto [row_of_col, total] = min_cost_assignment(cost);
    if (chosen) {
        chosen->clear();
        for (int j = 0; j < nn; ++j) {
            int i = row_of_col[j];
            if (i < static_cast<int>(rows.size()) && j < static_cast<int>(cols.size()) &&
                s.weight[rows[i]][cols[j]] >= 0)
                chosen->push_back({rows[i], cols[j]});
        }
    }
    return -total;
}

std::optional<BipartiteMatching> covering_matching(const WeightedBipartite& b,
                                                   bool lexicographic) {
    ScaledBipartite s = scale(b);
    if (s.nl == 0) {
        BipartiteMatching out;
        out.weight = Rat(0);
        return out;
    }
    if (s.nl > s.nr) return std::nullopt;

    std::vector<char> skip_row(s.nl, 0), skip_col(s.nr, 0);
    std::vector<std::pair<int, int>> chosen;
    long long opt = best_value(s, skip_row, skip_col, &chosen);
    // Covering iff every left vertex is matched through a real edge; the
    // shift makes cardinality dominate, so this is detectable by count.
    if (static_cast<int>(chosen.size()) < s.nl) return std::nullopt;

    std::vector<std::pair<int, int>> picked;
    if (!lexicographic) {
        picked = chosen;
    } else {
        // Left indices ascend by label already; choose for each the least
        // right label that still completes to an optimum.
        long long committed = 0;
        for (int li = 0; li < s.nl; ++li) {
            bool done = false;
            for (int rj = 0; rj < s.nr && !done; ++rj) {
                if (skip_col[rj] || s.weight[li][rj] < 0) continue;
                skip_row[li] = 1;
                skip_col[rj] = 1;
                long long with = committed + s.weight[li][rj] + s.shift +
                                 best_value(s, skip_row, skip_col, nullptr);
                if (with == opt) {
                    committed += s.weight[li][rj] + s.shift;
                    picked.push_back({li, rj});
                    done = true;
                } else {
                    skip_col[rj] = 0;
                    skip_row[li] = 0;
                }
            }
            if (!done) throw InternalError("covering matching tie-break failed to extend");
        }
    }

    BipartiteMatching out;
    Rat total(0);
    std::map<std::pair<int, int>, Rat> wmap;
    for (const auto& e : b.edges) wmap[{e.l, e.r}] = e.w;
    for (const auto& [li, rj] : picked) {
        out.pairs.push_back({s.lpos[li], s.rpos[rj]});
        total += wmap[{s.lpos[li], s.rpos[rj]}];
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.weight = total;
    return out;
}

}  // namespace

bool BipartiteMatching::matches_right(int r) const {
    for (const auto& [l, rr] : pairs)
        if (rr == r) return true;
    return false;
}

std::optional<BipartiteMatching> max_weight_covering_matching(const WeightedBipartite& b) {
    return covering_matching(b, true);
}

std::optional<BipartiteMatching> max_weight_covering_matching_any(const WeightedBipartite& b) {
    return covering_matching(b, false);
}

}  // namespace stabilkit
