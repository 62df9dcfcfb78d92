#include "stabilkit/generators.hpp"

#include <algorithm>
#include <json.hpp>
#include <random>

#include "stabilkit/fc.hpp"

namespace stabilkit {

std::vector<int> MkecInstance::tutte_vertices() const {
    std::vector<int> out;
    for (const auto& row : y_copies) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

int MkecInstance::triangle_count() const {
    return static_cast<int>(triangle_of_edge.size() + padding_triangles.size() +
                            cprime_triangles.size());
}

MkecInstance gen_mkec(const Graph& base, int k, int q) {
    const int bn = base.vertex_count();
    const int bm = base.edge_count();
    if (k <= 0) throw PreconditionError("gen_mkec: k must be positive");
    if (k >= bm) throw PreconditionError("gen_mkec: k must be smaller than the edge count");
    int maxdeg = 0;
    for (int v = 0; v < bn; ++v)
        maxdeg = std::max(maxdeg, static_cast<int>(base.neighbors(v).size()));
    if (q == 0) q = std::max(k, maxdeg);
    if (q < maxdeg) throw PreconditionError("gen_mkec: q below the maximum base degree");

    MkecInstance inst;
    inst.base = base;
    inst.k = k;
    inst.q = q;

    // Pad so #triangles attached to the first copy row equals |Y'| + k:
    // extra columns when there are too many edge triangles, extra
    // fully-connected triangles when there are too few.
    int extra_cols = std::max(0, bm - (bn + k));
    int padding = std::max(0, bn + k - bm);
    inst.y_width = bn + extra_cols;
    for (int col = bn; col < inst.y_width; ++col) inst.extra_y_cols.push_back(col);

    const int W = inst.y_width;
    inst.y_copies.assign(q, std::vector<int>(W));
    for (int row = 0; row < q; ++row)
        for (int col = 0; col < W; ++col) inst.y_copies[row][col] = row * W + col;

    int next = q * W;
    auto new_triangle = [&]() {
        std::array<int, 3> t{next, next + 1, next + 2};
        next += 3;
        return t;
    };
    for (const Edge& e : base.edges()) inst.triangle_of_edge[e] = new_triangle();
    for (int i = 0; i < padding; ++i) inst.padding_triangles.push_back(new_triangle());
    for (int i = 0; i < W * (q - 1); ++i) inst.cprime_triangles.push_back(new_triangle());

    std::vector<Edge> edges;
    auto add_triangle_edges = [&](const std::array<int, 3>& t) {
        edges.push_back(make_edge(t[0], t[1]));
        edges.push_back(make_edge(t[0], t[2]));
        edges.push_back(make_edge(t[1], t[2]));
    };
    auto connect_to_all_y = [&](const std::array<int, 3>& t) {
        for (int tv : t)
            for (int row = 0; row < q; ++row)
                for (int col = 0; col < W; ++col)
                    edges.push_back(make_edge(tv, inst.y_copies[row][col]));
    };

    for (const auto& [e, t] : inst.triangle_of_edge) {
        add_triangle_edges(t);
        for (int tv : t) {
            for (int row = 0; row < q; ++row) {
                edges.push_back(make_edge(tv, inst.y_copies[row][e.u]));
                edges.push_back(make_edge(tv, inst.y_copies[row][e.v]));
            }
            // Extra Tutte columns attach to every triangle vertex.
            for (int col : inst.extra_y_cols)
                for (int row = 0; row < q; ++row)
                    edges.push_back(make_edge(tv, inst.y_copies[row][col]));
        }
    }
    for (const auto& t : inst.padding_triangles) {
        add_triangle_edges(t);
        connect_to_all_y(t);
    }
    for (const auto& t : inst.cprime_triangles) {
        add_triangle_edges(t);
        connect_to_all_y(t);
    }

    inst.graph = Graph(next, std::move(edges));
    return inst;
}

std::string mkec_metadata_json(const MkecInstance& inst) {
    nlohmann::ordered_json j;
    j["kind"] = "mkec";
    j["base_n"] = inst.base.vertex_count();
    auto& be = j["base_edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : inst.base.edges()) be.push_back({e.u, e.v});
    j["k"] = inst.k;
    j["q"] = inst.q;
    j["y_width"] = inst.y_width;
    j["extra_y_cols"] = inst.extra_y_cols;
    j["y_copies"] = inst.y_copies;
    auto& tri = j["edge_triangles"] = nlohmann::ordered_json::array();
    for (const auto& [e, t] : inst.triangle_of_edge)
        tri.push_back({{"edge", {e.u, e.v}}, {"vertices", t}});
    j["padding_triangles"] = inst.padding_triangles;
    j["cprime_triangles"] = inst.cprime_triangles;
    return j.dump() + "\n";
}

std::vector<int> SetCoverInstance::tutte_vertices() const {
    std::vector<int> out;
    for (const auto& row : y_vertex) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

SetCoverInstance gen_setcover(const std::vector<std::vector<int>>& sets, int n_elems, int N) {
    const int m = static_cast<int>(sets.size());
    if (m == 0 || n_elems <= 0) throw PreconditionError("gen_setcover: empty instance");
    if (N < 1) throw PreconditionError("gen_setcover: N must be at least 1");
    std::vector<std::vector<int>> containing(n_elems + 1);  // element -> sorted set indices (1-based)
    for (int j = 0; j < m; ++j)
        for (int x : sets[j]) {
            if (x < 1 || x > n_elems)
                throw PreconditionError("gen_setcover: element label out of range");
            containing[x].push_back(j + 1);
        }
    for (int x = 1; x <= n_elems; ++x) {
        std::sort(containing[x].begin(), containing[x].end());
        containing[x].erase(std::unique(containing[x].begin(), containing[x].end()),
                            containing[x].end());
        if (containing[x].size() < 2)
            throw PreconditionError("gen_setcover: element " + std::to_string(x) +
                                    " appears in fewer than two sets");
    }

    SetCoverInstance inst;
    inst.sets = sets;
    inst.n_elems = n_elems;
    inst.N = N;
    long long nm = static_cast<long long>(n_elems) * m;
    inst.below_theoretical_bound = N <= nm * nm;

    inst.y_vertex.assign(m, std::vector<int>(n_elems));
    int next = 0;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n_elems; ++i) inst.y_vertex[j][i] = next++;

    std::vector<Edge> edges;
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n_elems; ++i) {
            SetCoverInstance::CliqueInfo clique;
            clique.set_index = j;
            clique.copy_index = i;
            for (int t = 0; t < 2 * N + 1; ++t) clique.vertices.push_back(next++);
            clique.c_vertex = clique.vertices[0];
            for (size_t a = 0; a < clique.vertices.size(); ++a)
                for (size_t b = a + 1; b < clique.vertices.size(); ++b)
                    edges.push_back(make_edge(clique.vertices[a], clique.vertices[b]));
            edges.push_back(make_edge(inst.y_vertex[j - 1][i - 1], clique.c_vertex));
            inst.cliques.push_back(std::move(clique));
        }

    for (int i = 1; i <= n_elems; ++i) {
        SetCoverInstance::CycleInfo cycle;
        cycle.elem_index = i;
        int freq = static_cast<int>(containing[i].size());
        cycle.has_dummy = freq % 2 == 0;
        int len = cycle.has_dummy ? freq + 1 : freq;
        for (int t = 0; t < len; ++t) cycle.vertices.push_back(next++);
        for (int t = 0; t < len; ++t)
            edges.push_back(make_edge(cycle.vertices[t], cycle.vertices[(t + 1) % len]));
        for (int pos = 0; pos < freq; ++pos) {
            int j = containing[i][pos];
            for (int copy = 1; copy <= n_elems; ++copy)
                edges.push_back(make_edge(cycle.vertices[pos], inst.y_vertex[j - 1][copy - 1]));
        }
        if (cycle.has_dummy)
            for (int j = 0; j < m; ++j)
                for (int copy = 0; copy < n_elems; ++copy)
                    edges.push_back(make_edge(cycle.vertices[len - 1], inst.y_vertex[j][copy]));
        inst.cycles.push_back(std::move(cycle));
    }

    inst.graph = Graph(next, std::move(edges));
    return inst;
}

std::string setcover_metadata_json(const SetCoverInstance& inst) {
    nlohmann::ordered_json j;
    j["kind"] = "setcover";
    j["n_elems"] = inst.n_elems;
    j["sets"] = inst.sets;
    j["N"] = inst.N;
    j["below_theoretical_bound"] = inst.below_theoretical_bound;
    j["y_vertex"] = inst.y_vertex;
    auto& cl = j["cliques"] = nlohmann::ordered_json::array();
    for (const auto& c : inst.cliques)
        cl.push_back({{"set", c.set_index},
                      {"copy", c.copy_index},
                      {"c_vertex", c.c_vertex},
                      {"vertices", c.vertices}});
    auto& cy = j["cycles"] = nlohmann::ordered_json::array();
    for (const auto& c : inst.cycles)
        cy.push_back({{"element", c.elem_index}, {"dummy", c.has_dummy}, {"vertices", c.vertices}});
    return j.dump() + "\n";
}

Graph gen_factor_critical(const std::vector<int>& ear_lengths, std::uint64_t seed) {
    if (ear_lengths.empty()) throw PreconditionError("gen_factor_critical: no ears");
    for (int len : ear_lengths) {
        if (len < 1 || len % 2 == 0)
            throw PreconditionError("gen_factor_critical: ear lengths must be odd and positive");
    }
    if (ear_lengths[0] < 3)
        throw PreconditionError("gen_factor_critical: first ear must be a cycle of length >= 3");

    std::mt19937_64 rng(seed);
    int count = 1;
    std::vector<Edge> edges;
    auto adjacent = [&](int a, int b) {
        Edge e = make_edge(a, b);
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    };
    for (size_t idx = 0; idx < ear_lengths.size(); ++idx) {
        int len = ear_lengths[idx];
        int u, v;
        if (idx == 0) {
            u = v = 0;
        } else if (len == 1) {
            bool found = false;
            for (int tries = 0; tries < 1000 && !found; ++tries) {
                u = static_cast<int>(rng() % count);
                v = static_cast<int>(rng() % count);
                if (u != v && !adjacent(u, v)) found = true;
            }
            if (!found)
                throw PreconditionError("gen_factor_critical: no room for a length-1 ear");
        } else {
            u = static_cast<int>(rng() % count);
            v = static_cast<int>(rng() % count);
        }
        int prev = u;
        for (int step = 0; step < len - 1; ++step) {
            int fresh = count++;
            edges.push_back(make_edge(prev, fresh));
            prev = fresh;
        }
        edges.push_back(make_edge(prev, v));
    }
    Graph g(count, std::move(edges));
    if (!is_factor_critical(g))
        throw InternalError("ear construction produced a non-factor-critical graph");
    return g;
}

Graph gen_random(int n, long long p_num, long long p_den, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("gen_random: n must be at least 1");
    if (p_den < 1 || p_num < 0 || p_num > p_den)
        throw PreconditionError("gen_random: probability must be num/den with 0 <= num <= den");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t draw = rng() % static_cast<std::uint64_t>(p_den);
            if (draw < static_cast<std::uint64_t>(p_num)) edges.push_back(Edge{u, v});
        }
    return Graph(n, std::move(edges));
}

std::string simple_metadata_json(const std::string& kind, const std::vector<long long>& params,
                                 std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["params"] = params;
    j["seed"] = seed;
    return j.dump() + "\n";
}

}  // namespace stabilkit
