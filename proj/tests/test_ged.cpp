#include <doctest.h>

#include "stabilkit/fc.hpp"
#include "stabilkit/ged.hpp"
#include "stabilkit/generators.hpp"
#include "stabilkit/lp.hpp"
#include "stabilkit/oracle.hpp"
#include "support/graphgen.hpp"

using namespace stabilkit;

namespace {

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
    return Graph(n, std::move(edges));
}

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

// T1 = {0,1,2}, T2 = {3,4,5}, vertex 6 adjacent to 0 and 3, then 6-7, 7-8.
Graph two_triangles_with_tail() {
    return Graph(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                     {0, 6}, {3, 6}, {6, 7}, {7, 8}});
}

Graph two_triangles_bridge() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}});
}

}  // namespace

TEST_CASE("inessential vertices on named instances") {
    CHECK(inessential_vertices(triangle()) == std::vector<int>{0, 1, 2});
    CHECK(inessential_vertices(path(3)) == std::vector<int>{0, 2});
    CHECK(inessential_vertices(path(4)).empty());
}

TEST_CASE("decompose on named instances") {
    GEDecomposition p5 = decompose(path(5));
    CHECK(p5.X == std::vector<int>{0, 2, 4});
    CHECK(p5.Y == std::vector<int>{1, 3});
    CHECK(p5.Z.empty());
    CHECK(p5.components.size() == 3);
    CHECK(p5.trivial_flags == std::vector<bool>{true, true, true});

    GEDecomposition p4 = decompose(path(4));
    CHECK(p4.X.empty());
    CHECK(p4.Y.empty());
    CHECK(p4.Z == std::vector<int>{0, 1, 2, 3});

    GEDecomposition tt = decompose(two_triangles_with_tail());
    CHECK(tt.X == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(tt.Y == std::vector<int>{6});
    CHECK(tt.Z == std::vector<int>{7, 8});
    REQUIRE(tt.components.size() == 2);
    CHECK(tt.components[0] == std::vector<int>{0, 1, 2});
    CHECK(tt.components[1] == std::vector<int>{3, 4, 5});
}

TEST_CASE("is_stable on named instances") {
    CHECK(is_stable(path(3)));
    CHECK(!is_stable(triangle()));
    CHECK(is_stable(two_triangles_bridge()));
    CHECK(is_stable(Graph(0, {})));
    CHECK(is_stable(Graph(4, {})));
}

TEST_CASE("GED properties hold for every maximum matching on small graphs") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : testsupport::all_graphs(n)) {
            GEDecomposition d = decompose(g);
            std::vector<int> comp_of(n, -1);
            for (size_t i = 0; i < d.components.size(); ++i)
                for (int v : d.components[i]) comp_of[v] = static_cast<int>(i);
            std::vector<char> in_z(n, false), in_y(n, false);
            for (int v : d.Z) in_z[v] = true;
            for (int v : d.Y) in_y[v] = true;

            for (const Matching& m : enumerate_maximum_matchings(g)) {
                std::vector<int> mate = m.mate_vector(n);
                // (i) a perfect matching inside Z.
                for (int v : d.Z) {
                    CHECK(mate[v] != -1);
                    CHECK(in_z[mate[v]]);
                }
                // (iii) at most one exposed vertex per component of G[X].
                std::vector<int> exposed_in(d.components.size(), 0);
                for (int v = 0; v < n; ++v)
                    if (mate[v] == -1) {
                        REQUIRE(comp_of[v] >= 0);  // only X vertices are exposed
                        ++exposed_in[comp_of[v]];
                    }
                for (int count : exposed_in) CHECK(count <= 1);
                // (iv) Y matched into distinct components of G[X].
                std::vector<char> used(d.components.size(), false);
                for (int v : d.Y) {
                    REQUIRE(mate[v] != -1);
                    int c = comp_of[mate[v]];
                    REQUIRE(c >= 0);
                    CHECK(!used[c]);
                    used[c] = true;
                }
            }
            // (ii) every component of G[X] is factor-critical.
            for (const auto& comp : d.components) {
                std::vector<int> new_to_old;
                Graph sub = induced_subgraph(g, comp, &new_to_old);
                CHECK(is_factor_critical(sub));
            }
        }
    }
}

TEST_CASE("GED properties hold on seeded random graphs up to n = 9") {
    for (int seed = 1; seed <= 30; ++seed) {
        Graph g = gen_random(7 + seed % 3, 2, 5, 500 + seed);
        GEDecomposition d = decompose(g);
        const int n = g.vertex_count();
        std::vector<int> comp_of(n, -1);
        for (size_t i = 0; i < d.components.size(); ++i)
            for (int v : d.components[i]) comp_of[v] = static_cast<int>(i);
        std::vector<char> in_z(n, false);
        for (int v : d.Z) in_z[v] = true;
        for (const Matching& m : enumerate_maximum_matchings(g)) {
            std::vector<int> mate = m.mate_vector(n);
            for (int v : d.Z) {
                CHECK(mate[v] != -1);
                CHECK(in_z[mate[v]]);
            }
            std::vector<int> exposed_in(d.components.size(), 0);
            for (int v = 0; v < n; ++v)
                if (mate[v] == -1) {
                    REQUIRE(comp_of[v] >= 0);
                    ++exposed_in[comp_of[v]];
                }
            for (int count : exposed_in) CHECK(count <= 1);
            std::vector<char> used(d.components.size(), false);
            for (int v : d.Y) {
                REQUIRE(mate[v] != -1);
                int c = comp_of[mate[v]];
                REQUIRE(c >= 0);
                CHECK(!used[c]);
                used[c] = true;
            }
        }
    }
}

TEST_CASE("stability equals nu == tau_f on seeded random graphs up to n = 12") {
    for (int seed = 1; seed <= 60; ++seed) {
        Graph g = gen_random(4 + seed % 9, 1, 2, seed);
        bool stable = is_stable(g);
        CHECK(stable == (tau_f(g, {}) == Rat(matching_number(g))));
    }
}
