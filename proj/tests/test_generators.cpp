#include <doctest.h>

#include "stabilkit/fc.hpp"
#include "stabilkit/ged.hpp"
#include "stabilkit/generators.hpp"
#include "stabilkit/matching.hpp"

using namespace stabilkit;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("mkec instance counts for the path base") {
    MkecInstance inst = gen_mkec(path3(), 1, 2);
    CHECK(inst.q == 2);
    CHECK(inst.y_width == 3);
    CHECK(inst.extra_y_cols.empty());
    CHECK(inst.tutte_vertices().size() == 6);
    CHECK(inst.triangle_of_edge.size() == 2);
    CHECK(inst.padding_triangles.size() == 2);   // up to |Y'| + k = 4 attached triangles
    CHECK(inst.cprime_triangles.size() == 3);    // |Y'| * (q-1)
    CHECK(inst.triangle_count() == 7);
    CHECK(inst.graph.vertex_count() == 27);
}

TEST_CASE("mkec instance counts for the triangle base") {
    MkecInstance inst = gen_mkec(triangle(), 1, 2);
    CHECK(inst.tutte_vertices().size() == 6);
    CHECK(inst.triangle_of_edge.size() + inst.padding_triangles.size() == 4);
    CHECK(inst.cprime_triangles.size() == 3);
    CHECK(inst.graph.vertex_count() == 27);
}

TEST_CASE("mkec preconditions") {
    Graph single_edge(2, {{0, 1}});
    CHECK_THROWS_AS(gen_mkec(single_edge, 1, 2), PreconditionError);  // k = |E|
    CHECK_THROWS_AS(gen_mkec(path3(), 2, 2), PreconditionError);      // k = |E|
    CHECK_THROWS_AS(gen_mkec(path3(), 1, 1), PreconditionError);      // q below max degree
    CHECK_THROWS_AS(gen_mkec(path3(), 0, 2), PreconditionError);
}

TEST_CASE("mkec q auto-raises to max(k, maxdeg)") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    MkecInstance inst = gen_mkec(k4, 1, 0);
    CHECK(inst.q == 3);
    // More edge triangles than |V| + k: columns get added instead.
    CHECK(inst.y_width == 5);
    CHECK(inst.extra_y_cols == std::vector<int>{4});
    CHECK(inst.padding_triangles.empty());
    CHECK(inst.triangle_of_edge.size() == 6);  // |Y'| + k = 6
}

TEST_CASE("mkec decomposition matches the construction") {
    MkecInstance inst = gen_mkec(path3(), 1, 2);
    GEDecomposition d = decompose(inst.graph);
    CHECK(d.Y == inst.tutte_vertices());
    CHECK(d.Z.empty());
    CHECK(d.components.size() == 7);
    CHECK(matching_number(inst.graph) == 2 * 6 + 1);
}

TEST_CASE("mkec: any pair of triangles can be exposed together") {
    // K3 base with k = 2: deleting one vertex from any two triangles must
    // not reduce the matching number, i.e. some maximum matching exposes
    // exactly those two triangles.
    MkecInstance inst = gen_mkec(triangle(), 2, 2);
    std::vector<std::array<int, 3>> triangles;
    for (const auto& [e, t] : inst.triangle_of_edge) triangles.push_back(t);
    for (const auto& t : inst.padding_triangles) triangles.push_back(t);
    for (const auto& t : inst.cprime_triangles) triangles.push_back(t);
    const int nu = matching_number(inst.graph);
    CHECK(inst.graph.vertex_count() - 2 * nu == 2);
    for (size_t a = 0; a < triangles.size(); ++a)
        for (size_t b = a + 1; b < triangles.size(); ++b) {
            std::vector<int> keep;
            for (int v = 0; v < inst.graph.vertex_count(); ++v)
                if (v != triangles[a][0] && v != triangles[b][0]) keep.push_back(v);
            Graph rest = induced_subgraph(inst.graph, keep, nullptr);
            CHECK(matching_number(rest) == nu);
        }
}

TEST_CASE("setcover instance shape for the worked example") {
    // S1 = {x1,x2}, S2 = {x2,x3}, S3 = {x1,x2,x3}, N = 3.
    SetCoverInstance inst = gen_setcover({{1, 2}, {2, 3}, {1, 2, 3}}, 3, 3);
    CHECK(inst.cliques.size() == 9);
    for (const auto& c : inst.cliques) CHECK(c.vertices.size() == 7);  // 2N+1
    REQUIRE(inst.cycles.size() == 3);
    CHECK(inst.cycles[0].has_dummy);   // F_1 = 2
    CHECK(!inst.cycles[1].has_dummy);  // F_2 = 3
    CHECK(inst.cycles[2].has_dummy);   // F_3 = 2
    for (const auto& c : inst.cycles) CHECK(c.vertices.size() == 3);
    CHECK(inst.below_theoretical_bound);
    CHECK(inst.graph.vertex_count() == 9 + 9 * 7 + 9);
}

TEST_CASE("setcover Tutte set is exactly the set-copy vertices") {
    SetCoverInstance inst = gen_setcover({{1, 2}, {1, 2}}, 2, 3);
    CHECK(inst.cliques.size() == 4);
    for (const auto& c : inst.cycles) {
        CHECK(c.has_dummy);  // both elements have frequency 2
        CHECK(c.vertices.size() == 3);
    }
    GEDecomposition d = decompose(inst.graph);
    CHECK(d.Y == inst.tutte_vertices());
    CHECK(d.Z.empty());
}

TEST_CASE("setcover rejects frequency-one elements") {
    CHECK_THROWS_AS(gen_setcover({{1}, {2}}, 2, 1), PreconditionError);
    CHECK_THROWS_AS(gen_setcover({{1, 5}, {1}}, 2, 1), PreconditionError);
    CHECK_THROWS_AS(gen_setcover({{1, 2}, {1, 2}}, 2, 0), PreconditionError);
}

TEST_CASE("factor-critical generator named shapes") {
    Graph c3 = gen_factor_critical({3}, 1);
    CHECK(c3 == triangle());
    Graph c5 = gen_factor_critical({5}, 1);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(is_factor_critical(c5));
    Graph g33 = gen_factor_critical({3, 3}, 42);
    CHECK(g33.vertex_count() == 5);
    CHECK(is_factor_critical(g33));
}

TEST_CASE("factor-critical generator rejects even or impossible ears") {
    CHECK_THROWS_AS(gen_factor_critical({4}, 1), PreconditionError);
    CHECK_THROWS_AS(gen_factor_critical({3, 2}, 1), PreconditionError);
    CHECK_THROWS_AS(gen_factor_critical({1}, 1), PreconditionError);
    CHECK_THROWS_AS(gen_factor_critical({}, 1), PreconditionError);
}

TEST_CASE("factor-critical generator output always verifies") {
    for (int seed = 1; seed <= 30; ++seed) {
        std::vector<int> ears{3};
        if (seed % 2) ears.push_back(3);
        if (seed % 3 == 0) ears.push_back(5);
        Graph g = gen_factor_critical(ears, seed);
        CHECK(is_factor_critical(g));
    }
}

TEST_CASE("random generator determinism and extremes") {
    CHECK(gen_random(5, 0, 1, 7).edge_count() == 0);
    CHECK(gen_random(5, 1, 1, 7).edge_count() == 10);
    Graph a = gen_random(8, 1, 2, 42);
    Graph b = gen_random(8, 1, 2, 42);
    CHECK(a == b);
    Graph c = gen_random(8, 1, 2, 43);
    CHECK(!(a == c));  // overwhelmingly likely and pinned by seed
    CHECK_THROWS_AS(gen_random(0, 1, 2, 1), PreconditionError);
    CHECK_THROWS_AS(gen_random(5, 3, 2, 1), PreconditionError);
}

TEST_CASE("metadata serializes deterministically") {
    MkecInstance inst = gen_mkec(path3(), 1, 2);
    CHECK(mkec_metadata_json(inst) == mkec_metadata_json(inst));
    SetCoverInstance sc = gen_setcover({{1, 2}, {1, 2}}, 2, 1);
    CHECK(setcover_metadata_json(sc) == setcover_metadata_json(sc));
    CHECK(simple_metadata_json("random", {8, 1, 2}, 42) ==
          "{\"kind\":\"random\",\"params\":[8,1,2],\"seed\":42}\n");
}
