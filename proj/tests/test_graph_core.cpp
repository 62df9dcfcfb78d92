#include <doctest.h>

#include <random>

#include "stabilkit/io.hpp"
#include "stabilkit/oracle.hpp"

using namespace stabilkit;

namespace {

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
    return Graph(n, std::move(edges));
}

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("rational arithmetic stays reduced and exact") {
    Rat a(1, 2), b(1, 3);
    CHECK(a + b == Rat(5, 6));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(7, 2) > Rat(10, 3));
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat(-5, 10).str() == "-1/2");
}

TEST_CASE("half integers convert and compare") {
    HalfInt h = HalfInt::half();
    CHECK(h + h == HalfInt::one());
    CHECK(h.to_rat() == Rat(1, 2));
    CHECK(!h.is_whole());
    CHECK(HalfInt::from_rat(Rat(3, 2)) == HalfInt::from_doubled(3));
    CHECK(!HalfInt::from_rat(Rat(1, 3)).has_value());
    CHECK(HalfInt::whole(2) - HalfInt::half() == HalfInt::from_doubled(3));
}

TEST_CASE("parse_graph handles the documented format") {
    Graph p3 = parse_graph("3 2\n0 1\n1 2\n");
    CHECK(p3 == path(3));
    Graph k3 = parse_graph("3 3\n0 1\n1 2\n0 2\n");
    CHECK(k3 == triangle());
    CHECK(parse_graph("# comment\n3 2\n0 1\n# another\n1 2\n") == path(3));
    CHECK(parse_graph("2 0\n").edge_count() == 0);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    try {
        parse_graph("3 2\n0 1\n1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("graph equality and adjacency are canonical") {
    Graph a(3, {{1, 2}, {0, 1}});
    Graph b(3, {{0, 1}, {1, 2}});
    CHECK(a == b);
    CHECK(a.has_edge(2, 1));
    CHECK(!a.has_edge(0, 2));
    CHECK(a.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InternalError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {0, 1}}), InternalError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), InternalError);
}

TEST_CASE("matching construction rejects shared endpoints") {
    CHECK_THROWS_AS(Matching({{0, 1}, {1, 2}}), InternalError);
    Matching m({{2, 3}, {0, 1}});
    CHECK(m.size() == 2);
    CHECK(m.edges()[0] == Edge{0, 1});
    auto mate = m.mate_vector(5);
    CHECK(mate[0] == 1);
    CHECK(mate[4] == -1);
}

TEST_CASE("make_solution enforces every certificate invariant") {
    Graph g = triangle();
    // The K3 optimum: expose 0, match {1,2}, c = 1 on the matching edge.
    auto ok = make_solution(g, Matching({{1, 2}}),
                            {HalfInt::zero(), HalfInt::one(), HalfInt::one()},
                            {{Edge{1, 2}, HalfInt::one()}});
    CHECK(ok.cost == HalfInt::one());

    // c off the matching.
    CHECK_THROWS_AS(make_solution(g, Matching({{1, 2}}),
                                  {HalfInt::zero(), HalfInt::one(), HalfInt::one()},
                                  {{Edge{0, 1}, HalfInt::one()}}),
                    InternalError);
    // c above 1.
    CHECK_THROWS_AS(make_solution(g, Matching({{1, 2}}),
                                  {HalfInt::zero(), HalfInt::from_doubled(3),
                                   HalfInt::from_doubled(3)},
                                  {{Edge{1, 2}, HalfInt::from_doubled(4)}}),
                    InternalError);
    // exposed vertex with y > 0.
    CHECK_THROWS_AS(make_solution(g, Matching({{1, 2}}),
                                  {HalfInt::half(), HalfInt::one(), HalfInt::one()},
                                  {{Edge{1, 2}, HalfInt::one()}}),
                    InternalError);
    // cover violated (y too small on edge 01).
    CHECK_THROWS_AS(make_solution(g, Matching({{1, 2}}),
                                  {HalfInt::zero(), HalfInt::half(), HalfInt::one()},
                                  {{Edge{1, 2}, HalfInt::half()}}),
                    InternalError);
    // matching edge not tight.
    CHECK_THROWS_AS(make_solution(g, Matching({{1, 2}}),
                                  {HalfInt::zero(), HalfInt::one(), HalfInt::one()}, {}),
                    InternalError);
}

TEST_CASE("certificate serialization is bit-exact and round-trips") {
    Graph g = triangle();
    auto s = make_solution(g, Matching({{1, 2}}),
                           {HalfInt::zero(), HalfInt::one(), HalfInt::one()},
                           {{Edge{1, 2}, HalfInt::one()}});
    std::string text = serialize_solution(s);
    CHECK(text ==
          "{\"n\":3,\"matching\":[[1,2]],\"y2\":[0,2,2],\"c2\":[[1,2,2]],\"cost2\":2}\n");
    CHECK(parse_solution(text) == s);

    // Stable single edge: the all-halves cover, empty c.
    Graph edge(2, {{0, 1}});
    auto s2 = make_solution(edge, Matching({{0, 1}}), {HalfInt::half(), HalfInt::half()}, {});
    CHECK(serialize_solution(s2) ==
          "{\"n\":2,\"matching\":[[0,1]],\"y2\":[1,1],\"c2\":[],\"cost2\":0}\n");
    CHECK(parse_solution(serialize_solution(s2)) == s2);
}

TEST_CASE("solution round-trip property on oracle outputs") {
    std::mt19937_64 seed_gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(seed_gen() % 6);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (seed_gen() % 2 == 0) edges.push_back(Edge{u, v});
        Graph g(n, std::move(edges));
        StabilizerSolution s = solve_oracle(g);
        CHECK(parse_solution(serialize_solution(s)) == s);
    }
}

TEST_CASE("parse_solution rejects malformed certificates") {
    CHECK_THROWS_AS(parse_solution("not json"), ParseError);
    CHECK_THROWS_AS(parse_solution("{\"n\":2}"), ParseError);
    CHECK_THROWS_AS(parse_solution(
                        "{\"n\":2,\"matching\":[[0,0]],\"y2\":[0,0],\"c2\":[],\"cost2\":0}"),
                    ParseError);
    CHECK_THROWS_AS(parse_solution(
                        "{\"n\":2,\"matching\":[],\"y2\":[0],\"c2\":[],\"cost2\":0}"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_solution(
            "{\"n\":3,\"matching\":[[0,1],[1,2]],\"y2\":[0,0,0],\"c2\":[],\"cost2\":0}"),
        ParseError);
}
