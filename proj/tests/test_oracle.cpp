#include <doctest.h>

#include <random>

#include "stabilkit/ged.hpp"
#include "stabilkit/lp.hpp"
#include "stabilkit/oracle.hpp"
#include "support/brute.hpp"
#include "support/graphgen.hpp"

using namespace stabilkit;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph two_triangles_bridge() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}});
}

}  // namespace

TEST_CASE("maximum matching enumeration counts and order") {
    CHECK(enumerate_maximum_matchings(triangle()).size() == 3);
    CHECK(enumerate_maximum_matchings(path(3)).size() == 2);
    auto c5 = enumerate_maximum_matchings(cycle(5));
    CHECK(c5.size() == 5);
    for (const Matching& m : c5) CHECK(m.size() == 2);
    // Lexicographic order of sorted edge sequences.
    for (size_t i = 1; i < c5.size(); ++i) CHECK(c5[i - 1].edges() < c5[i].edges());
}

TEST_CASE("enumeration agrees with the independent brute force") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) {
            auto fast = enumerate_maximum_matchings(g);
            auto slow = testsupport::brute_maximum_matchings(g);
            REQUIRE(fast.size() == slow.size());
            for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].edges() == slow[i]);
        }
}

TEST_CASE("enumeration enforces the size bound") {
    CHECK_THROWS_AS(enumerate_maximum_matchings(Graph(13, {})), BoundError);
    CHECK_NOTHROW(enumerate_maximum_matchings(Graph(13, {}), 13));
}

TEST_CASE("oracle named values") {
    CHECK(solve_oracle(triangle()).cost == HalfInt::one());
    CHECK(solve_oracle(cycle(5)).cost == HalfInt::one());
    CHECK(solve_oracle(path(3)).cost == HalfInt::zero());
    CHECK(solve_oracle(path(4)).cost == HalfInt::zero());
    CHECK(solve_oracle(two_triangles_bridge()).cost == HalfInt::zero());
}

TEST_CASE("oracle is zero exactly on stable graphs, and is self-consistent") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) {
            StabilizerSolution s = solve_oracle(g);
            CHECK((s.cost == HalfInt::zero()) == is_stable(g));
            CHECK(verify_certificate(g, s).valid());
            // Duality restated at value level.
            CHECK(s.cost.to_rat() == tau_f(g, s.c) - Rat(matching_number(g)));
        }
}

TEST_CASE("verify_certificate flags each violated condition") {
    Graph g = triangle();
    StabilizerSolution good = solve_oracle(g);
    CHECK(verify_certificate(g, good).valid());

    // All-halves cover with one matching edge: exposed vertex has y != 0
    // and the primal-dual equality fails (1 != 3/2).
    StabilizerSolution bad;
    bad.n = 3;
    bad.matching = Matching({{0, 1}});
    bad.y = {HalfInt::half(), HalfInt::half(), HalfInt::half()};
    bad.cost = HalfInt::zero();
    Verdict v = verify_certificate(g, bad);
    CHECK(!v.valid());
    bool saw_exposed = false, saw_duality = false;
    for (const auto& msg : v.violations) {
        if (msg.find("exposed vertex") != std::string::npos) saw_exposed = true;
        if (msg.find("primal-dual") != std::string::npos) saw_duality = true;
    }
    CHECK(saw_exposed);
    CHECK(saw_duality);

    // Tampered cost2.
    StabilizerSolution tampered = good;
    tampered.cost = tampered.cost + HalfInt::one();
    Verdict vt = verify_certificate(g, tampered);
    CHECK(!vt.valid());
    bool saw = false;
    for (const auto& msg : vt.violations)
        if (msg.find("primal-dual") != std::string::npos) saw = true;
    CHECK(saw);

    // Certificate for a different graph.
    Verdict vw = verify_certificate(path(4), good);
    CHECK(!vw.valid());

    // Valid single-edge certificate.
    Graph edge(2, {{0, 1}});
    StabilizerSolution se;
    se.n = 2;
    se.matching = Matching({{0, 1}});
    se.y = {HalfInt::half(), HalfInt::half()};
    se.cost = HalfInt::zero();
    CHECK(verify_certificate(edge, se).valid());
}

TEST_CASE("verifier flags single-field tampering of valid certificates") {
    std::mt19937_64 rng(2024);
    int tampered_checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2 == 0) edges.push_back(Edge{u, v});
        Graph g(n, std::move(edges));
        StabilizerSolution s = solve_oracle(g);
        REQUIRE(verify_certificate(g, s).valid());

        // Changing the recorded cost always breaks the value equality.
        StabilizerSolution t1 = s;
        t1.cost = t1.cost + HalfInt::half();
        CHECK(!verify_certificate(g, t1).valid());

        // Bumping one cover value breaks the primal-dual equality.
        if (!s.y.empty()) {
            StabilizerSolution t2 = s;
            size_t idx = rng() % n;
            t2.y[idx] = t2.y[idx] + HalfInt::one();
            CHECK(!verify_certificate(g, t2).valid());
        }

        // Dropping a nonzero stabilizer entry leaves its matching edge
        // slack on one side of the equality.
        if (!s.c.empty()) {
            StabilizerSolution t3 = s;
            t3.c.erase(t3.c.begin() + static_cast<long>(rng() % t3.c.size()));
            CHECK(!verify_certificate(g, t3).valid());
            ++tampered_checked;
        }

        // Removing a matching edge exposes vertices that still carry y.
        if (s.matching.size() > 0) {
            StabilizerSolution t4 = s;
            auto medges = t4.matching.edges();
            Edge removed = medges.back();
            medges.pop_back();
            t4.matching = Matching(medges);
            if (s.y[removed.u] != HalfInt::zero() || s.y[removed.v] != HalfInt::zero())
                CHECK(!verify_certificate(g, t4).valid());
        }
    }
    CHECK(tampered_checked > 0);
}

TEST_CASE("mkec brute force named values") {
    CHECK(mkec_bruteforce(path(3), 1) == 2);
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(mkec_bruteforce(k4, 3) == 3);
    CHECK(mkec_bruteforce(triangle(), 3) == 3);
    CHECK(mkec_bruteforce(triangle(), 0) == 0);
    CHECK_THROWS_AS(mkec_bruteforce(triangle(), 4), PreconditionError);
    CHECK_THROWS_AS(mkec_bruteforce(Graph(13, {}), 0), BoundError);
}
