#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "minex/generators.hpp"
#include "minex/graph.hpp"
#include "minex/graph_io.hpp"
#include "minex/verify.hpp"

using namespace minex;

namespace {

bool invariants_ok(const Graph& g) {
    int dmax = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        dmax = std::max(dmax, g.degree(u));
        for (Vertex v : g.neighbors(u)) {
            if (u == v) return false;             // loop
            if (!g.has_edge(v, u)) return false;  // asymmetric
        }
        auto nb = g.neighbors(u);
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false; // parallel
    }
    return dmax == g.max_degree();
}

} // namespace

TEST_CASE("sparsity on K4, C8 and Petersen") {
    Graph k4 = gen_clique(4);
    Cut c = sparsity(k4, {0, 1});
    CHECK(c.crossing == 4);
    CHECK(c.sparsity == doctest::Approx(2.0));

    Graph c8 = gen_cycle(8);
    Cut cc = sparsity(c8, {0, 1, 2, 3});
    CHECK(cc.crossing == 2);
    CHECK(cc.sparsity == doctest::Approx(0.5));

    // one 5-cycle of the Petersen graph: the outer cycle 0..4, spokes cross
    Graph pet = gen_petersen();
    Cut pc = sparsity(pet, {0, 1, 2, 3, 4});
    CHECK(pc.crossing == 5);
    CHECK(pc.sparsity == doctest::Approx(1.0));

    CHECK_THROWS_AS(sparsity(k4, {}), error);
    CHECK_THROWS_AS(sparsity(k4, {0, 1, 2, 3}), error);
}

TEST_CASE("random regular generator") {
    // (4,3) forces K4
    Graph g = gen_random_regular(4, 3, RngStream(7, "t"));
    CHECK(are_isomorphic(g, gen_clique(4)));

    // (6,2) is a disjoint union of cycles: every degree exactly 2
    Graph h = gen_random_regular(6, 2, RngStream(3, "t"));
    for (Vertex v = 0; v < h.n(); ++v) CHECK(h.degree(v) == 2);

    Graph big = gen_random_regular(100, 3, RngStream(1, "t"));
    CHECK(invariants_ok(big));
    for (Vertex v = 0; v < big.n(); ++v) CHECK(big.degree(v) == 3);

    // determinism: same stream, same edge set
    Graph big2 = gen_random_regular(100, 3, RngStream(1, "t"));
    CHECK(big.edges() == big2.edges());
    Graph big3 = gen_random_regular(100, 3, RngStream(2, "t"));
    CHECK(big.edges() != big3.edges());

    CHECK_THROWS_AS(gen_random_regular(5, 3, RngStream(0, "t")), error);
    CHECK_THROWS_AS(gen_random_regular(4, 5, RngStream(0, "t")), error);
}

TEST_CASE("named generators") {
    Graph grid = gen_grid(3, 3);
    CHECK(grid.n() == 9);
    CHECK(grid.m() == 12);
    CHECK(gen_clique(5).m() == 10);

    // gnp edge count within 4 sigma of the binomial mean
    int n = 1000;
    double p = 2.0 / 1000;
    Graph gnp = gen_gnp(n, p, RngStream(1, "gnp"));
    double pairs = n * (n - 1) / 2.0;
    double mean = pairs * p;
    double sigma = std::sqrt(pairs * p * (1 - p));
    CHECK(std::abs(gnp.m() - mean) <= 4 * sigma);
    CHECK(invariants_ok(gnp));
}

TEST_CASE("contract and delete primitives") {
    Graph c4 = gen_cycle(4);
    Graph c3 = contract_edge(c4, 0, 1);
    CHECK(are_isomorphic(c3, gen_cycle(3)));

    Graph k4 = gen_clique(4);
    CHECK(are_isomorphic(contract_edge(k4, 0, 1), gen_clique(3)));

    Graph pet = gen_petersen();
    Graph del = delete_vertex(pet, 0);
    CHECK(del.n() == 9);
    CHECK(del.m() == 12);

    CHECK_THROWS_AS(contract_edge(c4, 0, 2), error);
    CHECK_THROWS_AS(delete_edge(c4, 0, 2), error);
    CHECK(invariants_ok(c3));
}

TEST_CASE("json round trip and parse errors") {
    Graph k3 = gen_clique(3);
    std::stringstream buf;
    io_save(buf, k3);
    GraphDoc doc = io_load(buf);
    CHECK(doc.graph == k3);

    std::stringstream bad1(R"({"n": 3, "edges": [[0, 5]]})");
    CHECK_THROWS_AS(io_load(bad1), error);
    std::stringstream bad2(R"({"n": 3, "edges": [[0, 1], [1, 0]]})");
    CHECK_THROWS_AS(io_load(bad2), error);
    std::stringstream bad3(R"({"edges": []})");
    CHECK_THROWS_AS(io_load(bad3), error);

    CHECK(to_dot(k3).find("0 -- 1") != std::string::npos);
}

TEST_CASE("contract/delete reproduce pattern from model images") {
    // contracting each image of an identity-extended model of C4 in C8
    // (pairs of adjacent vertices) yields C4
    Graph c8 = gen_cycle(8);
    Graph g = c8;
    // contract (0,1), (2,3), (4,5), (6,7) one by one; ids shift after each
    g = contract_edge(g, 0, 1); // 8 -> 7 vertices
    g = contract_edge(g, 1, 2);
    g = contract_edge(g, 2, 3);
    g = contract_edge(g, 3, 4);
    CHECK(are_isomorphic(g, gen_cycle(4)));
    CHECK(is_minor_bruteforce(c8, gen_cycle(4)));
}

TEST_CASE("rng streams are label-separated") {
    RngStream a(42, "x");
    RngStream b(42, "y");
    CHECK(a.next_u64() != b.next_u64());
    RngStream a2(42, "x");
    RngStream a3(42, "x");
    CHECK(a2.next_u64() == a3.next_u64());
}
