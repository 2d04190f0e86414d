#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minex/generators.hpp"
#include "minex/grouping.hpp"
#include "minex/rng.hpp"

using namespace minex;

namespace {

void check_family(const Graph& g, const VertexSet& anchors, int r, const GroupFamily& fam) {
    int d = std::max(1, g.max_degree());
    long long lo = std::max<long long>(
        1, static_cast<long long>(anchors.size()) / (static_cast<long long>(d) * r));
    long long hi = static_cast<long long>(anchors.size()) / r;
    REQUIRE(static_cast<int>(fam.groups.size()) >= r);
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (size_t i = 0; i < fam.groups.size(); ++i) {
        CHECK(is_connected_subset(g, fam.groups[i]));
        long long cnt = 0;
        for (Vertex v : fam.groups[i]) {
            CHECK(!seen[v]);
            seen[v] = 1;
            cnt += set_contains(anchors, v);
        }
        CHECK(cnt == fam.anchor_counts[i]);
        CHECK(cnt >= lo);
        CHECK(cnt <= hi);
    }
}

} // namespace

TEST_CASE("tree groups on a path") {
    Graph p6 = gen_path(6);
    VertexSet all = full_vertex_set(6);
    auto fam = tree_decompose_groups(p6, all, 2);
    check_family(p6, all, 2, fam);
}

TEST_CASE("tree groups on a star with r = 1") {
    Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    VertexSet leaves = {1, 2, 3, 4, 5};
    auto fam = tree_decompose_groups(star, leaves, 1);
    REQUIRE(fam.groups.size() >= 1);
    check_family(star, leaves, 1, fam);
}

TEST_CASE("tree groups on a random regular graph") {
    Graph g = gen_random_regular(64, 3, RngStream(11, "grp"));
    VertexSet all = full_vertex_set(64);
    auto fam = tree_decompose_groups(g, all, 4);
    check_family(g, all, 4, fam);
    // each group holds at least floor(64/12) = 5 anchors
    for (int c : fam.anchor_counts) CHECK(c >= 5);
}

TEST_CASE("tree groups fuzz") {
    RngStream rng(21, "fuzz");
    int done = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 10 + 2 * static_cast<int>(rng.next_below(50));
        Graph g = trial % 2 == 0 ? gen_random_regular(n, 3, rng.fork("g", trial))
                                 : gen_gnp(n, 6.0 / n, rng.fork("g", trial));
        if (!is_connected(g)) continue;
        VertexSet anchors;
        for (Vertex v = 0; v < n; ++v)
            if (rng.next_bernoulli(0.6)) anchors.push_back(v);
        if (anchors.empty()) continue;
        int r = 1 + static_cast<int>(rng.next_below(anchors.size()));
        auto fam = tree_decompose_groups(g, anchors, r);
        check_family(g, anchors, r, fam);
        ++done;
    }
    CHECK(done >= 20);
}

TEST_CASE("tree groups error paths") {
    Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(tree_decompose_groups(disconnected, {0, 1, 2, 3}, 2), error);
    Graph p4 = gen_path(4);
    CHECK_THROWS_AS(tree_decompose_groups(p4, {0}, 2), error);
}

namespace {

void check_bundle(const Graph& g, const std::vector<Path>& paths, int q, const PathBundle& b) {
    int d = std::max(1, g.max_degree());
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    size_t retained = 0;
    for (size_t i = 0; i < b.clusters.size(); ++i) {
        CHECK(is_connected_subset(g, b.clusters[i]));
        for (Vertex v : b.clusters[i]) {
            CHECK(!seen[v]);
            seen[v] = 1;
        }
        CHECK(static_cast<int>(b.member_paths[i].size()) >= q);
        CHECK(static_cast<long long>(b.member_paths[i].size()) <= 4LL * d * q);
        for (int pi : b.member_paths[i])
            for (Vertex v : paths[pi]) CHECK(set_contains(b.clusters[i], v));
        retained += b.member_paths[i].size();
    }
    CHECK(2 * retained >= paths.size());
}

} // namespace

TEST_CASE("group_paths on a long path host, q = 1") {
    // host: path on 96 vertices; paths: 32 single-vertex paths spread out
    Graph host = gen_path(96);
    std::vector<Path> paths;
    for (int i = 0; i < 32; ++i) paths.push_back({3 * i});
    auto bundle = group_paths(host, paths, 1);
    check_bundle(host, paths, 1, bundle);
    size_t retained = 0;
    for (auto& m : bundle.member_paths) retained += m.size();
    CHECK(retained >= 16);
}

TEST_CASE("group_paths boundary: too few paths") {
    Graph host = gen_path(40);
    std::vector<Path> paths;
    int d = 2, q = 1;
    for (int i = 0; i < 16 * d * q - 1; ++i) paths.push_back({i});
    CHECK_THROWS_AS(group_paths(host, paths, q), error);
}

TEST_CASE("group_paths rejects intersecting paths") {
    Graph host = gen_path(40);
    std::vector<Path> paths;
    for (int i = 0; i < 32; ++i) paths.push_back({i});
    paths[1] = {1, 2};
    paths[2] = {2, 3}; // shares vertex 2
    CHECK_THROWS_AS(group_paths(host, paths, 1), error);
}

TEST_CASE("group_paths on random regular hosts with random disjoint paths") {
    RngStream rng(5, "bundle");
    int done = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 128;
        Graph g = gen_random_regular(n, 3, rng.fork("host", trial));
        if (!is_connected(g)) continue;
        // greedy vertex-disjoint short paths
        std::vector<Path> paths;
        std::vector<char> used(static_cast<size_t>(n), 0);
        for (Vertex v = 0; v < n && paths.size() < 56; ++v) {
            if (used[v]) continue;
            Path p{v};
            used[v] = 1;
            Vertex cur = v;
            int len = static_cast<int>(rng.next_below(3));
            for (int step = 0; step < len; ++step) {
                Vertex next = -1;
                for (Vertex w : g.neighbors(cur))
                    if (!used[w]) {
                        next = w;
                        break;
                    }
                if (next < 0) break;
                used[next] = 1;
                p.push_back(next);
                cur = next;
            }
            paths.push_back(p);
        }
        int q = 1;
        if (static_cast<long long>(paths.size()) < 16LL * 3 * q) continue;
        auto bundle = group_paths(g, paths, q);
        check_bundle(g, paths, q, bundle);
        ++done;
    }
    CHECK(done >= 30);
}

TEST_CASE("group_paths with q = 2 on a spider host") {
    // center chain with legs; 96 single-vertex paths on the leaf layer
    GraphBuilder b(194);
    for (int i = 0; i + 1 < 97; ++i) b.add_edge(i, i + 1); // chain 0..96
    for (int i = 0; i < 97; ++i) b.add_edge(i, 97 + i);    // one leg each
    Graph host = b.build();
    std::vector<Path> paths;
    for (int i = 0; i < 96; ++i) paths.push_back({97 + i});
    int q = 2;
    REQUIRE(static_cast<long long>(paths.size()) >= 16LL * host.max_degree() * q);
    auto bundle = group_paths(host, paths, q);
    check_bundle(host, paths, q, bundle);
}
