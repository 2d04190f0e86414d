#include "minex/generators.hpp"

#include <algorithm>
#include <cmath>

namespace minex {

namespace {
constexpr int kConfigModelRetryCap = 100;
}

Graph gen_random_regular(int n, int d, RngStream rng) {
    require(n > 0 && d >= 0, errc::bad_params, "n and d must be positive");
    require(d < n, errc::infeasible_degree, "d must be smaller than n");
    require((static_cast<long long>(n) * d) % 2 == 0, errc::infeasible_degree,
            "n*d must be even");

    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (Vertex v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);

    for (int attempt = 0; attempt < kConfigModelRetryCap; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng.engine());
        GraphBuilder b(n);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (!b.try_add_edge(stubs[i], stubs[i + 1])) {
                ok = false;
                break;
            }
        }
        if (ok) return b.build();
    }
    fail(errc::generation_failed,
         "configuration model rejected " + std::to_string(kConfigModelRetryCap) + " pairings");
}

Graph gen_cycle(int n) {
    require(n >= 3, errc::bad_params, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph gen_path(int n) {
    require(n >= 1, errc::bad_params, "path needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph gen_grid(int rows, int cols) {
    require(rows >= 1 && cols >= 1, errc::bad_params, "grid needs positive dimensions");
    GraphBuilder b(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) b.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) b.add_edge(id(r, c), id(r + 1, c));
        }
    }
    return b.build();
}

Graph gen_clique(int n) {
    require(n >= 1, errc::bad_params, "clique needs n >= 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph gen_gnp(int n, double p, RngStream rng) {
    require(n >= 1, errc::bad_params, "gnp needs n >= 1");
    require(p >= 0.0 && p <= 1.0, errc::bad_params, "gnp needs p in [0,1]");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_bernoulli(p)) b.add_edge(u, v);
    return b.build();
}

Graph gen_petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);         // outer cycle
        b.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        b.add_edge(i, 5 + i);               // spokes
    }
    return b.build();
}

Graph gen_named(const std::string& kind, const std::vector<double>& params, RngStream rng) {
    auto arg = [&](size_t i) -> int {
        require(i < params.size(), errc::bad_params, kind + ": missing parameter");
        return static_cast<int>(params[i]);
    };
    if (kind == "cycle") return gen_cycle(arg(0));
    if (kind == "path") return gen_path(arg(0));
    if (kind == "grid") return gen_grid(arg(0), arg(1));
    if (kind == "clique") return gen_clique(arg(0));
    if (kind == "gnp") {
        require(params.size() >= 2, errc::bad_params, "gnp: need n and p");
        return gen_gnp(static_cast<int>(params[0]), params[1], rng);
    }
    if (kind == "regular") return gen_random_regular(arg(0), arg(1), rng);
    if (kind == "petersen") return gen_petersen();
    fail(errc::bad_params, "unknown graph kind: " + kind);
}

} // namespace minex
