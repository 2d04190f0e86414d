#pragma once

#include "minex/graph.hpp"
#include "minex/rng.hpp"

namespace minex {

// d-regular simple graph via the configuration model with rejection of
// loops and parallel edges. Deterministic per (n, d, rng stream).
Graph gen_random_regular(int n, int d, RngStream rng);

Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_grid(int rows, int cols);
Graph gen_clique(int n);
Graph gen_gnp(int n, double p, RngStream rng);

// Petersen graph, used as a fixed oracle instance in tests.
Graph gen_petersen();

// Fully-connected pattern zoo for the CLI: kind in
// {cycle, path, grid, clique, gnp, regular}.
Graph gen_named(const std::string& kind, const std::vector<double>& params, RngStream rng);

} // namespace minex
