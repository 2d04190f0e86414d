#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minex/cuts.hpp"
#include "minex/graph.hpp"
#include "minex/params.hpp"
#include "minex/rng.hpp"

namespace minex {

// Uniform multicommodity flow: every unordered pair carries `throughput`
// units along one shortest-path-tree route per endpoint. Trees are kept
// per source; explicit (path, value) pairs are materialized on demand to
// keep large instances affordable.
class FlowSolution {
public:
    double throughput = 0.0;          // per-pair delivered value (scaled)
    double max_edge_congestion = 0.0; // after scaling, <= 1
    int hop_bound = 0;                // L

    FlowSolution() = default;
    FlowSolution(std::vector<std::vector<Vertex>> parents, double per_pair_value, double scale,
                 int hops);

    int n() const { return static_cast<int>(parents_.size()); }

    // Tree path from source u to target x (u's own tree).
    Path tree_path(Vertex u, Vertex x) const;

    // Visits every carried flow path once: fn(path, value). Pair (u,v) is
    // served half from u's tree and half from v's.
    template <class Fn>
    void for_each_path(Fn fn) const {
        for (Vertex u = 0; u < n(); ++u)
            for (Vertex v = 0; v < n(); ++v) {
                if (u == v) continue;
                fn(tree_path(u, v), value_half_);
            }
    }

    std::vector<std::pair<Path, double>> materialize() const;

private:
    std::vector<std::vector<Vertex>> parents_; // parents_[source][v]
    double value_half_ = 0.0;                  // per ordered pair
};

struct RoutingOutcome {
    enum class Tag { Paths, Cut, Inconclusive } tag = Tag::Inconclusive;
    std::vector<Path> paths;
    std::optional<Cut> cut;
    double refuted_alpha = 0.0;
    std::string diagnostics;
};

std::string routing_outcome_json(const RoutingOutcome& out);

// Maximum-cardinality vertex-disjoint A->B paths (unit vertex capacities).
std::vector<Path> disjoint_paths_between_sets(const Graph& g, const VertexSet& a,
                                              const VertexSet& b);

// Shortest Z-Z' path by BFS; a shared vertex gives a zero-length path.
Path short_path_between_sets(const Graph& g, const VertexSet& z, const VertexSet& zp);

struct FlowOrCut {
    enum class Tag { Flow, Cut, Inconclusive } tag = Tag::Inconclusive;
    std::optional<FlowSolution> flow;
    std::optional<Cut> cut;
    std::string diagnostics;
};

// Uniform concurrent flow at target throughput W* with hop bound L, or a
// sparse cut recovered from the rescaled dual lengths by region growing.
// Both certificates are verified; Inconclusive is reported otherwise.
FlowOrCut hop_bounded_flow_or_cut(const Graph& g, double alpha,
                                  const Params& params = Params::desk());

struct LengthFunction {
    std::vector<double> lengths; // per edge, aligned with g.edges()
    double total_weight = 0.0;

    static LengthFunction uniform(const Graph& g, double value);
    static LengthFunction from(const Graph& g, std::vector<double> lens);
};

// Ball-growing partition on the subdivided auxiliary graph: components of
// r'-hop bounded diameter <= Delta, few crossing edges. Radii below
// 8 W log n / |E| yield the all-singletons partition unless the guard is
// lifted (the cut ladder does, relying on exact verification instead).
std::vector<VertexSet> region_grow_partition(const Graph& g, const LengthFunction& ell,
                                             double delta, bool singleton_guard = true);

struct CoreOrCutLD {
    std::optional<VertexSet> core;
    std::optional<Cut> cut;
    bool inconclusive = false;
    std::string diagnostics;
};

// Region-growing core of >= ceil(2n/3) vertices with tiny hop-bounded
// diameter, or a balanced sparse cut assembled from the components.
// delta_override > 0 replaces the params radius (used by the descending
// radius ladder in hop_bounded_flow_or_cut).
CoreOrCutLD low_diameter_core_or_cut(const Graph& g, double alpha, const LengthFunction& ell,
                                     const Params& params = Params::desk(),
                                     double delta_override = 0.0, bool singleton_guard = true);

// Layered cut search from the core T; throws NoLayerCut when every layer
// expands (precondition violated).
Cut far_set_sparse_cut(const Graph& g, double alpha, const LengthFunction& ell, int hop_limit,
                       const VertexSet& t);

// Hop-bounded distances D^{<=L}(u, .) by Bellman-Ford over hops.
std::vector<double> hop_bounded_distances(const Graph& g, const LengthFunction& ell,
                                          const VertexSet& sources, int hop_limit);

// Routes a matching with low vertex congestion by sampling from the
// concatenated uniform flow; or returns the cut from the flow solver.
RoutingOutcome route_matching_congested(const Graph& g, const Matching& m, double alpha,
                                        RngStream rng, const Params& params = Params::desk());

// Moser-Tardos disentangling: picks one path per family, resampling the two
// families of any vertex-sharing chosen pair until none remains.
std::vector<Path> lll_make_disjoint(const std::vector<std::vector<Path>>& families, int q,
                                    RngStream rng, const Params& params = Params::desk());

// End-to-end route-or-cut: matches family j to family j+r, routes with
// congestion, then disentangles. Cut/Inconclusive surface failures.
RoutingOutcome route_or_cut(const Graph& g, const std::vector<VertexSet>& families, double alpha,
                            RngStream rng, const Params& params = Params::desk());

} // namespace minex
