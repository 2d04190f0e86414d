#include "minex/flowrouting.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "minex/maxflow.hpp"

namespace minex {

// --- FlowSolution ---

FlowSolution::FlowSolution(std::vector<std::vector<Vertex>> parents, double per_pair_value,
                           double scale, int hops)
    : throughput(per_pair_value * scale), hop_bound(hops), parents_(std::move(parents)),
      value_half_(per_pair_value * scale / 2.0) {}

Path FlowSolution::tree_path(Vertex u, Vertex x) const {
    Path p{x};
    while (p.back() != u) {
        Vertex par = parents_[u][p.back()];
        require(par >= 0, errc::no_path, "target unreachable in flow tree");
        p.push_back(par);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

std::vector<std::pair<Path, double>> FlowSolution::materialize() const {
    std::vector<std::pair<Path, double>> out;
    for_each_path([&](const Path& p, double v) { out.emplace_back(p, v); });
    return out;
}

// --- basic path ops ---

std::vector<Path> disjoint_paths_between_sets(const Graph& g, const VertexSet& a,
                                              const VertexSet& b) {
    require(sets_disjoint(a, b), errc::bad_params, "A and B must be disjoint");
    if (a.empty() || b.empty()) return {};
    int n = g.n();
    MaxFlow mf(2 * n + 2);
    int s = 2 * n, t = 2 * n + 1;
    for (Vertex v = 0; v < n; ++v) mf.add_edge(2 * v, 2 * v + 1, 1);
    for (const auto& [u, v] : g.edges()) {
        mf.add_edge(2 * u + 1, 2 * v, 1);
        mf.add_edge(2 * v + 1, 2 * u, 1);
    }
    for (Vertex v : a) mf.add_edge(s, 2 * v, 1);
    for (Vertex v : b) mf.add_edge(2 * v + 1, t, 1);
    long long flow = mf.max_flow(s, t);

    // walk unit flows from each saturated source arc
    std::vector<Path> paths;
    std::vector<char> in_b(static_cast<size_t>(n), 0);
    for (Vertex v : b) in_b[v] = 1;
    std::vector<char> consumed(static_cast<size_t>(n), 0);

    for (Vertex start : a) {
        // check the source arc carried flow: in-node of start receives from s
        bool started = false;
        mf.for_arcs(s, [&](int e, int vin, int cap) {
            if (vin == 2 * start && cap == 0 && mf.flow_on(e) == 1) started = true;
        });
        if (!started) continue;
        Path p{start};
        Vertex cur = start;
        int guard = 2 * n + 2;
        while (!in_b[cur] && guard-- > 0) {
            Vertex next = -1;
            mf.for_arcs(2 * cur + 1, [&](int e, int to, int) {
                if (next >= 0 || to == t) return;
                if (to % 2 == 0 && mf.flow_on(e) > 0 && !consumed[to / 2]) next = to / 2;
            });
            require(next >= 0, errc::internal, "flow walk dead-ended");
            consumed[next] = 1;
            p.push_back(next);
            cur = next;
        }
        require(in_b[cur], errc::internal, "flow walk exceeded its guard");
        paths.push_back(std::move(p));
    }
    require(static_cast<long long>(paths.size()) == flow, errc::internal,
            "path extraction lost flow units");
    return paths;
}

Path short_path_between_sets(const Graph& g, const VertexSet& z, const VertexSet& zp) {
    require(!z.empty() && !zp.empty(), errc::bad_params, "both endpoint sets must be nonempty");
    VertexSet common = set_intersect(z, zp);
    if (!common.empty()) return {common.front()};

    std::vector<Vertex> parent(static_cast<size_t>(g.n()), -2);
    std::deque<Vertex> queue;
    for (Vertex v : z) {
        parent[v] = -1;
        queue.push_back(v);
    }
    std::vector<char> target(static_cast<size_t>(g.n()), 0);
    for (Vertex v : zp) target[v] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (parent[w] != -2) continue;
            parent[w] = u;
            if (target[w]) {
                Path p{w};
                while (parent[p.back()] >= 0) p.push_back(parent[p.back()]);
                std::reverse(p.begin(), p.end());
                return p;
            }
            queue.push_back(w);
        }
    }
    fail(errc::no_path, "endpoint sets lie in different components");
}

// --- uniform flow primal (shortest-path-tree rounds) ---

namespace {

// Dijkstra tree from src under edge lengths; returns parents and hop counts.
void dijkstra_tree(const Graph& g, const std::vector<std::vector<double>>& len_adj, Vertex src,
                   std::vector<Vertex>& parent, std::vector<int>& hops) {
    int n = g.n();
    parent.assign(static_cast<size_t>(n), -1);
    hops.assign(static_cast<size_t>(n), -1);
    std::vector<double> dist(static_cast<size_t>(n), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0;
    hops[src] = 0;
    pq.emplace(0.0, src);
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > dist[u]) continue;
        const auto& nb = g.neighbors(u);
        for (size_t i = 0; i < nb.size(); ++i) {
            Vertex w = nb[i];
            double nd = du + len_adj[u][i];
            if (nd < dist[w] - 1e-15) {
                dist[w] = nd;
                parent[w] = u;
                hops[w] = hops[u] + 1;
                pq.emplace(nd, w);
            }
        }
    }
    parent[src] = -1;
}

void bfs_tree(const Graph& g, Vertex src, std::vector<Vertex>& parent, std::vector<int>& hops) {
    int n = g.n();
    parent.assign(static_cast<size_t>(n), -1);
    hops.assign(static_cast<size_t>(n), -1);
    std::deque<Vertex> queue{src};
    hops[src] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (hops[w] >= 0) continue;
            hops[w] = hops[u] + 1;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    parent[src] = -1;
}

// Per-edge load of the tree routing: each source's tree carries value_half
// to every other vertex, so a tree edge (parent[v], v) carries the subtree
// size below v.
void accumulate_tree_loads(const Graph& g, const std::vector<Vertex>& parent, double value_half,
                           std::map<Edge, double>& load) {
    int n = static_cast<int>(parent.size());
    std::vector<int> children(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(n);
    // topological order by hop distance: process leaves upward via counts
    std::vector<int> out_deg(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        if (parent[v] >= 0) ++out_deg[parent[v]];
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (out_deg[v] == 0) queue.push_back(v);
    std::vector<int> subtree(static_cast<size_t>(n), 1);
    std::vector<int> remaining = out_deg;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (parent[v] >= 0) {
            subtree[parent[v]] += subtree[v];
            load[make_edge(parent[v], v)] += value_half * subtree[v];
            if (--remaining[parent[v]] == 0) queue.push_back(parent[v]);
        }
    }
    (void)g;
    (void)children;
}

} // namespace

LengthFunction LengthFunction::uniform(const Graph& g, double value) {
    LengthFunction lf;
    lf.lengths.assign(static_cast<size_t>(g.m()), value);
    lf.total_weight = value * g.m();
    return lf;
}

LengthFunction LengthFunction::from(const Graph& g, std::vector<double> lens) {
    require(static_cast<int>(lens.size()) == g.m(), errc::bad_params,
            "length vector size mismatch");
    LengthFunction lf;
    lf.lengths = std::move(lens);
    lf.total_weight = 0;
    for (double x : lf.lengths) {
        require(x >= 0, errc::bad_params, "edge lengths must be nonnegative");
        lf.total_weight += x;
    }
    return lf;
}

FlowOrCut hop_bounded_flow_or_cut(const Graph& g, double alpha, const Params& params) {
    require(is_connected(g), errc::not_connected, "hop_bounded_flow_or_cut needs connected g");
    require(alpha > 0 && alpha <= 1, errc::bad_params, "alpha must lie in (0,1]");
    FlowOrCut out;
    int n = g.n();
    if (n < 2) {
        out.tag = FlowOrCut::Tag::Flow;
        out.flow = FlowSolution({{ -1 }}, 0.0, 1.0, 0);
        return out;
    }
    int d = std::max(1, g.max_degree());
    double wstar = params.wstar(alpha, n);
    int hop_limit = params.hop_bound(alpha, n, d);
    std::vector<Edge> edges = g.edges();
    int m = g.m();

    // per-adjacency edge index for Dijkstra and length lookups
    std::map<Edge, int> edge_id;
    for (int i = 0; i < m; ++i) edge_id[edges[i]] = i;
    std::vector<double> len(static_cast<size_t>(m), 1.0);

    auto adj_lengths = [&]() {
        std::vector<std::vector<double>> la(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            la[v].reserve(g.neighbors(v).size());
            for (Vertex w : g.neighbors(v)) la[v].push_back(len[edge_id[make_edge(v, w)]]);
        }
        return la;
    };

    double best_cong = std::numeric_limits<double>::infinity();
    std::vector<std::vector<Vertex>> best_trees;
    double accept_cong = 1.0 / (1.0 - params.flow_eps);

    for (int round = 0; round < std::max(1, params.flow_mwu_rounds); ++round) {
        auto la = adj_lengths();
        std::vector<std::vector<Vertex>> trees(static_cast<size_t>(n));
        std::map<Edge, double> load;
        bool hops_ok = true;
        std::vector<Vertex> parent;
        std::vector<int> hops;
        for (Vertex src = 0; src < n && hops_ok; ++src) {
            dijkstra_tree(g, la, src, parent, hops);
            int worst = *std::max_element(hops.begin(), hops.end());
            if (worst > hop_limit) {
                bfs_tree(g, src, parent, hops);
                worst = *std::max_element(hops.begin(), hops.end());
                if (worst > hop_limit) hops_ok = false; // pair beyond L exists
            }
            trees[src] = parent;
            accumulate_tree_loads(g, parent, wstar / 2.0, load);
        }
        if (hops_ok) {
            double max_cong = 0;
            for (auto& [e, l] : load) max_cong = std::max(max_cong, l);
            if (max_cong < best_cong) {
                best_cong = max_cong;
                best_trees = trees;
            }
            if (max_cong <= accept_cong) break;
        }
        // exponential reweighting toward congested edges
        for (int i = 0; i < m; ++i) {
            auto it = load.find(edges[i]);
            double cong = it == load.end() ? 0.0 : it->second;
            len[i] = std::exp(params.flow_mwu_eta * std::min(cong, 8.0));
        }
    }

    if (!best_trees.empty() && best_cong <= accept_cong) {
        double scale = best_cong > 1.0 ? 1.0 / best_cong : 1.0;
        FlowSolution flow(std::move(best_trees), wstar, scale, hop_limit);
        flow.max_edge_congestion = std::min(1.0, best_cong * scale);
        require(flow.throughput >= (1.0 - params.flow_eps) * wstar - 1e-15, errc::internal,
                "accepted flow misses the throughput target");
        out.tag = FlowOrCut::Tag::Flow;
        out.flow = std::move(flow);
        return out;
    }

    // dual route: rescale the exponential lengths to total weight W* and
    // region-grow per Leighton-Rao; a descending radius ladder covers
    // symmetric instances whose duals stay uniform
    double wsum = std::accumulate(len.begin(), len.end(), 0.0);
    std::vector<double> scaled(len);
    for (auto& x : scaled) x *= wstar / wsum;
    LengthFunction ell = LengthFunction::from(g, std::move(scaled));

    std::string diag = "flow target missed";
    int quarter_hops = std::max(1, hop_limit / 4);
    double delta = params.rg_delta(n);
    const double kRungFactor = 1.4142135623730951;
    for (int rung = 0; rung < 12 && delta > 0; ++rung, delta /= kRungFactor) {
        CoreOrCutLD ld =
            low_diameter_core_or_cut(g, alpha, ell, params, delta, /*singleton_guard=*/rung == 0);
        if (ld.cut) {
            out.tag = FlowOrCut::Tag::Cut;
            out.cut = ld.cut;
            return out;
        }
        if (ld.inconclusive) {
            diag += "; " + ld.diagnostics;
        } else {
            // core branch: the far-set precondition must hold for the
            // layered search to be justified
            const VertexSet& t = *ld.core;
            auto dist_t = hop_bounded_distances(g, ell, t, quarter_hops);
            double total = 0;
            for (double x : dist_t)
                total += std::isfinite(x) ? x : 1.0;
            if (total > 4.0 * ell.total_weight / alpha) {
                try {
                    Cut cut = far_set_sparse_cut(g, alpha, ell, quarter_hops, t);
                    out.tag = FlowOrCut::Tag::Cut;
                    out.cut = cut;
                    return out;
                } catch (const error& e) {
                    diag += std::string("; far-set: ") + e.what();
                }
            } else {
                diag += "; core covers nearly everything at delta " + std::to_string(delta);
            }
        }
    }
    out.diagnostics = diag;
    return out;
}

// --- region growing on the subdivided graph ---

namespace {

struct AuxGraph {
    std::vector<std::vector<int>> adj; // subdivision chain graph
    int n_orig;
    std::vector<int> edge_first_aux;   // first auxiliary node per edge (-1 if none)
};

AuxGraph build_subdivided(const Graph& g, const LengthFunction& ell) {
    AuxGraph aux;
    aux.n_orig = g.n();
    std::vector<Edge> edges = g.edges();
    int next = g.n();
    aux.adj.resize(static_cast<size_t>(g.n()));
    aux.edge_first_aux.assign(edges.size(), -1);
    double w = ell.total_weight;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int pieces = 1;
        if (w > 0)
            pieces = std::max(
                1, static_cast<int>(std::ceil(g.m() * ell.lengths[i] / w)));
        Vertex prev = u;
        for (int k = 1; k < pieces; ++k) {
            int node = next++;
            aux.adj.emplace_back();
            if (k == 1) aux.edge_first_aux[i] = node;
            aux.adj[prev].push_back(node);
            aux.adj[node].push_back(prev);
            prev = node;
        }
        aux.adj[prev].push_back(v);
        aux.adj[v].push_back(prev);
    }
    return aux;
}

} // namespace

std::vector<VertexSet> region_grow_partition(const Graph& g, const LengthFunction& ell,
                                             double delta, bool singleton_guard) {
    require(delta > 0, errc::bad_params, "delta must be positive");
    int n = g.n();
    double w = ell.total_weight;
    double logn = Params::log2n(n);
    if (w <= 0) return {full_vertex_set(n)}; // zero lengths: diameter 0
    if (singleton_guard && delta < 8.0 * w * logn / g.m()) {
        std::vector<VertexSet> singles;
        singles.reserve(n);
        for (Vertex v = 0; v < n; ++v) singles.push_back({v});
        return singles;
    }

    AuxGraph aux = build_subdivided(g, ell);
    int n_aux = static_cast<int>(aux.adj.size());
    double eps = 2.0 * w * std::log(static_cast<double>(std::max(2, n))) / (delta * g.m());

    std::vector<int> assign(static_cast<size_t>(n_aux), -1);
    int comp_id = 0;
    std::vector<VertexSet> components;

    auto count_induced_edges = [&](const std::vector<char>& in_ball) {
        long long cnt = 0;
        for (int v = 0; v < n_aux; ++v) {
            if (!in_ball[v]) continue;
            for (int u : aux.adj[v])
                if (in_ball[u] && u > v) ++cnt;
        }
        return cnt;
    };

    while (true) {
        Vertex center = -1;
        for (Vertex v = 0; v < n; ++v)
            if (assign[v] < 0) {
                center = v;
                break;
            }
        if (center < 0) break;

        // grow B_j until C_{j+1} < (1+eps) C_j
        std::vector<char> in_ball(static_cast<size_t>(n_aux), 0);
        std::vector<int> frontier{center};
        in_ball[center] = 1;
        double base = 2.0 * g.m() / static_cast<double>(n);
        double c_prev = base + count_induced_edges(in_ball);
        std::vector<int> ball_nodes{center};
        while (true) {
            std::vector<int> next;
            for (int u : frontier)
                for (int v : aux.adj[u])
                    if (assign[v] < 0 && !in_ball[v]) {
                        in_ball[v] = 1;
                        next.push_back(v);
                    }
            if (next.empty()) break;
            double c_next = base + count_induced_edges(in_ball);
            ball_nodes.insert(ball_nodes.end(), next.begin(), next.end());
            if (c_next < (1.0 + eps) * c_prev) {
                // roll the last layer back: the ball stops at the previous layer
                for (int v : next) in_ball[v] = 0;
                ball_nodes.resize(ball_nodes.size() - next.size());
                break;
            }
            c_prev = c_next;
            frontier = std::move(next);
        }
        VertexSet comp;
        for (int v : ball_nodes) {
            assign[v] = comp_id;
            if (v < n) comp.push_back(v);
        }
        if (!comp.empty()) components.push_back(set_sorted(std::move(comp)));
        ++comp_id;
    }
    return components;
}

CoreOrCutLD low_diameter_core_or_cut(const Graph& g, double alpha, const LengthFunction& ell,
                                     const Params& params, double delta_override,
                                     bool singleton_guard) {
    CoreOrCutLD out;
    int n = g.n();
    double wbound = params.wstar(alpha, n);
    require(ell.total_weight <= wbound * (1.0 + 1e-9), errc::precondition_violated,
            "length function exceeds the W* budget");

    double delta = delta_override > 0 ? delta_override : params.rg_delta(n);
    auto comps = region_grow_partition(g, ell, delta, singleton_guard);
    for (const auto& c : comps)
        if (3 * c.size() >= 2 * static_cast<size_t>(n)) {
            out.core = c;
            return out;
        }

    std::vector<long long> sizes;
    sizes.reserve(comps.size());
    for (const auto& c : comps) sizes.push_back(static_cast<long long>(c.size()));
    std::pair<std::vector<int>, std::vector<int>> split;
    try {
        split = balanced_weight_partition(sizes);
    } catch (const error&) {
        out.inconclusive = true;
        out.diagnostics = "a component dominates but falls short of the core size";
        return out;
    }
    VertexSet s;
    for (int i : split.first) s = set_union(s, comps[i]);
    if (s.empty() || static_cast<int>(s.size()) == n) {
        out.inconclusive = true;
        out.diagnostics = "degenerate balanced partition";
        return out;
    }
    Cut c = sparsity(g, s);
    if (c.sparsity < alpha) {
        out.cut = c;
    } else {
        out.inconclusive = true;
        out.diagnostics = "balanced component cut failed exact sparsity verification";
    }
    return out;
}

std::vector<double> hop_bounded_distances(const Graph& g, const LengthFunction& ell,
                                          const VertexSet& sources, int hop_limit) {
    int n = g.n();
    std::map<Edge, double> len;
    std::vector<Edge> edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) len[edges[i]] = ell.lengths[i];

    std::vector<double> dist(static_cast<size_t>(n), std::numeric_limits<double>::infinity());
    for (Vertex v : sources) dist[v] = 0;
    // Bellman-Ford over hops with early stop
    for (int it = 0; it < hop_limit; ++it) {
        bool changed = false;
        std::vector<double> next = dist;
        for (const auto& [u, v] : edges) {
            double luv = len[make_edge(u, v)];
            if (dist[u] + luv < next[v] - 1e-18) {
                next[v] = dist[u] + luv;
                changed = true;
            }
            if (dist[v] + luv < next[u] - 1e-18) {
                next[u] = dist[v] + luv;
                changed = true;
            }
        }
        dist.swap(next);
        if (!changed) break;
    }
    return dist;
}

Cut far_set_sparse_cut(const Graph& g, double alpha, const LengthFunction& ell, int hop_limit,
                       const VertexSet& t) {
    int n = g.n();
    require(3 * static_cast<int>(t.size()) >= 2 * n, errc::precondition_violated,
            "core T must hold at least 2n/3 vertices");
    (void)hop_limit;

    AuxGraph aux = build_subdivided(g, ell);
    int n_aux = static_cast<int>(aux.adj.size());
    std::vector<char> in_layer(static_cast<size_t>(n_aux), 0);
    for (Vertex v : t) in_layer[v] = 1;

    auto layer_stats = [&]() {
        long long c_orig = 0, c_aux = 0; // boundary arcs by outside-endpoint kind
        for (int u = 0; u < n_aux; ++u) {
            if (!in_layer[u]) continue;
            for (int v : aux.adj[u]) {
                if (in_layer[v]) continue;
                if (v < n)
                    ++c_orig;
                else
                    ++c_aux;
            }
        }
        return std::make_pair(c_orig, c_aux);
    };

    int guard = n_aux + 2;
    while (guard-- > 0) {
        long long n_i = 0;
        std::vector<char> in_v(static_cast<size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v)
            if (!in_layer[v]) ++n_i;
            else in_v[v] = 1;
        auto [c_orig, c_aux] = layer_stats();
        long long c_i = c_orig + c_aux;
        if (n_i == 0) break; // everything absorbed; no layer triggered
        if (static_cast<double>(c_i) < alpha * static_cast<double>(n_i)) {
            VertexSet side;
            for (Vertex v = 0; v < n; ++v)
                if (in_v[v]) side.push_back(v);
            Cut cut = sparsity(g, side);
            require(cut.sparsity < alpha, errc::internal,
                    "layer cut fails exact sparsity verification");
            return cut;
        }
        // expand the layer
        std::vector<int> additions;
        if (c_orig >= (c_i + 1) / 2) {
            for (int u = 0; u < n_aux; ++u) {
                if (!in_layer[u]) continue;
                for (int v : aux.adj[u])
                    if (!in_layer[v]) additions.push_back(v);
            }
        } else {
            for (int u = 0; u < n_aux; ++u) {
                if (!in_layer[u]) continue;
                for (int v : aux.adj[u])
                    if (!in_layer[v] && v >= n) additions.push_back(v);
            }
        }
        if (additions.empty()) break;
        for (int v : additions) in_layer[v] = 1;
    }
    fail(errc::no_layer_cut, "every layer expanded; far-set precondition violated");
}

// --- congested matching routing and LLL ---

RoutingOutcome route_matching_congested(const Graph& g, const Matching& m, double alpha,
                                        RngStream rng, const Params& params) {
    m.validate();
    RoutingOutcome out;
    FlowOrCut foc = hop_bounded_flow_or_cut(g, alpha, params);
    if (foc.tag == FlowOrCut::Tag::Cut) {
        out.tag = RoutingOutcome::Tag::Cut;
        out.cut = foc.cut;
        out.refuted_alpha = alpha;
        return out;
    }
    if (foc.tag == FlowOrCut::Tag::Inconclusive) {
        out.diagnostics = foc.diagnostics;
        return out;
    }
    const FlowSolution& flow = *foc.flow;
    int n = g.n();
    int d = std::max(1, g.max_degree());
    double eta = params.eta_threshold(alpha, n, d);
    double len_cap = params.path_len_cap(alpha, n, d);

    std::vector<Path> paths;
    std::vector<int> vertex_use(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : m.pairs) {
        // hub vertex x uniform: u routes to x, then x to v, loop-erased
        Vertex x = static_cast<Vertex>(rng.next_below(n));
        Path p1 = flow.tree_path(u, x);
        Path p2 = flow.tree_path(v, x);
        std::reverse(p2.begin(), p2.end());
        Path joined = p1;
        joined.insert(joined.end(), p2.begin() + 1, p2.end());
        // loop erasure
        Path simple;
        std::map<Vertex, size_t> pos;
        for (Vertex vv : joined) {
            auto it = pos.find(vv);
            if (it != pos.end()) {
                while (simple.size() > it->second + 1) {
                    pos.erase(simple.back());
                    simple.pop_back();
                }
                continue;
            }
            pos[vv] = simple.size();
            simple.push_back(vv);
        }
        require(static_cast<double>(simple.size()) <= len_cap + 1, errc::internal,
                "sampled path exceeds the length cap");
        for (Vertex vv : simple) ++vertex_use[vv];
        paths.push_back(std::move(simple));
    }
    int worst = 0;
    for (int u : vertex_use) worst = std::max(worst, u);
    require(static_cast<double>(worst) <= eta, errc::congestion_exceeded,
            "sampled vertex congestion " + std::to_string(worst) + " exceeds eta");
    out.tag = RoutingOutcome::Tag::Paths;
    out.paths = std::move(paths);
    return out;
}

std::vector<Path> lll_make_disjoint(const std::vector<std::vector<Path>>& families, int q,
                                    RngStream rng, const Params& params) {
    require(q >= 1, errc::bad_params, "q must be positive");
    for (const auto& fam : families)
        require(static_cast<int>(fam.size()) == q, errc::bad_params,
                "every family must hold exactly q paths");
    int f = static_cast<int>(families.size());
    if (f == 0) return {};

    std::vector<int> choice(static_cast<size_t>(f));
    for (auto& c : choice) c = static_cast<int>(rng.next_below(q));

    long long cap = static_cast<long long>(
        std::ceil(params.lll_resample_mult * f * std::log(static_cast<double>(f) + 2.0)));
    cap = std::max<long long>(cap, 8);

    auto find_conflict = [&]() -> std::pair<int, int> {
        std::map<Vertex, int> owner;
        for (int i = 0; i < f; ++i) {
            for (Vertex v : families[i][choice[i]]) {
                auto it = owner.find(v);
                if (it != owner.end()) return {it->second, i};
                owner[v] = i;
            }
        }
        return {-1, -1};
    };

    for (long long round = 0; round <= cap; ++round) {
        auto [a, b] = find_conflict();
        if (a < 0) {
            std::vector<Path> out;
            out.reserve(f);
            for (int i = 0; i < f; ++i) out.push_back(families[i][choice[i]]);
            return out;
        }
        choice[a] = static_cast<int>(rng.next_below(q));
        choice[b] = static_cast<int>(rng.next_below(q));
    }

    // report the LLL condition value from the actual intersection structure
    long long events = 0;
    std::vector<long long> touch(static_cast<size_t>(f), 0);
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j)
            for (const Path& p : families[i])
                for (const Path& pp : families[j]) {
                    bool meet = false;
                    for (Vertex v : p)
                        if (std::find(pp.begin(), pp.end(), v) != pp.end()) {
                            meet = true;
                            break;
                        }
                    if (meet) {
                        ++events;
                        ++touch[i];
                        ++touch[j];
                    }
                }
    long long dmax = 0;
    for (long long t : touch) dmax = std::max(dmax, t);
    double ep_d = std::exp(1.0) * (1.0 / (static_cast<double>(q) * q)) *
                  (static_cast<double>(2 * dmax) + 1.0);
    std::ostringstream msg;
    msg << "resample cap " << cap << " exceeded; events=" << events
        << " e*p*(D+1)=" << ep_d << (ep_d > 1.0 ? " (condition violated)" : "");
    fail(errc::resample_budget_exceeded, msg.str());
}

RoutingOutcome route_or_cut(const Graph& g, const std::vector<VertexSet>& families, double alpha,
                            RngStream rng, const Params& params) {
    require(families.size() >= 2 && families.size() % 2 == 0, errc::bad_params,
            "need an even number of terminal families");
    size_t q = families.front().size();
    for (size_t i = 0; i < families.size(); ++i) {
        require(families[i].size() == q && q >= 1, errc::bad_params,
                "families must share one positive size");
        for (size_t j = i + 1; j < families.size(); ++j)
            require(sets_disjoint(families[i], families[j]), errc::bad_params,
                    "families must be disjoint");
    }
    size_t r = families.size() / 2;

    Matching m;
    for (size_t j = 0; j < r; ++j)
        for (size_t k = 0; k < q; ++k) m.pairs.push_back(make_edge(families[j][k], families[j + r][k]));

    RoutingOutcome last;
    for (int attempt = 0; attempt <= params.reseed_budget; ++attempt) {
        RngStream sub = rng.fork("route", attempt);
        try {
            RoutingOutcome routed =
                route_matching_congested(g, m, alpha, sub.fork("congested"), params);
            if (routed.tag != RoutingOutcome::Tag::Paths) return routed;

            // bucket the routed paths back into their families
            std::vector<std::vector<Path>> buckets(r);
            size_t idx = 0;
            for (size_t j = 0; j < r; ++j)
                for (size_t k = 0; k < q; ++k) buckets[j].push_back(routed.paths[idx++]);
            auto picked =
                lll_make_disjoint(buckets, static_cast<int>(q), sub.fork("lll"), params);
            RoutingOutcome out;
            out.tag = RoutingOutcome::Tag::Paths;
            out.paths = std::move(picked);
            return out;
        } catch (const error& e) {
            if (e.code() != errc::congestion_exceeded &&
                e.code() != errc::resample_budget_exceeded)
                throw;
            last.tag = RoutingOutcome::Tag::Inconclusive;
            last.diagnostics = e.what();
        }
    }
    return last;
}

std::string routing_outcome_json(const RoutingOutcome& out) {
    nlohmann::ordered_json doc;
    switch (out.tag) {
        case RoutingOutcome::Tag::Paths: doc["tag"] = "paths"; break;
        case RoutingOutcome::Tag::Cut: doc["tag"] = "cut"; break;
        case RoutingOutcome::Tag::Inconclusive: doc["tag"] = "inconclusive"; break;
    }
    if (out.tag == RoutingOutcome::Tag::Paths) {
        auto arr = nlohmann::ordered_json::array();
        for (const Path& p : out.paths) arr.push_back(p);
        doc["paths"] = arr;
    }
    if (out.cut) {
        doc["cut"] = {{"side_s", out.cut->side_s},
                      {"side_t", out.cut->side_t},
                      {"crossing", out.cut->crossing},
                      {"sparsity", out.cut->sparsity}};
        doc["refuted_alpha"] = out.refuted_alpha;
    }
    if (!out.diagnostics.empty()) doc["diagnostics"] = out.diagnostics;
    return doc.dump(2);
}

} // namespace minex
