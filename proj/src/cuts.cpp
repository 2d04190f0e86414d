#include "minex/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "minex/maxflow.hpp"
#include "minex/rng.hpp"

namespace minex {

namespace {

struct FiedlerResult {
    std::vector<double> vec;
    double lambda2;
};

double rayleigh_laplacian(const Graph& g, const std::vector<double>& x) {
    double num = 0.0, den = 0.0;
    for (const auto& [u, v] : g.edges()) {
        double dxy = x[u] - x[v];
        num += dxy * dxy;
    }
    for (double xv : x) den += xv * xv;
    return den > 0 ? num / den : 0.0;
}

// Power iteration on (2d+2)I - L with the all-ones direction deflated;
// converges to the Fiedler pair of the Laplacian.
FiedlerResult fiedler_vector(const Graph& g, const Params& params) {
    int n = g.n();
    double shift = 2.0 * g.max_degree() + 2.0;
    RngStream rng(0x5eedf1ed, "fiedler"); // fixed stream: result depends on g only
    std::vector<double> x(static_cast<size_t>(n));
    for (auto& xv : x) xv = rng.next_double() - 0.5;

    auto project = [&](std::vector<double>& v) {
        double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
        for (auto& vv : v) vv -= mean;
    };
    auto normalize = [&](std::vector<double>& v) {
        double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (norm < 1e-300) {
            v.assign(static_cast<size_t>(n), 0.0);
            if (n > 1) { v[0] = 0.7071067811865475; v[1] = -0.7071067811865475; }
            return;
        }
        for (auto& vv : v) vv /= norm;
    };

    project(x);
    normalize(x);
    int cap = std::max(64, static_cast<int>(params.spectral_iter_factor * n * Params::log2n(n)));
    double prev = rayleigh_laplacian(g, x);
    std::vector<double> y(static_cast<size_t>(n));
    for (int it = 0; it < cap; ++it) {
        for (Vertex v = 0; v < n; ++v) {
            double acc = (shift - g.degree(v)) * x[v];
            for (Vertex w : g.neighbors(v)) acc += x[w];
            y[v] = acc;
        }
        project(y);
        normalize(y);
        x.swap(y);
        double cur = rayleigh_laplacian(g, x);
        if (std::abs(cur - prev) < params.spectral_tol * std::max(1.0, std::abs(cur)))
            return {x, cur};
        prev = cur;
    }
    double cur = rayleigh_laplacian(g, x);
    if (std::abs(cur - prev) < 1e-4 * std::max(1.0, std::abs(cur))) return {x, cur};
    fail(errc::no_convergence, "power iteration did not stabilize within the cap");
}

Cut best_sweep_cut(const Graph& g, const std::vector<double>& fiedler) {
    int n = g.n();
    std::vector<Vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (fiedler[a] != fiedler[b]) return fiedler[a] < fiedler[b];
        return a < b;
    });
    std::vector<char> in_s(static_cast<size_t>(n), 0);
    int crossing = 0;
    double best_sparsity = std::numeric_limits<double>::infinity();
    int best_k = 1, best_crossing = 0;
    for (int k = 0; k + 1 < n; ++k) {
        Vertex v = order[k];
        int inside = 0;
        for (Vertex w : g.neighbors(v)) inside += in_s[w];
        crossing += g.degree(v) - 2 * inside;
        in_s[v] = 1;
        double sp = static_cast<double>(crossing) / std::min(k + 1, n - k - 1);
        if (sp < best_sparsity) {
            best_sparsity = sp;
            best_k = k + 1;
            best_crossing = crossing;
        }
    }
    Cut c;
    c.side_s = set_sorted({order.begin(), order.begin() + best_k});
    c.side_t = complement(n, c.side_s);
    c.crossing = best_crossing;
    c.sparsity = best_sparsity;
    return c;
}

VertexSet map_to_host(const Subgraph& sub, const VertexSet& local) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(sub.to_host[v]);
    return set_sorted(std::move(out));
}

} // namespace

SpectralCut spectral_sparse_cut(const Graph& g, const Params& params) {
    require(g.n() >= 2, errc::bad_params, "spectral_sparse_cut needs n >= 2");
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        Cut c = sparsity(g, comps.front()); // exact component split, lambda2 = 0
        return {c, 0.0, false};
    }
    FiedlerResult f = fiedler_vector(g, params);
    Cut c = best_sweep_cut(g, f.vec);
    return {c, std::max(0.0, f.lambda2), true};
}

ExpansionEstimate estimate_expansion(const Graph& g, const Params& params) {
    ExpansionEstimate est;
    if (g.n() < 2) {
        est.lower_bound = std::numeric_limits<double>::infinity();
        est.lambda2 = std::numeric_limits<double>::infinity();
        return est;
    }
    SpectralCut sc = spectral_sparse_cut(g, params);
    est.lambda2 = sc.lambda2;
    est.lower_bound = sc.connected ? spectral_lower_bound(sc.lambda2) : 0.0;
    est.witness_cut = sc.cut;
    est.connected = sc.connected;
    return est;
}

std::pair<std::vector<int>, std::vector<int>> balanced_weight_partition(
    const std::vector<long long>& xs) {
    long long total = 0;
    for (long long x : xs) {
        require(x >= 0, errc::precondition_violated, "weights must be nonnegative");
        total += x;
    }
    for (size_t i = 0; i < xs.size(); ++i)
        require(4 * xs[i] <= 3 * total, errc::precondition_violated,
                "weight " + std::to_string(i) + " exceeds 3N/4");

    std::vector<int> idx(xs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return xs[a] > xs[b]; });

    std::vector<int> a, b;
    long long wa = 0, wb = 0;
    for (int i : idx) {
        if (wa <= wb) {
            a.push_back(i);
            wa += xs[i];
        } else {
            b.push_back(i);
            wb += xs[i];
        }
    }
    return {a, b};
}

Cut connectify_cut(const Graph& g, const Cut& c) {
    require(is_connected(g), errc::not_connected, "connectify_cut needs a connected host");
    VertexSet x = c.side_s, y = c.side_t;
    double sparsity_in = sparsity(g, x).sparsity;

    // moves one component of `from` across, chosen with boundary density at
    // least the side's average (the averaging argument guarantees one exists)
    auto move_component = [&](VertexSet& from, VertexSet& to) {
        auto sub = induced_subgraph(g, from);
        auto comps = connected_components(sub.graph);
        if (comps.size() <= 1) return false;
        int total_boundary = sparsity(g, from).crossing;
        double rho = static_cast<double>(total_boundary) / from.size();
        VertexSet best;
        double best_ratio = -1.0;
        for (const auto& comp : comps) {
            VertexSet host_comp = map_to_host(sub, comp);
            int boundary = 0;
            for (Vertex v : host_comp)
                for (Vertex w : g.neighbors(v))
                    if (set_contains(to, w)) ++boundary;
            double ratio = static_cast<double>(boundary) / host_comp.size();
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best = std::move(host_comp);
            }
        }
        require(best_ratio >= rho - 1e-12, errc::internal, "component averaging failed");
        from = set_minus(from, best);
        to = set_union(to, best);
        return true;
    };

    while (true) {
        bool x_smaller = x.size() <= y.size();
        VertexSet& small = x_smaller ? x : y;
        VertexSet& large = x_smaller ? y : x;
        if (move_component(small, large)) continue; // Case 1: smaller side split
        if (move_component(large, small)) continue; // Case 2
        break;
    }
    Cut out = sparsity(g, x);
    require(out.sparsity <= sparsity_in + 1e-12, errc::internal, "connectify raised sparsity");
    return out;
}

PruneResult prune_to_expander(const Graph& g, const std::vector<Edge>& removed_edges,
                              double target_alpha, const Params& params) {
    require(target_alpha > 0, errc::bad_params, "target_alpha must be positive");
    std::vector<Edge> banned = removed_edges;
    for (auto& e : banned) e = make_edge(e.first, e.second);
    std::sort(banned.begin(), banned.end());

    VertexSet kept = full_vertex_set(g.n());
    double threshold = target_alpha / 4.0;
    double certified = 0.0;

    auto build_current = [&](const VertexSet& vs) {
        auto sub = induced_subgraph(g, vs);
        GraphBuilder b(sub.graph.n());
        for (const auto& [u, v] : sub.graph.edges()) {
            Edge host = make_edge(sub.to_host[u], sub.to_host[v]);
            if (!std::binary_search(banned.begin(), banned.end(), host)) b.add_edge(u, v);
        }
        Subgraph out;
        out.graph = b.build();
        out.to_host = sub.to_host;
        out.from_host = sub.from_host;
        return out;
    };

    Subgraph cur = build_current(kept);
    while (true) {
        if (kept.empty()) fail(errc::exhausted, "pruning emptied the graph");
        if (cur.graph.n() == 1) {
            certified = std::numeric_limits<double>::infinity();
            break;
        }
        SpectralCut sc = spectral_sparse_cut(cur.graph, params);
        if (sc.connected && sc.cut.sparsity >= threshold) {
            certified = spectral_lower_bound(sc.lambda2);
            break;
        }
        const VertexSet& smaller =
            sc.cut.side_s.size() <= sc.cut.side_t.size() ? sc.cut.side_s : sc.cut.side_t;
        kept = set_minus(kept, map_to_host(cur, smaller));
        if (kept.empty()) fail(errc::exhausted, "pruning emptied the graph");
        cur = build_current(kept);
    }

    PruneResult out;
    out.kept = kept;
    out.removed_vertices = complement(g.n(), kept);
    out.subgraph = cur.graph;
    out.to_host = cur.to_host;
    out.certified = certified;
    double bound = 4.0 * static_cast<double>(removed_edges.size()) / target_alpha;
    out.size_bound_met = static_cast<double>(out.removed_vertices.size()) <= bound + 1e-9;
    return out;
}

CoreOrCut expander_or_sparse_cut_half(const Graph& g, double beta, const Params& params) {
    require(is_connected(g), errc::not_connected, "expander_or_sparse_cut_half needs connected g");
    int n = g.n();
    CoreOrCut out;

    // initial balanced cut: id split (the paper leaves the choice arbitrary)
    VertexSet u1, u2;
    for (Vertex v = 0; v < n; ++v) (v < (n + 1) / 2 ? u1 : u2).push_back(v);

    int guard = g.m() + 2;
    while (guard-- > 0) {
        if (u1.size() < u2.size()) std::swap(u1, u2);
        Cut cur = sparsity(g, u1);
        if (cur.sparsity < beta) {
            out.cut = cur;
            return out;
        }
        auto sub = induced_subgraph(g, u1);
        if (sub.graph.n() < 2) { // no internal cuts exist
            out.core = CertifiedSet{u1, std::numeric_limits<double>::infinity()};
            return out;
        }
        SpectralCut sc = spectral_sparse_cut(sub.graph, params);
        if (sc.connected && sc.cut.sparsity >= beta / 4.0) {
            out.core = CertifiedSet{u1, spectral_lower_bound(sc.lambda2)};
            return out;
        }
        VertexSet s_local = sc.cut.side_s, t_local = sc.cut.side_t;
        if (t_local.size() > s_local.size()) std::swap(s_local, t_local);
        VertexSet t_host = map_to_host(sub, t_local);

        int t_to_u2 = 0;
        for (Vertex v : t_host)
            for (Vertex w : g.neighbors(v))
                if (set_contains(u2, w)) ++t_to_u2;

        if (static_cast<double>(t_to_u2) <= beta * t_host.size() / 2.0) {
            Cut c = sparsity(g, t_host);
            require(c.sparsity < beta, errc::internal, "case-split cut is not sparse");
            out.cut = c;
            return out;
        }
        // recombine: (S, T u U'') stays balanced with strictly fewer crossing edges
        u1 = set_minus(u1, t_host);
        u2 = set_union(u2, t_host);
    }
    fail(errc::recursion_budget, "balanced-cut improvement loop exceeded its budget");
}

CoreOrCut expander_or_balanced_cut(const Graph& g, double beta, const Params& params) {
    int n = g.n();
    CoreOrCut out;
    std::vector<VertexSet> pieces{full_vertex_set(n)};

    while (true) {
        auto big = std::find_if(pieces.begin(), pieces.end(), [&](const VertexSet& p) {
            return 4 * p.size() > 3 * static_cast<size_t>(n);
        });
        if (big == pieces.end()) break;
        VertexSet piece = *big;
        pieces.erase(big);
        auto sub = induced_subgraph(g, piece);
        auto comps = connected_components(sub.graph);
        if (comps.size() > 1) {
            // components count as free cuts; keep shattering
            for (const auto& comp : comps) pieces.push_back(map_to_host(sub, comp));
            continue;
        }
        CoreOrCut inner = expander_or_sparse_cut_half(sub.graph, beta / 4.0, params);
        if (inner.is_core()) {
            out.core = CertifiedSet{map_to_host(sub, inner.core->vertices), inner.core->certified};
            return out;
        }
        pieces.push_back(map_to_host(sub, inner.cut->side_s));
        pieces.push_back(map_to_host(sub, inner.cut->side_t));
    }

    std::vector<long long> sizes;
    sizes.reserve(pieces.size());
    for (const auto& p : pieces) sizes.push_back(static_cast<long long>(p.size()));
    auto [ia, ib] = balanced_weight_partition(sizes);
    VertexSet s;
    for (int i : ia) s = set_union(s, pieces[i]);
    Cut c = sparsity(g, s);
    require(c.sparsity < beta, errc::internal,
            "charging bound failed to produce a sparse balanced cut");
    out.cut = c;
    return out;
}

namespace {

struct MidSearch {
    const Graph& host;
    const Params& params;
    int n_star;
    long long steps = 0;
    long long budget = 0;

    struct Outcome {
        std::optional<CertifiedSet> core; // host ids
        std::optional<Cut> cut;           // local ids of the queried subgraph
    };

    int level_of(int n_sub) const {
        if (3 * n_sub <= 4 * n_star) return 0;
        return static_cast<int>(std::ceil(std::log(static_cast<double>(n_sub) / n_star) /
                                          std::log(4.0 / 3.0)));
    }

    bool size_ok(size_t sz) const {
        return 32 * sz >= static_cast<size_t>(n_star) && sz <= static_cast<size_t>(n_star);
    }

    Outcome run(const Subgraph& sub, double beta) {
        if (++steps > budget)
            fail(errc::recursion_budget, "mid-expander recursion exceeded its step budget");
        const Graph& gg = sub.graph;
        int n_sub = gg.n();
        Outcome out;

        if (level_of(n_sub) == 0) {
            CoreOrCut res = expander_or_balanced_cut(gg, beta, params);
            if (res.is_core()) {
                VertexSet host_ids = map_to_host(sub, res.core->vertices);
                if (size_ok(host_ids.size())) {
                    out.core = CertifiedSet{host_ids, res.core->certified};
                    return out;
                }
                // oversized core: shrink by recursing into it
                auto inner = induced_subgraph(host, host_ids);
                return run(inner, beta);
            }
            out.cut = res.cut;
            return out;
        }

        // level >= 1: maintain a balanced cut of the subgraph and shave it
        VertexSet u1, u2;
        for (Vertex v = 0; v < n_sub; ++v) (v < (n_sub + 1) / 2 ? u1 : u2).push_back(v);
        int stall_guard = 32 * std::max(1, gg.max_degree()) + 64;

        while (stall_guard-- > 0) {
            if (u1.size() < u2.size()) std::swap(u1, u2);
            Cut cur = sparsity(gg, u1);
            // balance keeps min side >= n/4, so few crossings also means sparse
            if (cur.sparsity < beta || static_cast<double>(cur.crossing) < beta * n_sub / 4.0) {
                out.cut = cur;
                return out;
            }
            // one phase: shatter G[U'] into pieces of at most |U'|/2 vertices
            std::vector<VertexSet> pieces{u1}; // local ids
            while (true) {
                auto big = std::find_if(pieces.begin(), pieces.end(), [&](const VertexSet& p) {
                    return 2 * p.size() > u1.size();
                });
                if (big == pieces.end()) break;
                VertexSet piece = *big;
                pieces.erase(big);
                VertexSet piece_host;
                piece_host.reserve(piece.size());
                for (Vertex v : piece) piece_host.push_back(sub.to_host[v]);
                auto piece_sub = induced_subgraph(host, set_sorted(std::move(piece_host)));
                auto comps = connected_components(piece_sub.graph);
                if (comps.size() > 1) {
                    for (const auto& comp : comps) {
                        VertexSet local;
                        for (Vertex v : comp)
                            local.push_back(sub.from_host[piece_sub.to_host[v]]);
                        pieces.push_back(set_sorted(std::move(local)));
                    }
                    continue;
                }
                Outcome deeper = run(piece_sub, beta / 32.0);
                if (deeper.core) return deeper;
                VertexSet s_local, t_local;
                for (Vertex v : deeper.cut->side_s)
                    s_local.push_back(sub.from_host[piece_sub.to_host[v]]);
                for (Vertex v : deeper.cut->side_t)
                    t_local.push_back(sub.from_host[piece_sub.to_host[v]]);
                pieces.push_back(set_sorted(std::move(s_local)));
                pieces.push_back(set_sorted(std::move(t_local)));
            }
            // move the piece with the most edges into U'' across the cut
            size_t best_idx = 0;
            int best_edges = -1;
            for (size_t i = 0; i < pieces.size(); ++i) {
                int cnt = 0;
                for (Vertex v : pieces[i])
                    for (Vertex w : gg.neighbors(v))
                        if (set_contains(u2, w)) ++cnt;
                if (cnt > best_edges) {
                    best_edges = cnt;
                    best_idx = i;
                }
            }
            VertexSet moved = pieces[best_idx];
            VertexSet new_u1 = set_minus(u1, moved);
            VertexSet new_u2 = set_union(u2, moved);
            if (new_u1.empty() || new_u2.empty()) break;
            Cut next = sparsity(gg, new_u1);
            if (next.crossing >= cur.crossing) break; // stalled; give up this route
            u1 = std::move(new_u1);
            u2 = std::move(new_u2);
        }
        fail(errc::recursion_budget, "phase loop stalled without certificate or cut");
    }
};

} // namespace

CertifiedSet find_mid_expander(const Graph& g, double alpha, const Params& params) {
    require(alpha > 0 && alpha <= 1, errc::bad_params, "alpha must lie in (0,1]");
    int n = g.n();
    int d = std::max(1, g.max_degree());
    int n_star;
    if (params.mid_nstar_override > 0) {
        n_star = params.mid_nstar_override;
    } else {
        n_star = static_cast<int>(std::ceil(alpha * n / (8.0 * d)));
        require(n_star >= 32, errc::parameter_infeasible,
                "n* = " + std::to_string(n_star) + " < 32 at paper constants; override needed");
    }
    require(n_star >= 1 && n_star <= n, errc::parameter_infeasible, "n* out of range");

    MidSearch search{g, params, n_star};
    int top_level = search.level_of(n);
    search.budget = 10000 + static_cast<long long>(n) * (top_level + 1) * 64;

    Subgraph whole = induced_subgraph(g, full_vertex_set(n));
    auto outcome = search.run(whole, alpha);
    if (outcome.core) return *outcome.core;
    // a balanced cut of g itself with sparsity < alpha refutes the assertion
    Cut refute = sparsity(g, outcome.cut->side_s);
    require(refute.sparsity < alpha, errc::recursion_budget,
            "search ended with a cut that does not refute alpha");
    throw cut_found(refute, alpha);
}

SplitResult split_expander(const Graph& g, double alpha, const Params& params) {
    CertifiedSet v1 = find_mid_expander(g, alpha, params);

    std::vector<Edge> boundary;
    for (Vertex v : v1.vertices)
        for (Vertex w : g.neighbors(v))
            if (!set_contains(v1.vertices, w)) boundary.push_back(make_edge(v, w));

    PruneResult pruned = prune_to_expander(g, boundary, alpha, params);
    VertexSet v2 = set_minus(pruned.kept, v1.vertices);
    require(!v2.empty(), errc::internal, "pruning consumed the complement side");

    // min edge cut separating v1 from v2
    int s = g.n(), t = g.n() + 1;
    MaxFlow mf(g.n() + 2);
    const int inf_cap = g.m() + 1;
    for (const auto& [u, v] : g.edges()) {
        mf.add_edge(u, v, 1);
        mf.add_edge(v, u, 1);
    }
    for (Vertex v : v1.vertices) mf.add_edge(s, v, inf_cap);
    for (Vertex v : v2) mf.add_edge(v, t, inf_cap);
    mf.max_flow(s, t);
    auto side = mf.min_cut_side();

    SplitResult out;
    for (Vertex v = 0; v < g.n(); ++v) (side[v] ? out.side1 : out.side2).push_back(v);
    require(!out.side1.empty() && !out.side2.empty(), errc::internal, "degenerate min cut");

    auto sub1 = induced_subgraph(g, out.side1);
    auto sub2 = induced_subgraph(g, out.side2);
    require(is_connected(sub1.graph) && is_connected(sub2.graph), errc::internal,
            "split sides must be connected");
    out.cert1 = estimate_expansion(sub1.graph, params).lower_bound;
    out.cert2 = estimate_expansion(sub2.graph, params).lower_bound;
    return out;
}

} // namespace minex
