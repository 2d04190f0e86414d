#include "minex/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "minex/maxflow.hpp"

namespace minex {

const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::ImageDisconnected: return "ImageDisconnected";
        case ViolationKind::ImagesOverlap: return "ImagesOverlap";
        case ViolationKind::PathMiswired: return "PathMiswired";
        case ViolationKind::PathsIntersect: return "PathsIntersect";
        case ViolationKind::NotAPath: return "NotAPath";
    }
    return "Unknown";
}

std::vector<Violation> check_model(const Graph& g, const Graph& h, const MinorModel& m) {
    std::vector<Violation> out;
    require(static_cast<int>(m.vertex_images.size()) == h.n(), errc::missing_element,
            "model has wrong number of vertex images");

    // images: nonempty, in range, connected, disjoint
    std::vector<int> owner(static_cast<size_t>(g.n()), -1);
    for (Vertex u = 0; u < h.n(); ++u) {
        const VertexSet& img = m.vertex_images[u];
        if (img.empty()) {
            out.push_back({ViolationKind::ImageDisconnected, {u}, "empty image"});
            continue;
        }
        for (Vertex x : img) {
            require(g.has_vertex(x), errc::missing_element, "image references unknown vertex");
            if (owner[x] >= 0)
                out.push_back({ViolationKind::ImagesOverlap, {owner[x], u, x},
                               "vertex shared by two images"});
            owner[x] = u;
        }
        if (!is_connected_subset(g, img))
            out.push_back({ViolationKind::ImageDisconnected, {u}, "induced image disconnected"});
    }

    // edge paths: actual simple paths, wired to the right images
    std::map<Vertex, std::vector<Edge>> interior_use; // g-vertex -> pattern edges using it inside
    std::vector<Edge> h_edges = h.edges();
    for (const Edge& e : h_edges) {
        auto it = m.edge_images.find(e);
        if (it == m.edge_images.end()) {
            out.push_back({ViolationKind::PathMiswired, {e.first, e.second}, "missing edge path"});
            continue;
        }
        const Path& p = it->second;
        if (p.empty()) {
            out.push_back({ViolationKind::NotAPath, {e.first, e.second}, "empty path"});
            continue;
        }
        bool broken = false;
        std::set<Vertex> seen;
        for (size_t i = 0; i < p.size(); ++i) {
            if (!g.has_vertex(p[i]) || !seen.insert(p[i]).second) {
                broken = true;
                break;
            }
            if (i > 0 && !g.has_edge(p[i - 1], p[i])) {
                broken = true;
                break;
            }
        }
        if (broken) {
            out.push_back({ViolationKind::NotAPath, {e.first, e.second},
                           "not a simple path of host edges"});
            continue;
        }
        const VertexSet& xu = m.vertex_images[e.first];
        const VertexSet& xv = m.vertex_images[e.second];
        bool fwd = set_contains(xu, p.front()) && set_contains(xv, p.back());
        bool bwd = set_contains(xv, p.front()) && set_contains(xu, p.back());
        if (!fwd && !bwd)
            out.push_back({ViolationKind::PathMiswired, {e.first, e.second},
                           "endpoints not in the two images"});
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (owner[p[i]] >= 0)
                out.push_back({ViolationKind::PathsIntersect, {e.first, e.second, p[i]},
                               "interior vertex lies in an image"});
            interior_use[p[i]].push_back(e);
        }
    }

    // internal disjointness across paths: a shared vertex must be an endpoint
    // of both paths; interior sharing is a violation
    for (auto& [x, users] : interior_use) {
        if (users.size() > 1)
            out.push_back({ViolationKind::PathsIntersect,
                           {users[0].first, users[0].second, users[1].first, users[1].second, x},
                           "two paths share an interior vertex"});
    }
    // also: an interior vertex of one path must not be an endpoint of another
    for (const Edge& e : h_edges) {
        auto it = m.edge_images.find(e);
        if (it == m.edge_images.end() || it->second.size() < 2) continue;
        for (Vertex endpoint : {it->second.front(), it->second.back()}) {
            auto uit = interior_use.find(endpoint);
            if (uit != interior_use.end())
                for (const Edge& other : uit->second)
                    if (other != e)
                        out.push_back({ViolationKind::PathsIntersect,
                                       {e.first, e.second, other.first, other.second, endpoint},
                                       "path endpoint interior to another path"});
        }
    }
    return out;
}

MinorModel identity_model(const Graph& g) {
    MinorModel m;
    m.vertex_images.resize(static_cast<size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) m.vertex_images[v] = {v};
    for (const Edge& e : g.edges()) m.edge_images[e] = {e.first, e.second};
    return m;
}

namespace {

// Walks inside the (connected) image `img` of the outer model from vertex
// `from` to vertex `to`, both in img.
Path walk_within(const Graph& host, const VertexSet& img, Vertex from, Vertex to) {
    if (from == to) return {from};
    auto sub = induced_subgraph(host, img);
    Path local = bfs_path(sub.graph, sub.from_host[from], sub.from_host[to]);
    require(!local.empty(), errc::internal, "image walk failed (image disconnected?)");
    Path out;
    for (Vertex v : local) out.push_back(sub.to_host[v]);
    return out;
}

} // namespace

MinorModel compose_models(const Graph& host_c, const MinorModel& b_in_c, const Graph& graph_b,
                          const MinorModel& a_in_b) {
    MinorModel out;
    out.vertex_images.resize(a_in_b.vertex_images.size());

    // image of an A-vertex u: C-images of all B-vertices in X_u, plus the
    // C-paths of B-edges internal to X_u (needed for connectivity)
    for (size_t u = 0; u < a_in_b.vertex_images.size(); ++u) {
        std::vector<Vertex> acc;
        const VertexSet& xu = a_in_b.vertex_images[u];
        for (Vertex vb : xu)
            for (Vertex vc : b_in_c.vertex_images[vb]) acc.push_back(vc);
        for (const Edge& be : graph_b.edges()) {
            if (set_contains(xu, be.first) && set_contains(xu, be.second)) {
                const Path& pc = b_in_c.path_of(be.first, be.second);
                for (Vertex vc : pc) acc.push_back(vc);
            }
        }
        out.vertex_images[u] = set_sorted(std::move(acc));
    }

    // edge path: expand the B-path edge by edge; crossing a B-vertex image
    // requires walking within that image between entry and exit points
    for (const auto& [ae, bpath] : a_in_b.edge_images) {
        Path full;
        auto append = [&full](const Path& piece) {
            for (Vertex v : piece) {
                if (!full.empty() && full.back() == v) continue;
                full.push_back(v);
            }
        };
        for (size_t i = 0; i + 1 < bpath.size(); ++i) {
            Path pc = b_in_c.path_of(bpath[i], bpath[i + 1]);
            // orient the C-path to leave from the image of bpath[i]
            const VertexSet& img_i = b_in_c.vertex_images[bpath[i]];
            if (!set_contains(img_i, pc.front())) std::reverse(pc.begin(), pc.end());
            if (!full.empty()) {
                // connect through the image of bpath[i]
                append(walk_within(host_c, img_i, full.back(), pc.front()));
            }
            append(pc);
        }
        if (bpath.size() == 1) {
            // degenerate: the B-path is a single vertex inside an image
            full = {b_in_c.vertex_images[bpath[0]].front()};
        }
        // loop-erase accidental revisits introduced by image walks
        Path simple;
        std::map<Vertex, size_t> pos;
        for (Vertex v : full) {
            auto it = pos.find(v);
            if (it != pos.end()) {
                while (simple.size() > it->second + 1) {
                    pos.erase(simple.back());
                    simple.pop_back();
                }
                continue;
            }
            pos[v] = simple.size();
            simple.push_back(v);
        }
        out.edge_images[ae] = std::move(simple);
    }
    return out;
}

// --- exact minor testing by branch-set search ---

namespace {

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;                  // h vertices, most-constrained first
    std::vector<VertexSet> assigned;         // branch sets by h vertex
    std::vector<char> used;                  // g vertices consumed
    bool found = false;

    MinorSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
        order.resize(static_cast<size_t>(h.n()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
        assigned.resize(static_cast<size_t>(h.n()));
        used.assign(static_cast<size_t>(g.n()), 0);
    }

    bool adjacent_to_set(Vertex v, const VertexSet& s) const {
        for (Vertex w : g.neighbors(v))
            if (set_contains(s, w)) return true;
        return false;
    }

    // Enumerates connected subsets S of free vertices with min(S) = root,
    // growing one frontier vertex at a time.
    template <class Accept>
    bool grow(VertexSet& current, std::vector<Vertex> frontier, const Accept& accept) {
        if (accept(current)) return true;
        // try extending by each frontier vertex; skip-duplicates discipline:
        // once a vertex is declined it stays declined in this branch
        for (size_t i = 0; i < frontier.size(); ++i) {
            Vertex v = frontier[i];
            if (used[v] || set_contains(current, v)) continue;
            VertexSet next = set_union(current, {v});
            std::vector<Vertex> next_frontier(frontier.begin() + i + 1, frontier.end());
            for (Vertex w : g.neighbors(v))
                if (!used[w] && w > current.front() && !set_contains(next, w))
                    next_frontier.push_back(w);
            if (static_cast<int>(next.size()) <= g.n() && grow(next, std::move(next_frontier), accept))
                return true;
        }
        return false;
    }

    bool place(size_t idx) {
        if (idx == order.size()) return true;
        int hu = order[idx];
        // candidate roots: any free vertex
        for (Vertex root = 0; root < g.n(); ++root) {
            if (used[root]) continue;
            VertexSet start{root};
            std::vector<Vertex> frontier;
            for (Vertex w : g.neighbors(root))
                if (!used[w] && w > root) frontier.push_back(w);
            bool ok = grow(start, frontier, [&](const VertexSet& s) {
                // all placed h-neighbors must touch s
                for (size_t j = 0; j < idx; ++j) {
                    int hv = order[j];
                    if (!h.has_edge(hu, hv)) continue;
                    bool touched = false;
                    for (Vertex x : s)
                        if (adjacent_to_set(x, assigned[hv])) {
                            touched = true;
                            break;
                        }
                    if (!touched) return false;
                }
                assigned[hu] = s;
                for (Vertex x : s) used[x] = 1;
                bool deeper = place(idx + 1);
                for (Vertex x : s) used[x] = 0;
                if (!deeper) assigned[hu].clear();
                return deeper;
            });
            if (ok) return true;
        }
        return false;
    }
};

} // namespace

bool is_minor_bruteforce(const Graph& g, const Graph& h, int cap) {
    require(g.n() <= cap, errc::too_large,
            "is_minor_bruteforce capped at " + std::to_string(cap) + " host vertices");
    if (h.n() == 0) return true;
    if (h.n() > g.n() || h.m() > g.m()) return false;
    MinorSearch search(g, h);
    return search.place(0);
}

// --- isomorphism and minor counting ---

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> ds(static_cast<size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) ds[v] = g.degree(v);
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                   std::vector<char>& used_b, Vertex next) {
    if (next == a.n()) return true;
    for (Vertex cand = 0; cand < b.n(); ++cand) {
        if (used_b[cand] || a.degree(next) != b.degree(cand)) continue;
        bool ok = true;
        for (Vertex prev = 0; prev < next && ok; ++prev)
            if (a.has_edge(prev, next) != b.has_edge(map_ab[prev], cand)) ok = false;
        if (!ok) continue;
        map_ab[next] = cand;
        used_b[cand] = 1;
        if (iso_backtrack(a, b, map_ab, used_b, next + 1)) return true;
        used_b[cand] = 0;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    std::vector<int> map_ab(static_cast<size_t>(a.n()), -1);
    std::vector<char> used_b(static_cast<size_t>(b.n()), 0);
    return iso_backtrack(a, b, map_ab, used_b, 0);
}

bool is_subgraph_isomorphic(const Graph& g, const Graph& h) {
    if (h.n() > g.n() || h.m() > g.m()) return false;
    std::vector<int> map_h(static_cast<size_t>(h.n()), -1);
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    std::function<bool(Vertex)> rec = [&](Vertex next) -> bool {
        if (next == h.n()) return true;
        for (Vertex cand = 0; cand < g.n(); ++cand) {
            if (used[cand] || g.degree(cand) < h.degree(next)) continue;
            bool ok = true;
            for (Vertex prev = 0; prev < next && ok; ++prev)
                if (h.has_edge(prev, next) && !g.has_edge(map_h[prev], cand)) ok = false;
            if (!ok) continue;
            map_h[next] = cand;
            used[cand] = 1;
            if (rec(next + 1)) return true;
            used[cand] = 0;
        }
        return false;
    };
    return rec(0);
}

namespace {

// Applies (V_del, E_del, E_cont) to g. E-codes: 0 keep, 1 delete, 2 contract.
Graph apply_minor_ops(const Graph& g, unsigned vdel_mask, const std::vector<int>& ecode,
                      const std::vector<Edge>& edges) {
    int n = g.n();
    std::vector<int> rep(static_cast<size_t>(n));
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) { return rep[x] == x ? x : rep[x] = find(rep[x]); };

    std::vector<char> alive(static_cast<size_t>(n), 1);
    for (int v = 0; v < n; ++v)
        if (vdel_mask & (1u << v)) alive[v] = 0;

    for (size_t i = 0; i < edges.size(); ++i) {
        if (ecode[i] != 2) continue;
        auto [u, v] = edges[i];
        if (!alive[u] || !alive[v]) continue; // contraction needs both endpoints
        rep[find(u)] = find(v);
    }
    // compact ids of alive classes
    std::map<int, int> id_of;
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            int r = find(v);
            if (alive[r] && !id_of.count(r)) id_of[r] = static_cast<int>(id_of.size());
        }
    // classes whose representative was deleted still exist if any member alive;
    // normalize: map every alive vertex through its class's first alive member
    std::map<int, int> class_id;
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        int r = find(v);
        if (!class_id.count(r)) class_id[r] = static_cast<int>(class_id.size());
    }
    GraphBuilder b(static_cast<int>(class_id.size()));
    for (size_t i = 0; i < edges.size(); ++i) {
        if (ecode[i] != 0) continue;
        auto [u, v] = edges[i];
        if (!alive[u] || !alive[v]) continue;
        int cu = class_id[find(u)], cv = class_id[find(v)];
        if (cu != cv) b.try_add_edge(cu, cv);
    }
    return b.build();
}

std::string canonical_string(const Graph& g) {
    int n = g.n();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string enc;
        enc.reserve(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                enc.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || enc < best) best = enc;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

} // namespace

long long count_minors(const Graph& g) {
    require(g.n() + g.m() <= 8, errc::too_large, "count_minors capped at size 8");
    std::vector<Edge> edges = g.edges();
    std::set<std::string> canon;
    std::vector<int> ecode(edges.size(), 0);

    unsigned vmask_end = 1u << g.n();
    long long triples = 1;
    for (size_t i = 0; i < edges.size(); ++i) triples *= 3;

    for (unsigned vmask = 0; vmask < vmask_end; ++vmask) {
        for (long long t = 0; t < triples; ++t) {
            long long x = t;
            for (size_t i = 0; i < edges.size(); ++i) {
                ecode[i] = static_cast<int>(x % 3);
                x /= 3;
            }
            Graph minor = apply_minor_ops(g, vmask, ecode, edges);
            canon.insert(canonical_string(minor));
        }
    }
    return static_cast<long long>(canon.size());
}

// --- well-linkedness ---

namespace {

// Max number of A'->A'' paths internally disjoint from A, all internal
// vertices capacity 1.
int well_linked_flow(const Graph& g, const VertexSet& a, const VertexSet& a1,
                     const VertexSet& a2) {
    int n = g.n();
    // node v -> in = 2v, out = 2v+1
    MaxFlow mf(2 * n + 2);
    int s = 2 * n, t = 2 * n + 1;
    std::vector<char> in_a(static_cast<size_t>(n), 0), in_a1(in_a), in_a2(in_a);
    for (Vertex v : a) in_a[v] = 1;
    for (Vertex v : a1) in_a1[v] = 1;
    for (Vertex v : a2) in_a2[v] = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (in_a[v] && !in_a1[v] && !in_a2[v]) continue; // unusable entirely
        mf.add_edge(2 * v, 2 * v + 1, 1);
        if (in_a1[v]) mf.add_edge(s, 2 * v, 1);
        if (in_a2[v]) mf.add_edge(2 * v + 1, t, 1);
    }
    for (const auto& [u, v] : g.edges()) {
        bool u_ok = !in_a[u] || in_a1[u] || in_a2[u];
        bool v_ok = !in_a[v] || in_a1[v] || in_a2[v];
        if (!u_ok || !v_ok) continue;
        mf.add_edge(2 * u + 1, 2 * v, 1);
        mf.add_edge(2 * v + 1, 2 * u, 1);
    }
    return static_cast<int>(mf.max_flow(s, t));
}

bool well_linked_rec(const Graph& g, const VertexSet& a, VertexSet& a1, VertexSet& a2,
                     size_t idx) {
    if (idx == a.size()) {
        if (a1.empty() || a1.size() != a2.size()) return true;
        return well_linked_flow(g, a, a1, a2) == static_cast<int>(a1.size());
    }
    // prune: sizes must be completable to equal
    a1.push_back(a[idx]);
    bool ok = well_linked_rec(g, a, a1, a2, idx + 1);
    a1.pop_back();
    if (!ok) return false;
    a2.push_back(a[idx]);
    ok = well_linked_rec(g, a, a1, a2, idx + 1);
    a2.pop_back();
    if (!ok) return false;
    return well_linked_rec(g, a, a1, a2, idx + 1);
}

} // namespace

bool check_well_linked(const Graph& g, const VertexSet& a) {
    require(a.size() <= 12, errc::too_large, "check_well_linked capped at |A| = 12");
    VertexSet a1, a2;
    return well_linked_rec(g, a, a1, a2, 0);
}

double check_expansion_bruteforce(const Graph& g) {
    require(g.n() <= 20, errc::too_large, "check_expansion_bruteforce capped at n = 20");
    int n = g.n();
    if (n < 2) return std::numeric_limits<double>::infinity();
    std::vector<char> in_s(static_cast<size_t>(n), 0);
    double best = std::numeric_limits<double>::infinity();
    // iterate subsets containing vertex 0 to halve the work
    unsigned end = 1u << (n - 1);
    for (unsigned mask = 0; mask < end; ++mask) {
        unsigned full = (mask << 1) | 1u;
        int size_s = 0;
        for (int v = 0; v < n; ++v) {
            in_s[v] = (full >> v) & 1u;
            size_s += in_s[v];
        }
        if (size_s == n) continue;
        int crossing = count_crossing(g, in_s);
        double sp = static_cast<double>(crossing) / std::min(size_s, n - size_s);
        best = std::min(best, sp);
    }
    return best;
}

} // namespace minex
