#include "minex/grouping.hpp"

#include <algorithm>
#include <numeric>

namespace minex {

namespace {

struct RootedTree {
    std::vector<int> parent;            // -1 at root
    std::vector<std::vector<int>> kids;
    std::vector<int> order;             // preorder
    int root = 0;
};

// Deterministic DFS spanning tree from `start` (sorted adjacency order),
// re-rooted so the root is the lowest-id tree leaf.
RootedTree spanning_tree(const Graph& g, int start) {
    int n = g.n();
    std::vector<int> parent(static_cast<size_t>(n), -2);
    std::vector<int> stack{start};
    parent[start] = -1;
    std::vector<std::pair<int, int>> tree_edges;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto it = g.neighbors(u).rbegin(); it != g.neighbors(u).rend(); ++it) {
            if (parent[*it] == -2) {
                parent[*it] = u;
                tree_edges.emplace_back(u, *it);
                stack.push_back(*it);
            }
        }
    }
    require(std::count(parent.begin(), parent.end(), -2) == 0, errc::not_connected,
            "spanning tree requires a connected graph");

    // tree adjacency, then re-root at the lowest-id leaf
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto& [u, v] : tree_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int root = start;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() <= 1) {
            root = v;
            break;
        }

    RootedTree t;
    t.root = root;
    t.parent.assign(static_cast<size_t>(n), -2);
    t.kids.assign(static_cast<size_t>(n), {});
    t.parent[root] = -1;
    std::vector<int> dfs{root};
    while (!dfs.empty()) {
        int u = dfs.back();
        dfs.pop_back();
        t.order.push_back(u);
        for (int v : adj[u])
            if (t.parent[v] == -2) {
                t.parent[v] = u;
                t.kids[u].push_back(v);
                dfs.push_back(v);
            }
    }
    for (auto& k : t.kids) std::sort(k.begin(), k.end());
    return t;
}

} // namespace

GroupFamily tree_decompose_groups(const Graph& g, const VertexSet& anchors, int r) {
    require(r >= 1, errc::bad_params, "r must be at least 1");
    require(static_cast<int>(anchors.size()) >= r, errc::too_few_anchors,
            "need |R| >= r anchors");
    require(is_connected(g), errc::not_connected, "tree_decompose_groups needs connected input");

    int n = g.n();
    int d = std::max(1, g.max_degree());
    long long threshold = std::max<long long>(
        1, static_cast<long long>(anchors.size()) / (static_cast<long long>(d) * r));

    RootedTree tree = spanning_tree(g, 0);
    std::vector<char> is_anchor(static_cast<size_t>(n), 0);
    for (Vertex v : anchors) is_anchor[v] = 1;

    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<long long> cnt(static_cast<size_t>(n), 0);
    std::vector<long long> sz(static_cast<size_t>(n), 0);
    for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
        int v = *it;
        cnt[v] = is_anchor[v];
        sz[v] = 1;
        for (int c : tree.kids[v]) {
            cnt[v] += cnt[c];
            sz[v] += sz[c];
        }
    }

    GroupFamily out;
    while (cnt[tree.root] >= threshold) {
        // lowest alive subtree reaching the threshold: every alive child
        // stays below it; ties by subtree size, then root id
        int best = -1;
        for (int v : tree.order) {
            if (!alive[v] || cnt[v] < threshold) continue;
            bool lowest = true;
            for (int c : tree.kids[v])
                if (alive[c] && cnt[c] >= threshold) {
                    lowest = false;
                    break;
                }
            if (!lowest) continue;
            if (best < 0 || sz[v] < sz[best] || (sz[v] == sz[best] && v < best)) best = v;
        }
        require(best >= 0, errc::internal, "no peelable subtree despite remaining anchors");

        // collect the alive subtree of best
        VertexSet group;
        long long group_anchors = 0;
        std::vector<int> stack{best};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (!alive[u]) continue;
            alive[u] = 0;
            group.push_back(u);
            group_anchors += is_anchor[u];
            for (int c : tree.kids[u]) stack.push_back(c);
        }
        // subtract from ancestors
        long long removed_sz = static_cast<long long>(group.size());
        for (int a = tree.parent[best]; a >= 0; a = tree.parent[a]) {
            cnt[a] -= group_anchors;
            sz[a] -= removed_sz;
        }
        cnt[best] = 0;
        sz[best] = 0;

        out.groups.push_back(set_sorted(std::move(group)));
        out.anchor_counts.push_back(static_cast<int>(group_anchors));
    }

    require(static_cast<int>(out.groups.size()) >= r, errc::internal,
            "peeling produced fewer groups than guaranteed");
    return out;
}

PathBundle group_paths(const Graph& g, const std::vector<Path>& paths, int q) {
    require(q >= 1, errc::bad_params, "q must be at least 1");
    int d = std::max(1, g.max_degree());
    require(static_cast<long long>(paths.size()) >= 16LL * d * q, errc::too_few_paths,
            "need at least 16 d q paths");
    require(is_connected(g), errc::not_connected, "group_paths needs a connected host");

    int n = g.n();
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < paths.size(); ++i) {
        require(!paths[i].empty(), errc::bad_params, "empty path");
        for (Vertex v : paths[i]) {
            require(g.has_vertex(v), errc::missing_element, "path leaves the host");
            require(owner[v] < 0, errc::paths_not_disjoint, "paths share a vertex");
            owner[v] = static_cast<int>(i);
        }
    }

    // contracted graph: supernode i per path i, then the loose vertices
    int p_count = static_cast<int>(paths.size());
    std::vector<int> node_of(static_cast<size_t>(n), -1);
    std::vector<int> loose; // contracted id -> host id for non-path nodes
    for (Vertex v = 0; v < n; ++v) {
        if (owner[v] >= 0)
            node_of[v] = owner[v];
        else {
            node_of[v] = p_count + static_cast<int>(loose.size());
            loose.push_back(v);
        }
    }
    int h_n = p_count + static_cast<int>(loose.size());
    GraphBuilder hb(h_n);
    for (const auto& [u, v] : g.edges()) {
        int hu = node_of[u], hv = node_of[v];
        if (hu != hv) hb.try_add_edge(hu, hv);
    }
    Graph h = hb.build();

    RootedTree tree = spanning_tree(h, 0);

    std::vector<char> alive(static_cast<size_t>(h_n), 1);
    std::vector<long long> cnt(static_cast<size_t>(h_n), 0); // supernodes in subtree
    std::vector<long long> sz(static_cast<size_t>(h_n), 0);
    for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
        int v = *it;
        cnt[v] = v < p_count ? 1 : 0;
        sz[v] = 1;
        for (int c : tree.kids[v]) {
            cnt[v] += cnt[c];
            sz[v] += sz[c];
        }
    }

    auto expand_node = [&](int hv, VertexSet& acc) {
        if (hv < p_count)
            for (Vertex x : paths[hv]) acc.push_back(x);
        else
            acc.push_back(loose[hv - p_count]);
    };

    // collects the alive subtree of v (contracted ids), без deleting
    auto subtree_nodes = [&](int v) {
        std::vector<int> nodes, stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (!alive[u]) continue;
            nodes.push_back(u);
            for (int c : tree.kids[u]) stack.push_back(c);
        }
        return nodes;
    };

    auto delete_subtree = [&](int v) {
        auto nodes = subtree_nodes(v);
        long long anchors = 0, size_drop = 0;
        for (int u : nodes) {
            alive[u] = 0;
            anchors += u < p_count ? 1 : 0;
            size_drop += 1;
        }
        for (int a = tree.parent[v]; a >= 0; a = tree.parent[a]) {
            cnt[a] -= anchors;
            sz[a] -= size_drop;
        }
        cnt[v] = 0;
        sz[v] = 0;
    };

    PathBundle out;
    auto emit_cluster = [&](const std::vector<int>& nodes) {
        VertexSet verts;
        std::vector<int> members;
        for (int u : nodes) {
            expand_node(u, verts);
            if (u < p_count) members.push_back(u);
        }
        std::sort(members.begin(), members.end());
        out.clusters.push_back(set_sorted(std::move(verts)));
        out.member_paths.push_back(std::move(members));
    };

    const long long hi = 4LL * d * q;
    while (true) {
        long long total = cnt[tree.root];
        if (total < q) break; // leftovers are discarded
        if (total <= hi) {
            emit_cluster(subtree_nodes(tree.root));
            break;
        }
        // lowest alive vertex whose subtree holds >= q supernodes
        int best = -1;
        for (int v : tree.order) {
            if (!alive[v] || cnt[v] < q) continue;
            bool lowest = true;
            for (int c : tree.kids[v])
                if (alive[c] && cnt[c] >= q) {
                    lowest = false;
                    break;
                }
            if (!lowest) continue;
            if (best < 0 || sz[v] < sz[best] || (sz[v] == sz[best] && v < best)) best = v;
        }
        require(best >= 0, errc::internal, "no qualifying subtree");

        if (best >= p_count || cnt[best] <= hi) {
            // a loose vertex root caps the subtree at d q supernodes; a
            // supernode root within 4 d q is likewise a single cluster
            emit_cluster(subtree_nodes(best));
            delete_subtree(best);
            continue;
        }

        // heavy supernode: split its path into weighted segments
        const Path& p = paths[best];
        std::vector<int> children;
        for (int c : tree.kids[best])
            if (alive[c]) children.push_back(c);

        // attachment vertex on the path for each child subtree
        std::vector<VertexSet> child_verts(children.size());
        std::vector<int> attach(children.size(), -1); // index into p
        for (size_t ci = 0; ci < children.size(); ++ci) {
            VertexSet acc;
            for (int u : subtree_nodes(children[ci])) expand_node(u, acc);
            child_verts[ci] = set_sorted(std::move(acc));
            for (size_t pi = 0; pi < p.size() && attach[ci] < 0; ++pi)
                for (Vertex w : g.neighbors(p[pi]))
                    if (set_contains(child_verts[ci], w)) {
                        attach[ci] = static_cast<int>(pi);
                        break;
                    }
            require(attach[ci] >= 0, errc::internal, "child subtree lost its path attachment");
        }

        std::vector<long long> weight(p.size(), 0);
        for (size_t ci = 0; ci < children.size(); ++ci) weight[attach[ci]] += cnt[children[ci]];
        long long rest = std::accumulate(weight.begin(), weight.end(), 0LL);

        // shortest-prefix segmentation: every segment weighs in [q, 4dq];
        // the final segment absorbs the remainder (and any trailing
        // zero-weight path vertices)
        std::vector<std::pair<size_t, size_t>> segments;
        size_t seg_start = 0;
        long long remaining = rest;
        while (seg_start < p.size()) {
            if (remaining <= hi) {
                segments.emplace_back(seg_start, p.size());
                break;
            }
            long long acc = 0;
            size_t seg_end = seg_start;
            while (acc < q && seg_end < p.size()) acc += weight[seg_end++];
            segments.emplace_back(seg_start, seg_end);
            remaining -= acc;
            seg_start = seg_end;
        }

        for (auto [lo, hi_ex] : segments) {
            long long seg_weight = 0;
            VertexSet verts;
            std::vector<int> members;
            for (size_t pi = lo; pi < hi_ex; ++pi) {
                seg_weight += weight[pi];
                verts.push_back(p[pi]);
            }
            for (size_t ci = 0; ci < children.size(); ++ci)
                if (attach[ci] >= static_cast<int>(lo) && attach[ci] < static_cast<int>(hi_ex))
                    for (int u : subtree_nodes(children[ci])) {
                        expand_node(u, verts);
                        if (u < p_count) members.push_back(u);
                    }
            require(seg_weight >= q && seg_weight <= hi, errc::internal,
                    "segment weight fell outside [q, 4dq]");
            std::sort(members.begin(), members.end());
            out.clusters.push_back(set_sorted(std::move(verts)));
            out.member_paths.push_back(std::move(members));
        }
        delete_subtree(best); // the heavy path itself is discarded
    }

    // retention bound: at least half of the input paths end up clustered
    size_t retained = 0;
    for (auto& m : out.member_paths) retained += m.size();
    require(2 * retained >= paths.size(), errc::internal, "retention bound violated");
    return out;
}

} // namespace minex
