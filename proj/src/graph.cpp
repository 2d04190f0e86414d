#include "minex/graph.hpp"

#include <deque>
#include <functional>
#include <numeric>

namespace minex {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool GraphBuilder::try_add_edge(Vertex u, Vertex v) {
    if (u == v || !g_.has_vertex(u) || !g_.has_vertex(v)) return false;
    auto& nu = g_.adj_[u];
    if (std::find(nu.begin(), nu.end(), v) != nu.end()) return false;
    nu.push_back(v);
    g_.adj_[v].push_back(u);
    ++g_.m_;
    return true;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    require(try_add_edge(u, v), errc::bad_params,
            "invalid edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

Graph GraphBuilder::build() {
    int dmax = 0;
    for (auto& nb : g_.adj_) {
        std::sort(nb.begin(), nb.end());
        dmax = std::max(dmax, static_cast<int>(nb.size()));
    }
    g_.max_degree_ = dmax;
    return std::move(g_);
}

VertexSet set_sorted(std::vector<Vertex> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
    return set_intersect(a, b).empty();
}

VertexSet full_vertex_set(int n) {
    VertexSet out(static_cast<size_t>(n));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

VertexSet complement(int n, const VertexSet& s) {
    return set_minus(full_vertex_set(n), s);
}

int count_crossing(const Graph& g, const std::vector<char>& in_s) {
    int crossing = 0;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (!in_s[u]) continue;
        for (Vertex v : g.neighbors(u))
            if (!in_s[v]) ++crossing;
    }
    return crossing;
}

Cut sparsity(const Graph& g, const VertexSet& s) {
    require(!s.empty(), errc::empty_side, "cut side is empty");
    require(static_cast<int>(s.size()) < g.n(), errc::empty_side, "cut side is all of V");
    std::vector<char> in_s(static_cast<size_t>(g.n()), 0);
    for (Vertex v : s) {
        require(g.has_vertex(v), errc::missing_element, "cut references unknown vertex");
        in_s[v] = 1;
    }
    Cut c;
    c.side_s = s;
    c.side_t = complement(g.n(), s);
    c.crossing = count_crossing(g, in_s);
    c.sparsity = static_cast<double>(c.crossing) /
                 static_cast<double>(std::min(c.side_s.size(), c.side_t.size()));
    return c;
}

std::vector<int> bfs_hops_multi(const Graph& g, const VertexSet& sources) {
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<int> bfs_hops(const Graph& g, Vertex source) {
    return bfs_hops_multi(g, {source});
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto dist = bfs_hops(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> in_s(static_cast<size_t>(g.n()), 0);
    for (Vertex v : s) in_s[v] = 1;
    std::deque<Vertex> queue{s.front()};
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    seen[s.front()] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (in_s[v] && !seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == s.size();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<Vertex> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (Vertex v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        comps.push_back(set_sorted(std::move(comp)));
    }
    return comps;
}

Path bfs_path(const Graph& g, Vertex from, Vertex to) {
    if (from == to) return {from};
    std::vector<Vertex> parent(static_cast<size_t>(g.n()), -1);
    std::deque<Vertex> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (parent[v] >= 0) continue;
            parent[v] = u;
            if (v == to) {
                Path p{to};
                while (p.back() != from) p.push_back(parent[p.back()]);
                std::reverse(p.begin(), p.end());
                return p;
            }
            queue.push_back(v);
        }
    }
    return {};
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
    require(g.has_edge(u, v), errc::missing_element, "contract_edge: edge not present");
    Vertex keep = std::min(u, v);
    Vertex drop = std::max(u, v);
    // relabel densely: drop disappears, ids above shift down
    auto relabel = [&](Vertex x) {
        Vertex y = (x == drop) ? keep : x;
        return y > drop ? y - 1 : y;
    };
    GraphBuilder b(g.n() - 1);
    for (const auto& [a, c] : g.edges()) {
        Vertex a2 = relabel(a), c2 = relabel(c);
        if (a2 != c2) b.try_add_edge(a2, c2);
    }
    return b.build();
}

Graph delete_vertex(const Graph& g, Vertex v) {
    require(g.has_vertex(v), errc::missing_element, "delete_vertex: unknown vertex");
    auto relabel = [&](Vertex x) { return x > v ? x - 1 : x; };
    GraphBuilder b(g.n() - 1);
    for (const auto& [a, c] : g.edges())
        if (a != v && c != v) b.add_edge(relabel(a), relabel(c));
    return b.build();
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    require(g.has_edge(u, v), errc::missing_element, "delete_edge: edge not present");
    Edge target = make_edge(u, v);
    GraphBuilder b(g.n());
    for (const auto& e : g.edges())
        if (e != target) b.add_edge(e.first, e.second);
    return b.build();
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
    Subgraph sub;
    sub.to_host = vs;
    sub.from_host.assign(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        require(g.has_vertex(vs[i]), errc::missing_element, "induced_subgraph: unknown vertex");
        sub.from_host[vs[i]] = static_cast<Vertex>(i);
    }
    GraphBuilder b(static_cast<int>(vs.size()));
    for (Vertex u : vs)
        for (Vertex v : g.neighbors(u))
            if (u < v && sub.from_host[v] >= 0) b.add_edge(sub.from_host[u], sub.from_host[v]);
    sub.graph = b.build();
    return sub;
}

void Matching::validate() const {
    std::vector<Vertex> seen;
    for (const auto& [u, v] : pairs) {
        require(u != v, errc::bad_params, "matching pair is a loop");
        seen.push_back(u);
        seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), errc::bad_params,
            "matching reuses a vertex");
}

Matching greedy_maximal_matching(const std::vector<Edge>& edges) {
    std::vector<Edge> sorted = edges;
    for (auto& e : sorted) e = make_edge(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    Matching m;
    std::vector<Vertex> used;
    auto is_used = [&](Vertex v) { return std::binary_search(used.begin(), used.end(), v); };
    for (const auto& [u, v] : sorted) {
        if (is_used(u) || is_used(v)) continue;
        m.pairs.emplace_back(u, v);
        used.push_back(u);
        used.push_back(v);
        std::sort(used.begin(), used.end());
    }
    return m;
}

Matching maximum_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b) {
    require(sets_disjoint(a, b), errc::bad_params, "matching sides intersect");
    std::vector<char> in_b(static_cast<size_t>(g.n()), 0);
    for (Vertex v : b) in_b[v] = 1;
    std::vector<Vertex> match(static_cast<size_t>(g.n()), -1);

    // Kuhn's augmenting search from each left vertex.
    std::vector<char> visited(static_cast<size_t>(g.n()), 0);
    std::function<bool(Vertex)> augment = [&](Vertex u) -> bool {
        for (Vertex v : g.neighbors(u)) {
            if (!in_b[v] || visited[v]) continue;
            visited[v] = 1;
            if (match[v] < 0 || augment(match[v])) {
                match[v] = u;
                match[u] = v;
                return true;
            }
        }
        return false;
    };
    for (Vertex u : a) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(u);
    }
    Matching m;
    for (Vertex v : b)
        if (match[v] >= 0) m.pairs.push_back(make_edge(match[v], v));
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

} // namespace minex
