#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minex/errors.hpp"

namespace minex {

using Vertex = int;
using VertexSet = std::vector<Vertex>; // sorted, unique
using Edge = std::pair<Vertex, Vertex>; // normalized u < v

// A path is an ordered sequence of distinct vertices, consecutive ones
// adjacent in the host graph. A single vertex is a zero-length path.
using Path = std::vector<Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on dense vertex ids 0..n-1. Immutable once built;
// all mutating operations return new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(n)) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    int max_degree() const { return max_degree_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n(); }
    bool has_edge(Vertex u, Vertex v) const;

    // All edges as normalized pairs, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    friend class GraphBuilder;
    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
    int max_degree_ = 0;
};

// Accumulates edges, then freezes into a Graph (sorting adjacency, caching
// the degree). Rejects loops and parallel edges.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    bool try_add_edge(Vertex u, Vertex v); // false on loop/duplicate/out-of-range
    void add_edge(Vertex u, Vertex v);     // throws on violation
    Graph build();

private:
    Graph g_;
};

// --- vertex-set helpers (sets are sorted unique id vectors) ---

VertexSet set_sorted(std::vector<Vertex> xs);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
VertexSet full_vertex_set(int n);
VertexSet complement(int n, const VertexSet& s);

// --- cuts ---

// Bipartition of V with cached crossing count and sparsity
// |E(S,T)| / min(|S|,|T|).
struct Cut {
    VertexSet side_s;
    VertexSet side_t;
    int crossing = 0;
    double sparsity = 0.0;
};

int count_crossing(const Graph& g, const std::vector<char>& in_s);

// Builds the cut (s, V \ s); errors with empty_side if s is empty or all of V.
Cut sparsity(const Graph& g, const VertexSet& s);

// --- traversal / connectivity ---

std::vector<int> bfs_hops(const Graph& g, Vertex source);
std::vector<int> bfs_hops_multi(const Graph& g, const VertexSet& sources);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);

// Shortest u->v path by BFS; empty if unreachable (u==v gives the single
// vertex path).
Path bfs_path(const Graph& g, Vertex from, Vertex to);

// --- minor-operation primitives ---

// Contracts edge (u, v): the merged vertex keeps id min(u,v); the other id
// becomes isolated-and-removed by dense relabeling only when `relabel` is
// set. Parallel edges merge, loops drop.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);
Graph delete_vertex(const Graph& g, Vertex v); // relabels densely
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

// Induced subgraph with dense relabeling plus the id maps between the two.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host;   // local id -> host id
    std::vector<Vertex> from_host; // host id -> local id, -1 outside
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& vs);

// --- matchings ---

struct Matching {
    std::vector<Edge> pairs; // normalized, no shared endpoints

    void validate() const;
};

// Greedy maximal matching over the given edges, scanned in
// (min endpoint, max endpoint) order.
Matching greedy_maximal_matching(const std::vector<Edge>& edges);

// Maximum matching between two disjoint vertex sets using the edges of g
// crossing between them (augmenting paths; the crossing graph is bipartite).
Matching maximum_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b);

} // namespace minex
