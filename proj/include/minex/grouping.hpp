#pragma once

#include <vector>

#include "minex/graph.hpp"

namespace minex {

// Disjoint connected vertex groups, each holding a guaranteed share of the
// anchor set.
struct GroupFamily {
    std::vector<VertexSet> groups;
    std::vector<int> anchor_counts; // |group_i  intersect  R|
};

// Spanning-tree peeling: >= r disjoint connected groups, each with
// floor(|R|/(d r)) <= anchors <= |R|/r (lower threshold clamps at 1).
// DFS tree from vertex 0, re-rooted at its lowest-id leaf; the lowest
// qualifying subtree is peeled each round (ties: smaller subtree, then
// smaller root id).
GroupFamily tree_decompose_groups(const Graph& g, const VertexSet& anchors, int r);

// Connected clusters bundling vertex-disjoint paths: every cluster holds
// between q and 4dq of the input paths, at least half the paths survive.
struct PathBundle {
    std::vector<VertexSet> clusters;
    std::vector<std::vector<int>> member_paths; // indices into the input path list
};

PathBundle group_paths(const Graph& g, const std::vector<Path>& paths, int q);

} // namespace minex
