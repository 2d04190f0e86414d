#pragma once

#include <map>
#include <vector>

#include "minex/graph.hpp"

namespace minex {

// Model of a pattern H in a host G: every pattern vertex maps to a connected
// vertex set of the host, every pattern edge to a host path connecting the
// two images, images disjoint, paths internally disjoint from each other and
// from all images.
struct MinorModel {
    std::vector<VertexSet> vertex_images;  // indexed by pattern vertex id
    std::map<Edge, Path> edge_images;      // keyed by normalized pattern edge

    const Path& path_of(Vertex u, Vertex v) const {
        auto it = edge_images.find(make_edge(u, v));
        require(it != edge_images.end(), errc::missing_element, "model lacks an edge path");
        return it->second;
    }
};

// Identity model of g in itself: X_u = {u}, P_e = its two endpoints.
MinorModel identity_model(const Graph& g);

// Model of A in C induced by a model of A in B and a model of B in C
// (image substitution; edge paths are rethreaded through the outer images).
MinorModel compose_models(const Graph& host_c, const MinorModel& b_in_c, const Graph& graph_b,
                          const MinorModel& a_in_b);

} // namespace minex
