#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minex/graph.hpp"
#include "minex/minor_model.hpp"

namespace minex {

// Ground-truth oracles. Everything here is exhaustive and capped; nothing
// depends on the algorithmic modules it is used to check.

enum class ViolationKind {
    ImageDisconnected,
    ImagesOverlap,
    PathMiswired,
    PathsIntersect,
    NotAPath,
};

struct Violation {
    ViolationKind kind;
    std::vector<int> witness; // offending vertex/edge ids
    std::string detail;
};

const char* violation_name(ViolationKind k);

// Checks all four model conditions exhaustively; empty result = valid model.
std::vector<Violation> check_model(const Graph& g, const Graph& h, const MinorModel& m);

// Exact minor test by branch-set search; capped at |V(g)| <= cap.
bool is_minor_bruteforce(const Graph& g, const Graph& h, int cap = 10);

// Number of non-isomorphic minors (empty graph and single vertices count);
// capped at size(g) = |V|+|E| <= 8.
long long count_minors(const Graph& g);

// Exact well-linkedness of A in g: every pair of disjoint equal-size subsets
// of A is joined by that many paths internally disjoint from A. |A| <= 12.
bool check_well_linked(const Graph& g, const VertexSet& a);

// Exact expansion phi(g) over all 2^(n-1)-1 cuts; n <= 20. Disconnected
// graphs give 0; graphs with fewer than 2 vertices have no cuts and give
// +infinity.
double check_expansion_bruteforce(const Graph& g);

// Exact graph isomorphism for small graphs (degree-refined backtracking).
bool are_isomorphic(const Graph& a, const Graph& b);

// Non-induced subgraph containment: can h be mapped injectively into g
// preserving edges?
bool is_subgraph_isomorphic(const Graph& g, const Graph& h);

} // namespace minex
