#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minex/graph.hpp"
#include "minex/params.hpp"

namespace minex {

// Carries the refuting cut out of any operation whose expander assumption
// failed; the cut's sparsity is strictly below the asserted alpha, verified
// by exact recount before throwing.
class cut_found : public error {
public:
    Cut cut;
    double refuted_alpha;
    cut_found(Cut c, double alpha)
        : error(errc::cut_found,
                "sparsity " + std::to_string(c.sparsity) + " refutes alpha " +
                    std::to_string(alpha)),
          cut(std::move(c)),
          refuted_alpha(alpha) {}
};

// Spectral lower bound lambda2/2 <= phi(G), plus the sweep cut as an upper
// bound witness.
struct ExpansionEstimate {
    double lower_bound = 0.0;        // lambda2 / 2 (0 when disconnected)
    double lambda2 = 0.0;            // Rayleigh value of the converged vector
    std::optional<Cut> witness_cut;  // sweep cut (or exact component split)
    bool connected = true;
};

struct SpectralCut {
    Cut cut;
    double lambda2;      // second Laplacian eigenvalue estimate
    bool connected;      // false => cut is an exact component split
};

// Sound expansion lower bound from a Rayleigh estimate: power iteration
// approaches lambda2 from above, so shave the convergence margin before
// halving.
inline double spectral_lower_bound(double lambda2) {
    double safe = lambda2 * (1.0 - 1e-6) - 1e-12;
    return safe > 0 ? safe / 2.0 : 0.0;
}

// Sweep cut over the Fiedler ordering; sparsity <= sqrt(2 d lambda2).
// Disconnected inputs yield the exact component cut with lambda2 = 0.
SpectralCut spectral_sparse_cut(const Graph& g, const Params& params = Params::desk());

ExpansionEstimate estimate_expansion(const Graph& g, const Params& params = Params::desk());

// Obs-style balanced weight partition: sort descending, greedily add to the
// lighter side; both sides reach N/4 whenever every x_i <= 3N/4.
std::pair<std::vector<int>, std::vector<int>> balanced_weight_partition(
    const std::vector<long long>& xs);

// Repairs a cut into one with both induced sides connected without
// increasing sparsity (component-moving argument).
Cut connectify_cut(const Graph& g, const Cut& c);

struct PruneResult {
    VertexSet kept;             // host ids of the surviving expander
    VertexSet removed_vertices; // host ids dropped during pruning
    Graph subgraph;             // induced on kept, with removed_edges absent
    std::vector<Vertex> to_host;
    double certified = 0.0;     // spectral lower bound of the survivor
    bool size_bound_met = true; // |removed| <= 4 |E'| / alpha
};

// Iterated sweep-cut removal: extracts a certified expander from
// g minus removed_edges, dropping the sparse side each round.
PruneResult prune_to_expander(const Graph& g, const std::vector<Edge>& removed_edges,
                              double target_alpha, const Params& params = Params::desk());

struct CertifiedSet {
    VertexSet vertices;
    double certified = 0.0; // spectral lower bound of the induced subgraph
};

struct CoreOrCut {
    std::optional<CertifiedSet> core;
    std::optional<Cut> cut;
    bool is_core() const { return core.has_value(); }
};

// Balanced-cut improvement loop: either a core V' with n/2 <= |V'| <= 3n/4
// certified expanding, or a cut of sparsity < beta.
CoreOrCut expander_or_sparse_cut_half(const Graph& g, double beta,
                                      const Params& params = Params::desk());

// Charge-and-recombine wrapper: core with n/4 <= |V'| <= 3n/4, or a
// balanced cut (both sides >= n/4) of sparsity < beta.
CoreOrCut expander_or_balanced_cut(const Graph& g, double beta,
                                   const Params& params = Params::desk());

// Recursive mid-size expander extraction: V' with n*/32 <= |V'| <= n*.
// Throws cut_found when a sparsity-<alpha cut refutes the expander
// assertion; ParameterInfeasible when n* is out of range.
CertifiedSet find_mid_expander(const Graph& g, double alpha,
                               const Params& params = Params::desk());

struct SplitResult {
    VertexSet side1, side2;
    double cert1 = 0.0, cert2 = 0.0;
};

// Splits an asserted expander into two certified expanding sides via
// find_mid_expander, pruning, and an s-t min cut.
SplitResult split_expander(const Graph& g, double alpha, const Params& params = Params::desk());

} // namespace minex
