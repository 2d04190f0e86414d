#include "minex/errors.hpp"

namespace minex {

const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_params: return "BadParams";
        case errc::infeasible_degree: return "InfeasibleDegree";
        case errc::generation_failed: return "GenerationFailed";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
        case errc::empty_side: return "EmptySide";
        case errc::missing_element: return "MissingElement";
        case errc::disconnected: return "Disconnected";
        case errc::no_convergence: return "NoConvergence";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::not_connected: return "NotConnected";
        case errc::too_few_anchors: return "TooFewAnchors";
        case errc::too_few_paths: return "TooFewPaths";
        case errc::paths_not_disjoint: return "PathsNotDisjoint";
        case errc::parameter_infeasible: return "ParameterInfeasible";
        case errc::cut_found: return "CutFound";
        case errc::recursion_budget: return "RecursionBudget";
        case errc::no_path: return "NoPath";
        case errc::no_layer_cut: return "NoLayerCut";
        case errc::exhausted: return "Exhausted";
        case errc::congestion_exceeded: return "CongestionExceeded";
        case errc::resample_budget_exceeded: return "ResampleBudgetExceeded";
        case errc::routing_failed: return "RoutingFailed";
        case errc::threading_failed: return "ThreadingFailed";
        case errc::width_not_divisible: return "WidthNotDivisible";
        case errc::size_bound_exceeded: return "SizeBoundExceeded";
        case errc::too_large: return "TooLarge";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace minex
