#pragma once

#include <stdexcept>
#include <string>

namespace minex {

// Machine-readable failure categories. The CLI maps these onto exit codes,
// so keep the enum stable.
enum class errc {
    bad_params,
    infeasible_degree,
    generation_failed,
    parse_error,
    io_error,
    empty_side,
    missing_element,
    disconnected,
    no_convergence,
    precondition_violated,
    not_connected,
    too_few_anchors,
    too_few_paths,
    paths_not_disjoint,
    parameter_infeasible,
    cut_found,
    recursion_budget,
    no_path,
    no_layer_cut,
    exhausted,
    congestion_exceeded,
    resample_budget_exceeded,
    routing_failed,
    threading_failed,
    width_not_divisible,
    size_bound_exceeded,
    too_large,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace minex
