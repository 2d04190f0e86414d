#pragma once

#include <cmath>
#include <map>
#include <string>

#include "minex/errors.hpp"

namespace minex {

// Every stage constant of the pipeline lives here. The `paper` preset keeps
// the published values; at those values the constructions are vacuous below
// astronomical n, so the `desk` preset replaces the polynomial factors with
// small constants and lets adaptive widths shrink to whatever the instance
// supports. Postconditions are verified on outputs either way.
struct Params {
    std::string preset = "desk";

    // spectral solver
    double spectral_tol = 1e-8;
    int spectral_iter_factor = 10; // iteration cap = factor * n * log2(n)

    // flow / Leighton-Rao machinery
    double flow_w_mult = 0.25;   // W* = alpha / (w_mult * n * log2 n); paper 64
    double flow_l_mult = 2.0;    // L = ceil(l_mult * d * log2 n / alpha); paper 64
    double flow_eps = 0.1;       // acceptance slack (1-eps)W*
    int flow_mwu_rounds = 32;    // reroute rounds before giving up on the primal
    double flow_mwu_eta = 3.0;   // exponential length rate on congestion
    double rg_delta_mult = 64.0; // Delta = delta_mult / (2 n^2); paper 1
    double eta_mult = 1024.0;    // vertex-congestion threshold eta_mult * d * log2 n / alpha
    double plen_mult = 4.0;      // sampled-path length cap mult * d * log2 n / alpha; paper 128

    // route_or_cut / LLL
    int q_fixed = 16;          // desk family size; 0 = use the paper formula
    double q_formula_c = 262144.0; // q = ceil(c d^2 log^2 n / alpha^2) when q_fixed = 0
    double lll_resample_mult = 64.0; // cap = mult * F * ln(F + 2)
    int reseed_budget = 3;

    // expander splitting
    int mid_nstar_override = 0;   // 0 = n* = ceil(alpha n / 8d)
    double cert_factor = 1.0 / 64.0; // expansion certificate >= factor * beta^2 / d
    double recursion_budget_c = 3.0; // step budget exponent (n^c * (256 d / beta)^L)

    // path-of-sets construction
    double pos_cx = 3.0;        // c_x from the splitting theorem
    bool adaptive_width = true; // desk: width = what the instance yields (>= 1)

    // well-linked extraction / grouping
    double wl_q_mult = 16.0;  // q = floor(q_mult * d / alpha); desk uses wl_q_fixed
    int wl_q_fixed = 2;       // 0 = use formula
    double wl_fraction = 1.0 / 256.0; // promised |A_hat| >= fraction * alpha^2 w / d^3

    // pos -> poe
    double poe_pcount_div = 16.0;   // |P_i| = floor(w^2 / (div * n * d))
    double poe_short_mult = 2.0;    // short path threshold mult * n / w
    double poe_prune_div = 16.0;    // pruning sparsity threshold w / (div * n)
    double poe_what_div = 16384.0;  // w_hat = floor(w^4 / (div * n^3 d^2)) [2^14]

    // duo-of-expanders routing
    double duo_gamma_mult = 512.0; // gamma = mult * n * d^2 / (w * alpha)
    double duo_sigma_mult = 32768.0; // sigma = mult * floor(d^3 n log n / (alpha^2 w)) [2^15]

    // embed (simple algorithm)
    double simple_size_factor = 4.0; // bound = floor(factor * n / log^2 n); paper alpha^3/(c~ d^5)
    double simple_size_paper_c = 1048576.0; // c~* when preset = paper [2^20]
    int part_min_frac_den = 4;  // good partition sides >= n / den (paper: 4d)

    // embed (poe algorithm)
    double poe_embed_div = 8.0; // |V(H)| <= floor(w / (div * d)) on desk
    double poe_rho_mult = 65536.0; // paper rho = mult * floor(d^3 n log n / (alpha^2 w)) [2^16]

    static Params paper();
    static Params desk();
    static Params from_preset(const std::string& name);

    void apply_override(const std::string& key, double value);
    std::map<std::string, double*> numeric_fields();
    std::map<std::string, double> numeric_snapshot() const;

    // --- derived quantities ---

    static double log2n(int n) { return std::max(1.0, std::log2(static_cast<double>(n))); }

    double wstar(double alpha, int n) const {
        return alpha / (flow_w_mult * n * log2n(n));
    }
    int hop_bound(double alpha, int n, int d) const {
        double L = std::ceil(flow_l_mult * d * log2n(n) / alpha);
        return static_cast<int>(std::min<double>(L, n));
    }
    double rg_delta(int n) const { return rg_delta_mult / (2.0 * n * n); }
    double eta_threshold(double alpha, int n, int d) const {
        return eta_mult * d * log2n(n) / alpha;
    }
    double path_len_cap(double alpha, int n, int d) const {
        return std::min<double>(plen_mult * d * log2n(n) / alpha, n);
    }
    int lll_q(double alpha, int n, int d) const {
        if (q_fixed > 0) return q_fixed;
        return static_cast<int>(std::ceil(q_formula_c * d * d * log2n(n) * log2n(n) /
                                          (alpha * alpha)));
    }
    int wl_q(double alpha, int d) const {
        if (wl_q_fixed > 0) return wl_q_fixed;
        return std::max(1, static_cast<int>(std::floor(wl_q_mult * d / alpha)));
    }
    long long simple_size_bound(double alpha, int n, int d) const {
        double ln2 = log2n(n);
        if (preset == "paper") {
            double f = std::pow(alpha, 3) / (simple_size_paper_c * std::pow(d, 5));
            return static_cast<long long>(std::floor(f * n / (ln2 * ln2)));
        }
        return static_cast<long long>(std::floor(simple_size_factor * n / (ln2 * ln2)));
    }
};

} // namespace minex
