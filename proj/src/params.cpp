#include "minex/params.hpp"

namespace minex {

Params Params::paper() {
    Params p;
    p.preset = "paper";
    p.flow_w_mult = 64.0;
    p.flow_l_mult = 64.0;
    p.rg_delta_mult = 1.0; // Delta = 1/(2 n^2)
    p.plen_mult = 128.0;
    p.q_fixed = 0; // formula
    p.mid_nstar_override = 0;
    p.adaptive_width = false;
    p.wl_q_fixed = 0; // formula
    p.duo_gamma_mult = 512.0;
    p.part_min_frac_den = 0; // 0 = use paper 4d rule
    return p;
}

Params Params::desk() { return Params{}; }

Params Params::from_preset(const std::string& name) {
    if (name == "paper") return paper();
    if (name == "desk") return desk();
    fail(errc::bad_params, "unknown preset: " + name + " (expected paper or desk)");
}

std::map<std::string, double*> Params::numeric_fields() {
    return {
        {"spectral_tol", &spectral_tol},
        {"flow_w_mult", &flow_w_mult},
        {"flow_l_mult", &flow_l_mult},
        {"flow_eps", &flow_eps},
        {"flow_mwu_eta", &flow_mwu_eta},
        {"rg_delta_mult", &rg_delta_mult},
        {"eta_mult", &eta_mult},
        {"plen_mult", &plen_mult},
        {"q_formula_c", &q_formula_c},
        {"lll_resample_mult", &lll_resample_mult},
        {"cert_factor", &cert_factor},
        {"recursion_budget_c", &recursion_budget_c},
        {"pos_cx", &pos_cx},
        {"wl_q_mult", &wl_q_mult},
        {"wl_fraction", &wl_fraction},
        {"poe_pcount_div", &poe_pcount_div},
        {"poe_short_mult", &poe_short_mult},
        {"poe_prune_div", &poe_prune_div},
        {"poe_what_div", &poe_what_div},
        {"duo_gamma_mult", &duo_gamma_mult},
        {"duo_sigma_mult", &duo_sigma_mult},
        {"simple_size_factor", &simple_size_factor},
        {"simple_size_paper_c", &simple_size_paper_c},
        {"poe_embed_div", &poe_embed_div},
        {"poe_rho_mult", &poe_rho_mult},
    };
}

void Params::apply_override(const std::string& key, double value) {
    // integer-valued knobs first
    if (key == "spectral_iter_factor") { spectral_iter_factor = static_cast<int>(value); return; }
    if (key == "flow_mwu_rounds") { flow_mwu_rounds = static_cast<int>(value); return; }
    if (key == "q_fixed") { q_fixed = static_cast<int>(value); return; }
    if (key == "reseed_budget") { reseed_budget = static_cast<int>(value); return; }
    if (key == "mid_nstar_override") { mid_nstar_override = static_cast<int>(value); return; }
    if (key == "wl_q_fixed") { wl_q_fixed = static_cast<int>(value); return; }
    if (key == "part_min_frac_den") { part_min_frac_den = static_cast<int>(value); return; }
    if (key == "adaptive_width") { adaptive_width = value != 0.0; return; }
    auto fields = numeric_fields();
    auto it = fields.find(key);
    require(it != fields.end(), errc::bad_params, "unknown parameter: " + key);
    *it->second = value;
}

std::map<std::string, double> Params::numeric_snapshot() const {
    std::map<std::string, double> out;
    for (auto& [k, v] : const_cast<Params*>(this)->numeric_fields()) out[k] = *v;
    out["spectral_iter_factor"] = spectral_iter_factor;
    out["flow_mwu_rounds"] = flow_mwu_rounds;
    out["q_fixed"] = q_fixed;
    out["reseed_budget"] = reseed_budget;
    out["mid_nstar_override"] = mid_nstar_override;
    out["wl_q_fixed"] = wl_q_fixed;
    out["part_min_frac_den"] = part_min_frac_den;
    out["adaptive_width"] = adaptive_width ? 1.0 : 0.0;
    return out;
}

} // namespace minex
