/*
   Copyright 2026 The freefall Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "freefall/commands.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "freefall/csl_model.hpp"
#include "freefall/dp_model.hpp"
#include "freefall/errors.hpp"
#include "freefall/feasibility.hpp"
#include "freefall/report.hpp"
#include "freefall/simulator.hpp"
#include "freefall/sweep.hpp"
#include "freefall/wavepacket.hpp"

namespace freefall {

namespace {

constexpr std::string_view kCommands[] = {
    "feasibility", "dp", "csl", "simulate", "power", "sweep-ratio", "sweep-td",
};

std::string num(double v) { return format_double(v); }

template <typename Int>
std::string integer(Int v)
{
    return std::to_string(v);
}

void append_particle(std::vector<Quantity>& q, const RunConfig& cfg)
{
    const auto p = cfg.particle();
    const auto s = cfg.initial_state();
    q.emplace_back("radius_m", num(p.radius()));
    q.emplace_back("density_kg_m3", num(p.density()));
    q.emplace_back("mass_kg", num(p.mass()));
    q.emplace_back("omega_rad_s", num(s.omega()));
    q.emplace_back("x_var0_m2", num(s.position_variance()));
    q.emplace_back("p_var0_kg2m2s2", num(s.momentum_variance()));
}

/// Solver failures in report-only quantities become a warning and a sentinel.
template <typename Fn>
double or_sentinel(Fn&& fn, double sentinel, const char* what, std::vector<std::string>& warnings)
{
    try {
        return fn();
    } catch (const SolverError& e) {
        warnings.push_back(std::string(what) + ": " + e.what());
        return sentinel;
    }
}

double resolve_lambda_true(const RunConfig& cfg)
{
    const auto p = cfg.particle();
    double base = 0.0;
    switch (cfg.lambda_source) {
    case LambdaSource::None: base = 0.0; break;
    case LambdaSource::DP: base = lambda_dp(p); break;
    case LambdaSource::CSL: base = lambda_csl(p, cfg.csl); break;
    case LambdaSource::Custom: base = cfg.lambda_value; break;
    case LambdaSource::Min: base = lambda_min(cfg.initial_state(), cfg.mission(), cfg.z_multiplier); break;
    }
    return base * cfg.lambda_scale;
}

void warn_past_decoherence(const RunConfig& cfg, std::vector<std::string>& warnings)
{
    if (cfg.lambda_source != LambdaSource::DP)
        return;
    const double t_d = or_sentinel([&] { return nongaussian_time(cfg.particle(), cfg.initial_state()); },
                                   std::numeric_limits<double>::infinity(), "t_d", warnings);
    if (cfg.expansion_s > t_d)
        warnings.push_back("expansion time " + num(cfg.expansion_s) +
                           " s exceeds the DP non-Gaussianity time " + num(t_d) +
                           " s; the Gaussian sampling model no longer holds");
}

CommandOutput feasibility(const RunConfig& cfg)
{
    CommandOutput out;
    std::vector<Quantity> q;
    append_particle(q, cfg);
    const auto p = cfg.particle();
    const auto s = cfg.initial_state();
    const auto m = cfg.mission();
    const auto rep = detectability_report(p, s, m, true, cfg.csl, cfg.z_multiplier);

    q.emplace_back("series_time_s", num(m.series_time()));
    q.emplace_back("expansion_time_s", num(m.expansion_time()));
    q.emplace_back("n_runs", integer(m.n_runs()));
    q.emplace_back("sigma_meas_m", num(m.sigma_meas()));
    q.emplace_back("frac_uncertainty_exact", num(fractional_variance_uncertainty(m, UncertaintyMode::Exact)));
    q.emplace_back("frac_uncertainty_approx",
                   num(fractional_variance_uncertainty(m, UncertaintyMode::Approximate)));
    q.emplace_back("z_multiplier", num(cfg.z_multiplier));
    q.emplace_back("lambda_min", num(rep.lambda_min));
    q.emplace_back("lambda_dp", num(*rep.lambda_dp));
    q.emplace_back("ratio_dp", num(*rep.ratio_dp));
    q.emplace_back("lambda_csl", num(*rep.lambda_csl));
    q.emplace_back("ratio_csl", num(*rep.ratio_csl));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (m.sigma_meas() > 0.0)
        q.emplace_back("crossover_time_s",
                       num(or_sentinel([&] { return measurement_crossover_time(s, p, m); }, nan,
                                       "crossover_time_s", out.warnings)));
    q.emplace_back("t_d_s", num(or_sentinel([&] { return nongaussian_time(p, s); },
                                            std::numeric_limits<double>::infinity(), "t_d_s",
                                            out.warnings)));
    out.text = quantity_csv(q);
    return out;
}

CommandOutput dp(const RunConfig& cfg)
{
    CommandOutput out;
    std::vector<Quantity> q;
    append_particle(q, cfg);
    const auto p = cfg.particle();
    const auto s = cfg.initial_state();
    const double b = cfg.dp_separation_m.value_or(coherent_width(s, p, cfg.expansion_s));
    const auto r = dp_summary(p, b);
    q.emplace_back("separation_b_m", num(b));
    q.emplace_back("overlap_lambda", num(overlap_parameter(p, b)));
    q.emplace_back("E_G_J", num(r.E_G));
    q.emplace_back("tau_G_s", num(r.tau_G));
    q.emplace_back("decoherence_rate_hz", num(pairwise_decoherence_rate(p, b)));
    q.emplace_back("lambda_dp", num(r.lambda_dp));
    q.emplace_back("heat_W", num(r.heat_W));
    q.emplace_back("heat_K_per_s", num(r.heat_K_per_s));
    q.emplace_back("t_d_s", num(nongaussian_time(p, s)));
    out.text = quantity_csv(q);
    return out;
}

CommandOutput csl(const RunConfig& cfg)
{
    std::vector<Quantity> q;
    append_particle(q, cfg);
    const auto p = cfg.particle();
    const double l = lambda_csl(p, cfg.csl);
    const double lmin = lambda_min(cfg.initial_state(), cfg.mission(), cfg.z_multiplier);
    q.emplace_back("rate_hz", num(cfg.csl.rate));
    q.emplace_back("r_c_m", num(cfg.csl.r_c));
    q.emplace_back("form_factor", num(csl_form_factor(p.radius() / cfg.csl.r_c)));
    q.emplace_back("lambda_csl", num(l));
    q.emplace_back("lambda_min", num(lmin));
    q.emplace_back("ratio_csl", num(l / lmin));
    return {quantity_csv(q), {}};
}

CommandOutput simulate(const RunConfig& cfg)
{
    CommandOutput out;
    warn_past_decoherence(cfg, out.warnings);
    const double lambda_true = resolve_lambda_true(cfg);
    const auto r = simulate_series(cfg.particle(), cfg.initial_state(), cfg.mission(), lambda_true, cfg.seed);
    std::vector<Quantity> q;
    q.emplace_back("lambda_true", num(lambda_true));
    q.emplace_back("seed", integer(r.seed));
    q.emplace_back("n_runs", integer(r.n_runs));
    q.emplace_back("var_hat_m2", num(r.var_hat));
    q.emplace_back("lambda_hat", num(r.lambda_hat));
    q.emplace_back("z_score", num(r.z_score));
    out.text = quantity_csv(q);
    return out;
}

CommandOutput power(const RunConfig& cfg, int threads)
{
    CommandOutput out;
    warn_past_decoherence(cfg, out.warnings);
    const double lambda_true = resolve_lambda_true(cfg);
    const auto s = cfg.initial_state();
    const auto m = cfg.mission();
    const auto r = detection_power(cfg.particle(), s, m, lambda_true, cfg.z_crit, cfg.replications,
                                   cfg.seed, threads);
    std::vector<Quantity> q;
    q.emplace_back("lambda_true", num(lambda_true));
    q.emplace_back("lambda_min", num(lambda_min(s, m, cfg.z_multiplier)));
    q.emplace_back("z_crit", num(cfg.z_crit));
    q.emplace_back("seed", integer(cfg.seed));
    q.emplace_back("replications", integer(r.replications));
    q.emplace_back("n_runs", integer(m.n_runs()));
    q.emplace_back("mean_lambda_hat", num(r.mean_lambda_hat));
    q.emplace_back("sd_lambda_hat", num(r.sd_lambda_hat));
    q.emplace_back("mean_z", num(r.mean_z));
    q.emplace_back("sd_z", num(r.sd_z));
    q.emplace_back("detection_fraction", num(r.detection_fraction));
    out.text = quantity_csv(q);
    return out;
}

}  // namespace

std::span<const std::string_view> command_names() { return kCommands; }

CommandOutput execute_command(std::string_view name, const RunConfig& config, int threads)
{
    CommandOutput out;
    if (name == "feasibility")
        out = feasibility(config);
    else if (name == "dp")
        out = dp(config);
    else if (name == "csl")
        out = csl(config);
    else if (name == "simulate")
        out = simulate(config);
    else if (name == "power")
        out = power(config, threads);
    else if (name == "sweep-ratio")
        out.text = ratio_csv(sweep_ratios(config.sweep_spec(), threads));
    else if (name == "sweep-td")
        out.text = decoherence_time_csv(sweep_decoherence_time(config.sweep_spec(), threads));
    else
        throw ConfigError(0, "", "unknown command '" + std::string(name) + "'");
    out.text = metadata_header(name, config.canonical()) + out.text;
    return out;
}

int run_command(std::string_view name, const RunConfig& config, const CommandOptions& options,
                std::ostream& out, std::ostream& err)
{
    try {
        const auto result = execute_command(name, config, options.threads);
        for (const auto& w : result.warnings)
            err << "warning: " << w << '\n';
        if (options.out)
            write_file_atomically(*options.out, result.text);
        else
            out << result.text;
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const SolverError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace freefall
