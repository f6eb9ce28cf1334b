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

#include "freefall/feasibility.hpp"

#include <cmath>
#include <string>

#include "freefall/constants.hpp"
#include "freefall/dp_model.hpp"
#include "freefall/errors.hpp"
#include "freefall/roots.hpp"
#include "freefall/wavepacket.hpp"

namespace freefall {

MissionProfile::MissionProfile(double series_time, double expansion_time, double sigma_meas)
    : series_time_(series_time), expansion_time_(expansion_time), sigma_meas_(sigma_meas), n_runs_(0)
{
    if (!std::isfinite(series_time) || !std::isfinite(expansion_time) || expansion_time <= 0.0 ||
        expansion_time >= series_time)
        throw DomainError("mission requires 0 < expansion time < series time");
    if (!std::isfinite(sigma_meas) || sigma_meas < 0.0)
        throw DomainError("measurement noise sigma must be finite and >= 0");
    const double runs = std::floor(series_time / expansion_time);
    if (runs < 2.0)
        throw DomainError("mission must allow at least 2 runs, got " + std::to_string(runs));
    if (runs > 9.0e15)
        throw DomainError("mission run count is not representable");
    n_runs_ = static_cast<std::int64_t>(runs);
}

double fractional_variance_uncertainty(const MissionProfile& mission, UncertaintyMode mode)
{
    if (mode == UncertaintyMode::Approximate)
        return std::sqrt(2.0 * mission.expansion_time() / mission.series_time());
    return std::sqrt(2.0 / static_cast<double>(mission.n_runs() - 1));
}

double lambda_min(const InitialState& state, const MissionProfile& mission, double z_multiplier)
{
    if (!std::isfinite(z_multiplier) || z_multiplier <= 0.0)
        throw DomainError("z multiplier must be positive");
    const double hbar = constants().hbar;
    const double T = mission.series_time();
    const double t = mission.expansion_time();
    return z_multiplier * std::sqrt(1.0 / (2.0 * T * t)) * 3.0 * state.momentum_variance() /
           (hbar * hbar);
}

double measurement_crossover_time(const InitialState& state, const TestParticle& particle,
                                  const MissionProfile& mission)
{
    const double sigma = mission.sigma_meas();
    if (!(sigma > 0.0))
        throw DomainError("crossover time needs a positive measurement noise sigma");
    const double T = mission.series_time();
    const double noise = sigma * sigma;

    auto excess = [&](double t) {
        return std::sqrt(2.0 * t / T) * ballistic_variance(state, particle, t) - noise;
    };

    const double lo = 1e-6;
    const double hi = 0.5 * T;
    if (excess(lo) >= 0.0)
        throw SolverError("no crossover: statistical uncertainty dominates already at 1e-6 s");
    if (excess(hi) <= 0.0)
        throw SolverError("no crossover: measurement noise dominates up to T/2");
    return roots::bisect(excess, lo, hi);
}

DetectabilityReport detectability_report(const TestParticle& particle, const InitialState& state,
                                         const MissionProfile& mission, bool dp,
                                         const std::optional<CslParams>& csl, double z_multiplier)
{
    DetectabilityReport report;
    report.lambda_min = lambda_min(state, mission, z_multiplier);
    if (dp) {
        report.lambda_dp = lambda_dp(particle);
        report.ratio_dp = *report.lambda_dp / report.lambda_min;
    }
    if (csl) {
        report.lambda_csl = lambda_csl(particle, *csl);
        report.ratio_csl = *report.lambda_csl / report.lambda_min;
    }
    return report;
}

}  // namespace freefall
