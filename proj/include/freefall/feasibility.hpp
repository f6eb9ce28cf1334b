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

#pragma once

#include <cstdint>
#include <optional>

#include "freefall/csl_model.hpp"
#include "freefall/particle.hpp"

namespace freefall {

/// One measurement series: total time T split into N = floor(T/t) runs of
/// free expansion time t, each read out with position noise sigma.
class MissionProfile {
public:
    /// Throws DomainError unless 0 < t < T, N >= 2 and sigma >= 0.
    MissionProfile(double series_time, double expansion_time, double sigma_meas);

    double series_time() const noexcept { return series_time_; }
    double expansion_time() const noexcept { return expansion_time_; }
    double sigma_meas() const noexcept { return sigma_meas_; }
    std::int64_t n_runs() const noexcept { return n_runs_; }

private:
    double series_time_;
    double expansion_time_;
    double sigma_meas_;
    std::int64_t n_runs_;
};

enum class UncertaintyMode { Exact, Approximate };

/// Relative standard error of a Gaussian variance estimate:
/// sqrt(2/(N-1)) (Exact) or sqrt(2t/T) (Approximate, T >> t).
double fractional_variance_uncertainty(const MissionProfile& mission, UncertaintyMode mode);

/// Smallest Lambda whose t^3 term equals z_multiplier standard errors of the
/// ballistic variance: sqrt(1/(2 T t)) * 3 <p^2(0)> / hbar^2 * z_multiplier.
double lambda_min(const InitialState& state, const MissionProfile& mission,
                  double z_multiplier = 1.0);

/// Expansion time t* at which the absolute statistical uncertainty of the
/// variance, sqrt(2t/T) (<x^2(0)> + t^2 <p^2(0)>/m^2), equals sigma^2.
/// Above t* statistics dominates. Solved by bisection on [1e-6 s, T/2];
/// throws SolverError naming the dominating side if there is no crossing.
double measurement_crossover_time(const InitialState& state, const TestParticle& particle,
                                  const MissionProfile& mission);

struct DetectabilityReport {
    double lambda_min = 0;
    std::optional<double> lambda_dp;
    std::optional<double> ratio_dp;
    std::optional<double> lambda_csl;
    std::optional<double> ratio_csl;
};

/// Ratios above 1 are detectable at the chosen z_multiplier within one series.
DetectabilityReport detectability_report(const TestParticle& particle, const InitialState& state,
                                         const MissionProfile& mission, bool dp,
                                         const std::optional<CslParams>& csl,
                                         double z_multiplier = 1.0);

}  // namespace freefall
