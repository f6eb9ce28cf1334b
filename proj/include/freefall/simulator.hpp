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
#include <span>
#include <vector>

#include "freefall/feasibility.hpp"
#include "freefall/particle.hpp"

namespace freefall {

struct SeriesResult {
    double var_hat = 0;     // m^2, unbiased sample variance of the N positions
    double lambda_hat = 0;  // m^-2 s^-1, not clamped; negative values are estimator noise
    double z_score = 0;     // excess over the Lambda = 0 expectation in standard errors
    std::int64_t n_runs = 0;
    std::uint64_t seed = 0;
    std::uint64_t substream = 0;
};

struct PowerResult {
    double mean_lambda_hat = 0;
    double sd_lambda_hat = 0;
    double mean_z = 0;
    double sd_z = 0;
    double detection_fraction = 0;
    std::int64_t replications = 0;
};

/// One release-measure-repeat series. Draws N = floor(T/t) positions from
/// Normal(0, <x^2(t)>_Lambda + sigma^2) on the Philox stream (seed, substream),
/// then inverts the t^3 term of the variance law to estimate Lambda.
SeriesResult simulate_series(const TestParticle& particle, const InitialState& state,
                             const MissionProfile& mission, double lambda_true,
                             std::uint64_t seed, std::uint64_t substream = 0);

/// Mean/sd of lambda_hat and z over the series (index order), and the fraction
/// with z >= z_crit.
PowerResult summarize_power(std::span<const SeriesResult> series, double z_crit);

/// `replications` independent series; replication i uses substream i.
/// Parallel over replications; results are stored by index, so the output does
/// not depend on the thread count. threads <= 0 uses the OpenMP default.
std::vector<SeriesResult> run_replications(const TestParticle& particle, const InitialState& state,
                                           const MissionProfile& mission, double lambda_true,
                                           std::int64_t replications, std::uint64_t seed,
                                           int threads = 0);

PowerResult detection_power(const TestParticle& particle, const InitialState& state,
                            const MissionProfile& mission, double lambda_true, double z_crit,
                            std::int64_t replications, std::uint64_t seed, int threads = 0);

namespace reference {

// Serial loops kept as the baseline for the parallel kernels above.

std::vector<SeriesResult> run_replications(const TestParticle& particle, const InitialState& state,
                                           const MissionProfile& mission, double lambda_true,
                                           std::int64_t replications, std::uint64_t seed);

PowerResult detection_power(const TestParticle& particle, const InitialState& state,
                            const MissionProfile& mission, double lambda_true, double z_crit,
                            std::int64_t replications, std::uint64_t seed);

}  // namespace reference

}  // namespace freefall
