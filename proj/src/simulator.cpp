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

#include "freefall/simulator.hpp"

#include <cmath>
#include <string>

#include "freefall/constants.hpp"
#include "freefall/errors.hpp"
#include "freefall/parallel.hpp"
#include "freefall/rng.hpp"
#include "freefall/wavepacket.hpp"


namespace freefall {

namespace {

void validate_power_args(double lambda_true, std::int64_t replications)
{
    if (!std::isfinite(lambda_true) || lambda_true < 0.0)
        throw DomainError("lambda_true must be finite and >= 0");
    if (replications < 2)
        throw DomainError("detection power needs at least 2 replications");
}

}  // namespace

SeriesResult simulate_series(const TestParticle& particle, const InitialState& state,
                             const MissionProfile& mission, double lambda_true,
                             std::uint64_t seed, std::uint64_t substream)
{
    if (!std::isfinite(lambda_true) || lambda_true < 0.0)
        throw DomainError("lambda_true must be finite and >= 0");
    const std::int64_t n = mission.n_runs();
    if (n < 2)
        throw DomainError("a series needs at least 2 runs");

    const double t = mission.expansion_time();
    const double noise = mission.sigma_meas() * mission.sigma_meas();
    const double null_variance = ballistic_variance(state, particle, t);
    const double true_variance =
        null_variance + decoherence_variance_term(particle, lambda_true, t) + noise;
    const double sd = std::sqrt(true_variance);

    // Welford update; the mean is estimated so the divisor N-1 is unbiased.
    rng::NormalStream normals(seed, substream);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double x = sd * normals.next();
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }

    SeriesResult out;
    out.n_runs = n;
    out.seed = seed;
    out.substream = substream;
    out.var_hat = m2 / static_cast<double>(n - 1);

    const double hbar = constants().hbar;
    const double m = particle.mass();
    out.lambda_hat =
        (out.var_hat - noise - null_variance) * 3.0 * m * m / (2.0 * hbar * hbar * t * t * t);

    const double expected = null_variance + noise;
    out.z_score =
        (out.var_hat - expected) / (std::sqrt(2.0 / static_cast<double>(n - 1)) * expected);
    return out;
}

PowerResult summarize_power(std::span<const SeriesResult> series, double z_crit)
{
    if (!std::isfinite(z_crit) || z_crit <= 0.0)
        throw DomainError("z_crit must be positive");
    if (series.size() < 2)
        throw DomainError("detection power needs at least 2 replications");

    const double count = static_cast<double>(series.size());
    double sum_l = 0.0;
    double sum_z = 0.0;
    std::int64_t detected = 0;
    for (const auto& s : series) {
        sum_l += s.lambda_hat;
        sum_z += s.z_score;
        if (s.z_score >= z_crit)
            ++detected;
    }
    const double mean_l = sum_l / count;
    const double mean_z = sum_z / count;
    double ss_l = 0.0;
    double ss_z = 0.0;
    for (const auto& s : series) {
        ss_l += (s.lambda_hat - mean_l) * (s.lambda_hat - mean_l);
        ss_z += (s.z_score - mean_z) * (s.z_score - mean_z);
    }

    PowerResult out;
    out.mean_lambda_hat = mean_l;
    out.sd_lambda_hat = std::sqrt(ss_l / (count - 1.0));
    out.mean_z = mean_z;
    out.sd_z = std::sqrt(ss_z / (count - 1.0));
    out.detection_fraction = static_cast<double>(detected) / count;
    out.replications = static_cast<std::int64_t>(series.size());
    return out;
}

std::vector<SeriesResult> run_replications(const TestParticle& particle, const InitialState& state,
                                           const MissionProfile& mission, double lambda_true,
                                           std::int64_t replications, std::uint64_t seed,
                                           int threads)
{
    validate_power_args(lambda_true, replications);
    std::vector<SeriesResult> results(static_cast<std::size_t>(replications));

    parallel::for_each_index(replications, threads, [&](std::int64_t i) {
        results[static_cast<std::size_t>(i)] = simulate_series(
            particle, state, mission, lambda_true, seed, static_cast<std::uint64_t>(i));
    });
    return results;
}

PowerResult detection_power(const TestParticle& particle, const InitialState& state,
                            const MissionProfile& mission, double lambda_true, double z_crit,
                            std::int64_t replications, std::uint64_t seed, int threads)
{
    if (!std::isfinite(z_crit) || z_crit <= 0.0)
        throw DomainError("z_crit must be positive");
    const auto series =
        run_replications(particle, state, mission, lambda_true, replications, seed, threads);
    return summarize_power(series, z_crit);
}

namespace reference {

std::vector<SeriesResult> run_replications(const TestParticle& particle, const InitialState& state,
                                           const MissionProfile& mission, double lambda_true,
                                           std::int64_t replications, std::uint64_t seed)
{
    validate_power_args(lambda_true, replications);
    std::vector<SeriesResult> results;
    results.reserve(static_cast<std::size_t>(replications));
    for (std::int64_t i = 0; i < replications; ++i)
        results.push_back(simulate_series(particle, state, mission, lambda_true, seed,
                                          static_cast<std::uint64_t>(i)));
    return results;
}

PowerResult detection_power(const TestParticle& particle, const InitialState& state,
                            const MissionProfile& mission, double lambda_true, double z_crit,
                            std::int64_t replications, std::uint64_t seed)
{
    if (!std::isfinite(z_crit) || z_crit <= 0.0)
        throw DomainError("z_crit must be positive");
    const auto series =
        reference::run_replications(particle, state, mission, lambda_true, replications, seed);
    return summarize_power(series, z_crit);
}

}  // namespace reference

}  // namespace freefall
