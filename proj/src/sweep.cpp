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

#include "freefall/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "freefall/dp_model.hpp"
#include "freefall/errors.hpp"
#include "freefall/parallel.hpp"

namespace freefall {

namespace {

std::string row_context(double radius, double density)
{
    return " (radius " + std::to_string(radius) + " m, density " + std::to_string(density) +
           " kg/m^3)";
}

template <typename RowFn>
SweepRow guarded_row(RowFn&& fn, const SweepSpec& spec, double radius, double density)
{
    try {
        return fn(spec, radius, density);
    } catch (const DomainError& e) {
        throw DomainError(e.what() + row_context(radius, density));
    }
}

template <typename RowFn>
std::vector<SweepRow> run_parallel(const SweepSpec& spec, int threads, RowFn fn)
{
    spec.validate();
    const auto nr = static_cast<std::int64_t>(spec.radii.size());
    const auto total = nr * static_cast<std::int64_t>(spec.densities.size());
    std::vector<SweepRow> rows(static_cast<std::size_t>(total));
    parallel::for_each_index(total, threads, [&](std::int64_t k) {
        const double density = spec.densities[static_cast<std::size_t>(k / nr)];
        const double radius = spec.radii[static_cast<std::size_t>(k % nr)];
        rows[static_cast<std::size_t>(k)] = guarded_row(fn, spec, radius, density);
    });
    return rows;
}

template <typename RowFn>
std::vector<SweepRow> run_serial(const SweepSpec& spec, RowFn fn)
{
    spec.validate();
    std::vector<SweepRow> rows;
    rows.reserve(spec.radii.size() * spec.densities.size());
    for (double density : spec.densities)
        for (double radius : spec.radii)
            rows.push_back(guarded_row(fn, spec, radius, density));
    return rows;
}

}  // namespace

void SweepSpec::validate() const
{
    if (radii.empty())
        throw DomainError("sweep needs at least one radius");
    if (densities.empty())
        throw DomainError("sweep needs at least one density");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!std::isfinite(radii[i]) || radii[i] <= 0.0)
            throw DomainError("sweep radii must be positive and finite");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw DomainError("sweep radii must be strictly increasing");
    }
    for (double d : densities)
        if (!std::isfinite(d) || d <= 0.0)
            throw DomainError("sweep densities must be positive and finite");
    if (csl)
        csl->validate();
}

std::vector<double> log_spaced(double lo, double hi, int points)
{
    if (!(lo > 0.0) || !(hi >= lo) || points < 1 || (points > 1 && !(hi > lo)))
        throw DomainError("log spacing needs 0 < lo < hi and points >= 1");
    if (points == 1)
        return {lo};
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i)
        out[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> linear_spaced(double lo, double hi, int points)
{
    if (!(lo > 0.0) || points < 1 || (points > 1 && !(hi > lo)))
        throw DomainError("linear spacing needs 0 < lo < hi and points >= 1");
    if (points == 1)
        return {lo};
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = (hi - lo) / (points - 1);
    for (int i = 0; i < points; ++i)
        out[static_cast<std::size_t>(i)] = lo + step * i;
    out.back() = hi;
    return out;
}

SweepRow ratio_row(const SweepSpec& spec, double radius, double density)
{
    const auto particle = make_particle(radius, density);
    const auto state = make_initial_state(particle, spec.omega, spec.nbar, spec.squeeze);
    const auto report =
        detectability_report(particle, state, spec.mission, spec.dp, spec.csl, spec.z_multiplier);

    SweepRow row;
    row.radius = radius;
    row.density = density;
    row.lambda_min = report.lambda_min;
    row.lambda_dp = report.lambda_dp;
    row.ratio_dp = report.ratio_dp;
    row.lambda_csl = report.lambda_csl;
    row.ratio_csl = report.ratio_csl;
    return row;
}

SweepRow decoherence_time_row(const SweepSpec& spec, double radius, double density)
{
    SweepRow row = ratio_row(spec, radius, density);
    const auto particle = make_particle(radius, density);
    const auto state = make_initial_state(particle, spec.omega, spec.nbar, spec.squeeze);
    try {
        row.t_d = nongaussian_time(particle, state);
    } catch (const SolverError&) {
        row.t_d = std::numeric_limits<double>::infinity();
    }
    return row;
}

std::vector<SweepRow> sweep_ratios(const SweepSpec& spec, int threads)
{
    return run_parallel(spec, threads, ratio_row);
}

std::vector<SweepRow> sweep_decoherence_time(const SweepSpec& spec, int threads)
{
    return run_parallel(spec, threads, decoherence_time_row);
}

namespace reference {

std::vector<SweepRow> sweep_ratios(const SweepSpec& spec) { return run_serial(spec, ratio_row); }

std::vector<SweepRow> sweep_decoherence_time(const SweepSpec& spec)
{
    return run_serial(spec, decoherence_time_row);
}

}  // namespace reference

}  // namespace freefall
