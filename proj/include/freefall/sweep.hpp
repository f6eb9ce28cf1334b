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

#include <optional>
#include <vector>

#include "freefall/csl_model.hpp"
#include "freefall/feasibility.hpp"

namespace freefall {

struct SweepSpec {
    std::vector<double> radii;      // m, strictly increasing
    std::vector<double> densities;  // kg m^-3
    double omega = 1e5;             // rad/s
    double nbar = 0.0;
    double squeeze = 1.0;
    MissionProfile mission{30.0 * 86400.0, 100.0, 100e-9};
    bool dp = true;
    std::optional<CslParams> csl = CslParams{};
    double z_multiplier = 1.0;

    void validate() const;
};

/// t_d is +inf when the solver finds no root within its horizon.
struct SweepRow {
    double radius = 0;
    double density = 0;
    std::optional<double> lambda_dp;  // empty when the model is not swept
    std::optional<double> lambda_csl;
    double lambda_min = 0;
    std::optional<double> ratio_dp;
    std::optional<double> ratio_csl;
    double t_d = 0;
};

std::vector<double> log_spaced(double lo, double hi, int points);
std::vector<double> linear_spaced(double lo, double hi, int points);

/// Detectability of DP/CSL relative to Lambda_min, one row per (density, radius)
/// ordered density-major. Domain errors are rethrown with the row's radius
/// and density attached.
std::vector<SweepRow> sweep_ratios(const SweepSpec& spec, int threads = 0);

/// Non-Gaussianity onset time per (density, radius), same ordering.
std::vector<SweepRow> sweep_decoherence_time(const SweepSpec& spec, int threads = 0);

/// Per-row kernels shared by the parallel and serial sweeps.
SweepRow ratio_row(const SweepSpec& spec, double radius, double density);
SweepRow decoherence_time_row(const SweepSpec& spec, double radius, double density);

namespace reference {
std::vector<SweepRow> sweep_ratios(const SweepSpec& spec);
std::vector<SweepRow> sweep_decoherence_time(const SweepSpec& spec);
}  // namespace reference

}  // namespace freefall
