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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freefall/csl_model.hpp"
#include "freefall/feasibility.hpp"
#include "freefall/particle.hpp"
#include "freefall/sweep.hpp"

namespace freefall {

/// Where the true Lambda for simulate/power comes from.
enum class LambdaSource { None, DP, CSL, Custom, Min };

enum class Spacing { Log, Linear };

/// Fully resolved run configuration, in SI units. Built only by parse_config,
/// which fills defaults for absent keys and validates every value.
struct RunConfig {
    std::optional<double> radius_m;  // one of radius_m / mass_amu
    std::optional<double> mass_amu;
    double density = 2200.0;

    double omega = 1e5;
    double nbar = 0.0;
    double squeeze = 1.0;

    double series_s = 30.0 * 86400.0;
    double expansion_s = 100.0;
    double sigma_meas_m = 100e-9;

    CslParams csl;
    std::optional<double> dp_separation_m;
    double z_multiplier = 1.0;

    std::uint64_t seed = 1;
    std::int64_t replications = 200;
    double z_crit = 1.0;
    LambdaSource lambda_source = LambdaSource::None;
    double lambda_value = 0.0;
    double lambda_scale = 1.0;

    double sweep_radius_min = 50e-9;
    double sweep_radius_max = 2e-6;
    int sweep_points = 50;
    std::vector<double> sweep_densities{2000.0, 5000.0};
    Spacing sweep_spacing = Spacing::Log;
    bool sweep_dp = true;
    bool sweep_csl = true;

    TestParticle particle() const;
    InitialState initial_state() const;
    MissionProfile mission() const;
    SweepSpec sweep_spec() const;

    /// Sorted `key = value` dump of every resolved setting; hashing it
    /// identifies the run.
    std::string canonical() const;
};

/// Keys accepted by parse_config, sorted.
std::span<const std::string_view> known_config_keys();

/// Parses `key = value` lines (`#` starts a comment, blank lines allowed).
/// `overrides` are `key=value` strings applied after the file and may replace
/// file keys. Throws ConfigError with the line number and key on unknown or
/// duplicate keys, malformed numbers and invalid values.
RunConfig parse_config(std::string_view text, std::span<const std::string> overrides = {});

}  // namespace freefall
