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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freefall/sweep.hpp"

namespace freefall {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Shortest-trip formatting used for every number the tool prints:
/// scientific notation with 17 significant digits ("1.0000000000000000e+05"),
/// or "inf", "-inf", "nan". Locale-independent; parses back to the same double.
std::string format_double(double value);

std::uint64_t fnv1a64(std::string_view data) noexcept;

/// `# key: value` lines recording tool version, command, config hash and the
/// modelling conventions the numbers depend on.
std::string metadata_header(std::string_view command, std::string_view canonical_config);

inline constexpr std::string_view kRatioCsvHeader =
    "radius_m,density_kg_m3,lambda_dp,lambda_csl,lambda_min,ratio_dp,ratio_csl";
inline constexpr std::string_view kDecoherenceTimeCsvHeader = "radius_m,density_kg_m3,t_d_s";

std::string ratio_csv(std::span<const SweepRow> rows);
std::string decoherence_time_csv(std::span<const SweepRow> rows);

using Quantity = std::pair<std::string, std::string>;
std::string quantity_csv(std::span<const Quantity> rows);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed write never leaves a partial file behind.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace freefall
