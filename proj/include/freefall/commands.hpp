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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freefall/config.hpp"

namespace freefall {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitDomain = 3,
    kExitSolver = 4,
};

std::span<const std::string_view> command_names();

struct CommandOutput {
    std::string text;
    std::vector<std::string> warnings;
};

/// Runs one command and returns its full report (metadata header included).
/// Throws ConfigError for an unknown command, DomainError / SolverError from
/// the models.
CommandOutput execute_command(std::string_view name, const RunConfig& config, int threads = 0);

struct CommandOptions {
    std::optional<std::filesystem::path> out;
    int threads = 0;
};

/// execute_command plus output routing (file via atomic rename, or `out`) and
/// error-to-exit-code mapping. Diagnostics go to `err`.
int run_command(std::string_view name, const RunConfig& config, const CommandOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace freefall
