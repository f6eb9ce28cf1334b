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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freefall/commands.hpp"
#include "freefall/config.hpp"
#include "freefall/errors.hpp"
#include "freefall/report.hpp"

int main(int argc, char** argv)
{
    using namespace freefall;

    CLI::App app{"Feasibility analysis and Monte Carlo simulation of free-fall wave-packet "
                 "expansion tests of gravitational and CSL decoherence"};
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string command;
    std::string config_path;
    std::string out_path;
    std::vector<std::string> overrides;
    std::string seed;
    int threads = 0;

    std::vector<std::string> names(command_names().begin(), command_names().end());
    app.add_option("command", command, "Analysis to run")
        ->required()
        ->check(CLI::IsMember(names));
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--seed", seed, "Override sim.seed (unsigned 64-bit)");
    app.add_option("--set", overrides, "Override a config key, key=value (repeatable)");
    app.add_option("--threads", threads, "Worker threads for sweeps and power (0 = default)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    std::string text;
    if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot read config file '" << config_path << "'\n";
            return kExitConfig;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (!seed.empty())
        overrides.push_back("sim.seed=" + seed);

    RunConfig config;
    try {
        config = parse_config(text, overrides);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    CommandOptions options;
    if (!out_path.empty())
        options.out = out_path;
    options.threads = threads;
    return run_command(command, config, options, std::cout, std::cerr);
}
