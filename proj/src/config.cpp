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

#include "freefall/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "freefall/constants.hpp"
#include "freefall/errors.hpp"
#include "freefall/report.hpp"

namespace freefall {

namespace {

constexpr std::string_view kKeys[] = {
    "mission.expansion_s",
    "mission.series_days",
    "mission.series_s",
    "mission.sigma_meas_m",
    "models.csl.rate_hz",
    "models.csl.rc_m",
    "models.dp.separation_m",
    "particle.density_kg_m3",
    "particle.mass_amu",
    "particle.radius_m",
    "sim.lambda_scale",
    "sim.lambda_source",
    "sim.lambda_value",
    "sim.replications",
    "sim.seed",
    "sim.z_crit",
    "stats.z_multiplier",
    "sweep.densities",
    "sweep.models",
    "sweep.radius_max_m",
    "sweep.radius_min_m",
    "sweep.radius_points",
    "sweep.spacing",
    "trap.freq_hz",
    "trap.nbar",
    "trap.omega_rad_s",
    "trap.squeeze",
};

struct Entry {
    std::string value;
    int line;
};

using EntryMap = std::map<std::string, Entry, std::less<>>;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key)
{
    return std::binary_search(std::begin(kKeys), std::end(kKeys), key);
}

bool valid_key_syntax(std::string_view key)
{
    return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
    });
}

std::pair<std::string, std::string> split_assignment(std::string_view text, int line)
{
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError(line, "", "expected 'key = value', got '" + std::string(text) + "'");
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (!valid_key_syntax(key))
        throw ConfigError(line, std::string(key), "malformed key");
    if (!is_known(key))
        throw ConfigError(line, std::string(key), "unknown key");
    if (value.empty())
        throw ConfigError(line, std::string(key), "missing value");
    return {std::string(key), std::string(value)};
}

class Resolver {
public:
    explicit Resolver(const EntryMap& entries) : entries_(entries) {}

    bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

    int line_of(std::string_view key) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    [[noreturn]] void fail(std::string_view key, const std::string& message) const
    {
        throw ConfigError(line_of(key), std::string(key), message);
    }

    const std::string* raw(std::string_view key) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second.value;
    }

    double parse_double(std::string_view key, std::string_view text) const
    {
        if (!text.empty() && text.front() == '+')
            text.remove_prefix(1);
        double value = 0.0;
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc() || ptr != end || text.empty())
            fail(key, "malformed number '" + std::string(text) + "'");
        if (!std::isfinite(value))
            fail(key, "value must be finite");
        return value;
    }

    template <typename Int>
    Int parse_int(std::string_view key) const
    {
        const std::string_view text = *raw(key);
        Int value = 0;
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc() || ptr != end)
            fail(key, "malformed integer '" + std::string(text) + "'");
        return value;
    }

    std::optional<double> maybe_double(std::string_view key) const
    {
        const auto* v = raw(key);
        if (!v)
            return std::nullopt;
        return parse_double(key, *v);
    }

    double positive(std::string_view key, double fallback) const
    {
        const auto v = maybe_double(key);
        if (v && !(*v > 0.0))
            fail(key, "must be > 0");
        return v.value_or(fallback);
    }

    double at_least(std::string_view key, double fallback, double bound) const
    {
        const auto v = maybe_double(key);
        if (v && !(*v >= bound))
            fail(key, "must be >= " + format_double(bound));
        return v.value_or(fallback);
    }

    std::vector<std::string_view> list(std::string_view key) const
    {
        std::vector<std::string_view> items;
        std::string_view rest = *raw(key);
        while (true) {
            const auto comma = rest.find(',');
            const auto item = trim(rest.substr(0, comma));
            if (item.empty())
                fail(key, "empty list element");
            items.push_back(item);
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        return items;
    }

    void exclusive(std::string_view a, std::string_view b) const
    {
        if (has(a) && has(b))
            fail(b, "conflicts with " + std::string(a) + "; give only one");
    }

private:
    const EntryMap& entries_;
};

void resolve(const Resolver& r, RunConfig& cfg)
{
    r.exclusive("particle.radius_m", "particle.mass_amu");
    r.exclusive("trap.omega_rad_s", "trap.freq_hz");
    r.exclusive("mission.series_days", "mission.series_s");

    if (r.has("particle.radius_m"))
        cfg.radius_m = r.positive("particle.radius_m", 0.0);
    if (r.has("particle.mass_amu"))
        cfg.mass_amu = r.positive("particle.mass_amu", 0.0);
    cfg.density = r.positive("particle.density_kg_m3", cfg.density);

    if (r.has("trap.freq_hz"))
        cfg.omega = units::kTwoPi * r.positive("trap.freq_hz", 0.0);
    else
        cfg.omega = r.positive("trap.omega_rad_s", cfg.omega);
    cfg.nbar = r.at_least("trap.nbar", cfg.nbar, 0.0);
    cfg.squeeze = r.at_least("trap.squeeze", cfg.squeeze, 1.0);

    if (r.has("mission.series_days"))
        cfg.series_s = units::kSecondsPerDay * r.positive("mission.series_days", 0.0);
    else
        cfg.series_s = r.positive("mission.series_s", cfg.series_s);
    cfg.expansion_s = r.positive("mission.expansion_s", cfg.expansion_s);
    cfg.sigma_meas_m = r.at_least("mission.sigma_meas_m", cfg.sigma_meas_m, 0.0);

    cfg.csl.rate = r.positive("models.csl.rate_hz", cfg.csl.rate);
    cfg.csl.r_c = r.positive("models.csl.rc_m", cfg.csl.r_c);
    if (r.has("models.dp.separation_m"))
        cfg.dp_separation_m = r.at_least("models.dp.separation_m", 0.0, 0.0);
    cfg.z_multiplier = r.positive("stats.z_multiplier", cfg.z_multiplier);

    if (r.has("sim.seed"))
        cfg.seed = r.parse_int<std::uint64_t>("sim.seed");
    if (r.has("sim.replications")) {
        cfg.replications = r.parse_int<std::int64_t>("sim.replications");
        if (cfg.replications < 2)
            r.fail("sim.replications", "must be >= 2");
    }
    cfg.z_crit = r.positive("sim.z_crit", cfg.z_crit);

    if (const auto* src = r.raw("sim.lambda_source")) {
        static const std::map<std::string_view, LambdaSource> names{
            {"none", LambdaSource::None}, {"dp", LambdaSource::DP},
            {"csl", LambdaSource::CSL},   {"custom", LambdaSource::Custom},
            {"min", LambdaSource::Min},
        };
        const auto it = names.find(*src);
        if (it == names.end())
            r.fail("sim.lambda_source", "expected one of none, dp, csl, custom, min");
        cfg.lambda_source = it->second;
    }
    if (r.has("sim.lambda_value")) {
        if (cfg.lambda_source != LambdaSource::Custom)
            r.fail("sim.lambda_value", "only valid with sim.lambda_source = custom");
        cfg.lambda_value = r.at_least("sim.lambda_value", 0.0, 0.0);
    } else if (cfg.lambda_source == LambdaSource::Custom) {
        r.fail("sim.lambda_source", "custom source requires sim.lambda_value");
    }
    cfg.lambda_scale = r.at_least("sim.lambda_scale", cfg.lambda_scale, 0.0);

    cfg.sweep_radius_min = r.positive("sweep.radius_min_m", cfg.sweep_radius_min);
    cfg.sweep_radius_max = r.positive("sweep.radius_max_m", cfg.sweep_radius_max);
    if (r.has("sweep.radius_points")) {
        cfg.sweep_points = r.parse_int<int>("sweep.radius_points");
        if (cfg.sweep_points < 1)
            r.fail("sweep.radius_points", "must be >= 1");
    }
    if (cfg.sweep_points > 1 && !(cfg.sweep_radius_max > cfg.sweep_radius_min))
        r.fail(r.has("sweep.radius_max_m") ? "sweep.radius_max_m" : "sweep.radius_min_m",
               "sweep.radius_max_m must exceed sweep.radius_min_m");
    if (r.has("sweep.densities")) {
        cfg.sweep_densities.clear();
        for (auto item : r.list("sweep.densities")) {
            const double d = r.parse_double("sweep.densities", item);
            if (!(d > 0.0))
                r.fail("sweep.densities", "densities must be > 0");
            cfg.sweep_densities.push_back(d);
        }
    }
    if (const auto* spacing = r.raw("sweep.spacing")) {
        if (*spacing == "log")
            cfg.sweep_spacing = Spacing::Log;
        else if (*spacing == "linear")
            cfg.sweep_spacing = Spacing::Linear;
        else
            r.fail("sweep.spacing", "expected log or linear");
    }
    if (r.has("sweep.models")) {
        cfg.sweep_dp = cfg.sweep_csl = false;
        for (auto item : r.list("sweep.models")) {
            if (item == "dp")
                cfg.sweep_dp = true;
            else if (item == "csl")
                cfg.sweep_csl = true;
            else
                r.fail("sweep.models", "unknown model '" + std::string(item) + "'");
        }
    }

    // Cross-field invariants, attributed to the key most likely at fault.
    try {
        (void)cfg.mission();
    } catch (const DomainError& e) {
        const char* key = r.has("mission.expansion_s") ? "mission.expansion_s"
                          : r.has("mission.series_s")  ? "mission.series_s"
                                                       : "mission.series_days";
        r.fail(key, e.what());
    }
}

}  // namespace

std::span<const std::string_view> known_config_keys() { return kKeys; }

TestParticle RunConfig::particle() const
{
    if (mass_amu)
        return particle_from_mass(*mass_amu * constants().amu, density);
    return make_particle(radius_m.value_or(200e-9), density);
}

InitialState RunConfig::initial_state() const
{
    return make_initial_state(particle(), omega, nbar, squeeze);
}

MissionProfile RunConfig::mission() const { return {series_s, expansion_s, sigma_meas_m}; }

SweepSpec RunConfig::sweep_spec() const
{
    SweepSpec spec;
    spec.radii = sweep_spacing == Spacing::Log
                     ? log_spaced(sweep_radius_min, sweep_radius_max, sweep_points)
                     : linear_spaced(sweep_radius_min, sweep_radius_max, sweep_points);
    spec.densities = sweep_densities;
    spec.omega = omega;
    spec.nbar = nbar;
    spec.squeeze = squeeze;
    spec.mission = mission();
    spec.dp = sweep_dp;
    spec.csl = sweep_csl ? std::optional<CslParams>(csl) : std::nullopt;
    spec.z_multiplier = z_multiplier;
    return spec;
}

std::string RunConfig::canonical() const
{
    static constexpr std::string_view source_names[] = {"none", "dp", "csl", "custom", "min"};
    std::ostringstream out;
    auto put = [&](std::string_view key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    put("mission.expansion_s", format_double(expansion_s));
    put("mission.series_s", format_double(series_s));
    put("mission.sigma_meas_m", format_double(sigma_meas_m));
    put("models.csl.rate_hz", format_double(csl.rate));
    put("models.csl.rc_m", format_double(csl.r_c));
    put("models.dp.separation_m", dp_separation_m ? format_double(*dp_separation_m) : "auto");
    put("particle.density_kg_m3", format_double(density));
    put("particle.mass_amu", mass_amu ? format_double(*mass_amu) : "unset");
    put("particle.radius_m", radius_m ? format_double(*radius_m) : (mass_amu ? "unset" : "default"));
    put("sim.lambda_scale", format_double(lambda_scale));
    put("sim.lambda_source", std::string(source_names[static_cast<int>(lambda_source)]));
    put("sim.lambda_value", format_double(lambda_value));
    put("sim.replications", std::to_string(replications));
    put("sim.seed", std::to_string(seed));
    put("sim.z_crit", format_double(z_crit));
    put("stats.z_multiplier", format_double(z_multiplier));
    std::string densities;
    for (std::size_t i = 0; i < sweep_densities.size(); ++i)
        densities += (i ? "," : "") + format_double(sweep_densities[i]);
    put("sweep.densities", densities);
    put("sweep.models", std::string(sweep_dp ? "dp" : "") + (sweep_dp && sweep_csl ? "," : "") +
                            (sweep_csl ? "csl" : ""));
    put("sweep.radius_max_m", format_double(sweep_radius_max));
    put("sweep.radius_min_m", format_double(sweep_radius_min));
    put("sweep.radius_points", std::to_string(sweep_points));
    put("sweep.spacing", sweep_spacing == Spacing::Log ? "log" : "linear");
    put("trap.nbar", format_double(nbar));
    put("trap.omega_rad_s", format_double(omega));
    put("trap.squeeze", format_double(squeeze));
    return out.str();
}

RunConfig parse_config(std::string_view text, std::span<const std::string> overrides)
{
    EntryMap entries;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        auto [key, value] = split_assignment(line, line_no);
        if (const auto it = entries.find(key); it != entries.end())
            throw ConfigError(line_no, key,
                              "duplicate key (first set on line " +
                                  std::to_string(it->second.line) + ")");
        entries.emplace(std::move(key), Entry{std::move(value), line_no});
    }

    for (const auto& ov : overrides) {
        auto [key, value] = split_assignment(trim(ov), 0);
        entries.insert_or_assign(std::move(key), Entry{std::move(value), 0});
    }
    // An override of one spelling replaces the alternative spelling from the file.
    auto drop_alternative = [&](const char* a, const char* b) {
        const auto ia = entries.find(a);
        const auto ib = entries.find(b);
        if (ia != entries.end() && ib != entries.end()) {
            if (ia->second.line == 0 && ib->second.line != 0)
                entries.erase(ib);
            else if (ib->second.line == 0 && ia->second.line != 0)
                entries.erase(ia);
        }
    };
    drop_alternative("particle.radius_m", "particle.mass_amu");
    drop_alternative("trap.omega_rad_s", "trap.freq_hz");
    drop_alternative("mission.series_days", "mission.series_s");

    RunConfig cfg;
    resolve(Resolver(entries), cfg);
    return cfg;
}

}  // namespace freefall
