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

#include "freefall/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <system_error>

#include "freefall/errors.hpp"

namespace freefall {

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific, 16);
    if (ec != std::errc())
        throw Error("number formatting failed");
    return std::string(buf.data(), ptr);
}

std::uint64_t fnv1a64(std::string_view data) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string metadata_header(std::string_view command, std::string_view canonical_config)
{
    char hash[19];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config)));
    std::string out;
    out += "# tool: freefall ";
    out += kToolVersion;
    out += "\n# command: ";
    out += command;
    out += "\n# config_fnv1a64: ";
    out += hash;
    out += "\n# convention: variance decoherence term = 2*Lambda*hbar^2*t^3/(3*m^2)";
    out += "\n# convention: dp overlap parameter lambda = b/(2*a), b = coherent width";
    out += "\n# convention: lambda_csl uses the long-wavelength uniform-sphere form factor";
    out += "\n# convention: heating K/s = (dH/dt)/k_B";
    out += '\n';
    return out;
}

std::string ratio_csv(std::span<const SweepRow> rows)
{
    std::string out(kRatioCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        const std::optional<double> fields[] = {r.radius,     r.density,  r.lambda_dp, r.lambda_csl,
                                                r.lambda_min, r.ratio_dp, r.ratio_csl};
        for (std::size_t i = 0; i < std::size(fields); ++i) {
            if (i > 0)
                out += ',';
            if (fields[i])
                out += format_double(*fields[i]);
        }
        out += '\n';
    }
    return out;
}

std::string decoherence_time_csv(std::span<const SweepRow> rows)
{
    std::string out(kDecoherenceTimeCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += format_double(r.radius);
        out += ',';
        out += format_double(r.density);
        out += ',';
        out += format_double(r.t_d);
        out += '\n';
    }
    return out;
}

std::string quantity_csv(std::span<const Quantity> rows)
{
    std::string out = "quantity,value\n";
    for (const auto& [name, value] : rows) {
        out += name;
        out += ',';
        out += value;
        out += '\n';
    }
    return out;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw Error("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw Error("cannot rename output to '" + path.string() + "': " + ec.message());
    }
}

}  // namespace freefall
