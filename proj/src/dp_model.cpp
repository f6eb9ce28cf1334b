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

#include "freefall/dp_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "freefall/constants.hpp"
#include "freefall/errors.hpp"
#include "freefall/roots.hpp"
#include "freefall/wavepacket.hpp"

namespace freefall {

namespace {

constexpr double kHorizon = 1e12;
constexpr double kSolveLow = 1e-6;

void require_separation(double b)
{
    if (!std::isfinite(b) || b < 0.0)
        throw DomainError("superposition size b must be finite and >= 0, got " +
                          std::to_string(b));
}

double energy_scale(const TestParticle& p)
{
    return p.mass() * p.mass() * constants().G / p.radius();
}

}  // namespace

namespace self_energy_shape {

double overlapping(double l) noexcept
{
    const double l2 = l * l;
    return l2 * (2.0 - 1.5 * l + 0.2 * l2 * l);
}

double separated(double l) noexcept { return 1.2 - 0.5 / l; }

double overlapping_slope(double l) noexcept { return 4.0 * l - 4.5 * l * l + l * l * l * l; }

double separated_slope(double l) noexcept { return 0.5 / (l * l); }

double piecewise(double l) noexcept { return l <= 1.0 ? overlapping(l) : separated(l); }

}  // namespace self_energy_shape

double overlap_parameter(const TestParticle& particle, double b)
{
    require_separation(b);
    return b / (2.0 * particle.radius());
}

double grav_self_energy(const TestParticle& particle, double b)
{
    return energy_scale(particle) * self_energy_shape::piecewise(overlap_parameter(particle, b));
}

double decoherence_timescale(double E_G)
{
    if (std::isnan(E_G) || E_G < 0.0)
        throw DomainError("self-energy must be >= 0, got " + std::to_string(E_G));
    if (E_G == 0.0)
        return std::numeric_limits<double>::infinity();
    return constants().hbar / E_G;
}

double pairwise_decoherence_rate(const TestParticle& particle, double b)
{
    return grav_self_energy(particle, b) / constants().hbar;
}

double lambda_dp(const TestParticle& particle)
{
    const double m = particle.mass();
    const double a = particle.radius();
    return constants().G * m * m / (2.0 * a * a * a * constants().hbar);
}

DpHeating dp_heating(const TestParticle& particle)
{
    const double a = particle.radius();
    const double watts = particle.mass() * constants().hbar * constants().G / (2.0 * a * a * a);
    return {watts, watts / constants().k_B};
}

DpResult dp_summary(const TestParticle& particle, double b)
{
    const double e = grav_self_energy(particle, b);
    const auto heat = dp_heating(particle);
    return {e, decoherence_timescale(e), lambda_dp(particle), heat.watts, heat.kelvin_per_s};
}

double nongaussian_time(const TestParticle& particle, const InitialState& state)
{
    const double hbar = constants().hbar;
    // Decreasing in t: the width grows, E_G grows, the lifetime shrinks.
    auto excess = [&](double t) {
        const double e = grav_self_energy(particle, coherent_width(state, particle, t));
        return hbar / e - t;
    };

    if (excess(kSolveLow) <= 0.0)
        throw SolverError("decoherence time is below the solver floor of 1e-6 s");

    double hi = 1.0;
    while (excess(hi) > 0.0) {
        hi *= 2.0;
        if (hi > kHorizon)
            throw SolverError("no decoherence within horizon of 1e12 s");
    }
    const double lo = hi > 1.0 ? hi / 2.0 : kSolveLow;
    return roots::bisect(excess, lo, hi, {1e-13, 200});
}

}  // namespace freefall
