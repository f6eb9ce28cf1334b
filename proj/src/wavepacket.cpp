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

#include "freefall/wavepacket.hpp"

#include <cmath>
#include <string>

#include "freefall/constants.hpp"
#include "freefall/errors.hpp"

namespace freefall {

namespace {

void require_time(double t)
{
    if (!std::isfinite(t) || t < 0.0)
        throw DomainError("expansion time must be finite and >= 0, got " + std::to_string(t));
}

}  // namespace

std::string_view to_string(DecoherenceSource source) noexcept
{
    switch (source) {
    case DecoherenceSource::None: return "none";
    case DecoherenceSource::DP: return "dp";
    case DecoherenceSource::CSL: return "csl";
    case DecoherenceSource::Custom: return "custom";
    }
    return "unknown";
}

DecoherenceSpec::DecoherenceSpec(double lambda, DecoherenceSource source)
    : lambda_(lambda), source_(source)
{
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw DomainError("decoherence lambda must be finite and >= 0, got " +
                          std::to_string(lambda));
    if (source == DecoherenceSource::None && lambda != 0.0)
        throw DomainError("decoherence source 'none' requires lambda = 0");
}

DecoherenceSpec operator+(const DecoherenceSpec& lhs, const DecoherenceSpec& rhs)
{
    if (lhs.source_ == DecoherenceSource::None)
        return rhs;
    if (rhs.source_ == DecoherenceSource::None)
        return lhs;
    const auto source = lhs.source_ == rhs.source_ ? lhs.source_ : DecoherenceSource::Custom;
    return DecoherenceSpec(lhs.lambda_ + rhs.lambda_, source);
}

double decoherence_variance_term(const TestParticle& particle, double lambda, double t)
{
    require_time(t);
    const double hbar = constants().hbar;
    const double m = particle.mass();
    return 2.0 * lambda * hbar * hbar * t * t * t / (3.0 * m * m);
}

double ballistic_variance(const InitialState& state, const TestParticle& particle, double t)
{
    require_time(t);
    const double m = particle.mass();
    return state.position_variance() + t * t / (m * m) * state.momentum_variance();
}

double variance_at(const InitialState& state, const TestParticle& particle,
                   const DecoherenceSpec& deco, double t)
{
    return ballistic_variance(state, particle, t) +
           decoherence_variance_term(particle, deco.lambda(), t);
}

double coherent_width(const InitialState& state, const TestParticle& particle, double t)
{
    return std::sqrt(ballistic_variance(state, particle, t));
}

}  // namespace freefall
