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

#include <string_view>

#include "freefall/particle.hpp"

namespace freefall {

enum class DecoherenceSource { None, DP, CSL, Custom };

std::string_view to_string(DecoherenceSource source) noexcept;

/// A localization-rate density Lambda (m^-2 s^-1) tagged with the model it
/// came from. Specs compose additively.
class DecoherenceSpec {
public:
    DecoherenceSpec() = default;
    DecoherenceSpec(double lambda, DecoherenceSource source);

    static DecoherenceSpec none() { return {}; }

    double lambda() const noexcept { return lambda_; }
    DecoherenceSource source() const noexcept { return source_; }

    friend DecoherenceSpec operator+(const DecoherenceSpec& lhs, const DecoherenceSpec& rhs);

private:
    double lambda_ = 0.0;
    DecoherenceSource source_ = DecoherenceSource::None;
};

/// Contribution of a decoherence rate to the position variance after a free
/// expansion of duration t: 2 Lambda hbar^2 t^3 / (3 m^2).
///
/// The mass enters squared. Written with m^3 the term would not have units of
/// m^2 for Lambda in m^-2 s^-1, and the detection threshold in feasibility.hpp
/// only follows from this form.
double decoherence_variance_term(const TestParticle& particle, double lambda, double t);

/// <x^2(t)> = <x^2(0)> + t^2 <p^2(0)> / m^2 + 2 Lambda hbar^2 t^3 / (3 m^2).
double variance_at(const InitialState& state, const TestParticle& particle,
                   const DecoherenceSpec& deco, double t);

/// Lambda = 0 part of variance_at.
double ballistic_variance(const InitialState& state, const TestParticle& particle, double t);

/// sqrt of the coherent (Lambda = 0) variance; used as superposition size.
double coherent_width(const InitialState& state, const TestParticle& particle, double t);

}  // namespace freefall
