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

#include "freefall/particle.hpp"

#include <cmath>
#include <string>

#include "freefall/constants.hpp"
#include "freefall/errors.hpp"

namespace freefall {

namespace {

void require_positive(double value, const char* field)
{
    if (!std::isfinite(value) || value <= 0.0)
        throw DomainError(std::string(field) + " must be positive and finite, got " +
                          std::to_string(value));
}

}  // namespace

TestParticle make_particle(double radius, double density)
{
    require_positive(radius, "radius");
    require_positive(density, "density");
    const double mass = 4.0 / 3.0 * units::kPi * radius * radius * radius * density;
    return TestParticle(radius, density, mass);
}

TestParticle particle_from_mass(double mass, double density)
{
    require_positive(mass, "mass");
    require_positive(density, "density");
    const double radius = std::cbrt(3.0 * mass / (4.0 * units::kPi * density));
    return make_particle(radius, density);
}

InitialState make_initial_state(const TestParticle& particle, double omega, double nbar,
                                double squeeze)
{
    require_positive(omega, "omega");
    if (!std::isfinite(nbar) || nbar < 0.0)
        throw DomainError("nbar must be finite and >= 0, got " + std::to_string(nbar));
    if (!std::isfinite(squeeze) || squeeze < 1.0)
        throw DomainError("squeeze must be finite and >= 1, got " + std::to_string(squeeze));

    const double hbar = constants().hbar;
    const double m = particle.mass();
    const double thermal = 2.0 * nbar + 1.0;
    const double s2 = squeeze * squeeze;

    InitialState state;
    state.omega_ = omega;
    state.nbar_ = nbar;
    state.squeeze_ = squeeze;
    state.x_var0_ = hbar / (2.0 * m * omega) * thermal * s2;
    state.p_var0_ = hbar * m * omega / 2.0 * thermal / s2;
    return state;
}

}  // namespace freefall
