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

namespace freefall {

/// Uniform dielectric sphere. Mass is derived from radius and density.
class TestParticle {
public:
    double radius() const noexcept { return radius_; }
    double density() const noexcept { return density_; }
    double mass() const noexcept { return mass_; }

private:
    friend TestParticle make_particle(double radius, double density);
    TestParticle(double radius, double density, double mass)
        : radius_(radius), density_(density), mass_(mass)
    {}

    double radius_;
    double density_;
    double mass_;
};

/// Throws DomainError naming the field if radius or density is not a
/// positive finite number.
TestParticle make_particle(double radius, double density);

/// Sphere of the given density whose mass equals `mass`.
TestParticle particle_from_mass(double mass, double density);

/// Center-of-mass state after cooling in a harmonic trap and optional
/// momentum squeezing. The squeeze factor s divides the momentum variance by
/// s^2 and multiplies the position variance by s^2.
class InitialState {
public:
    double omega() const noexcept { return omega_; }
    double occupancy() const noexcept { return nbar_; }
    double squeeze() const noexcept { return squeeze_; }
    double position_variance() const noexcept { return x_var0_; }
    double momentum_variance() const noexcept { return p_var0_; }

private:
    friend InitialState make_initial_state(const TestParticle&, double, double, double);
    InitialState() = default;

    double omega_ = 0;
    double nbar_ = 0;
    double squeeze_ = 1;
    double x_var0_ = 0;
    double p_var0_ = 0;
};

/// omega in rad/s; nbar >= 0; squeeze >= 1.
InitialState make_initial_state(const TestParticle& particle, double omega, double nbar = 0.0,
                                double squeeze = 1.0);

}  // namespace freefall
