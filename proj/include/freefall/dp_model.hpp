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

#include "freefall/particle.hpp"

// Diosi-Penrose gravitational decoherence for a uniform sphere of radius a
// and mass m, with a continuous mass distribution.
//
// The self-energy of a two-branch superposition separated by b is written in
// terms of the overlap parameter lambda = b / (2a), i.e. the separation in
// units of the sphere diameter. For lambda >= 1 the branches no longer
// overlap and E_G = (6/5) G m^2 / a - G m^2 / b, the self-energy of a
// uniform sphere minus the mutual energy of two point masses; matching that
// form fixes the factor of 2.

namespace freefall {

struct DpResult {
    double E_G;           // J
    double tau_G;         // s, +inf when E_G == 0
    double lambda_dp;     // m^-2 s^-1
    double heat_W;        // W
    double heat_K_per_s;  // K s^-1
};

struct DpHeating {
    double watts;
    double kelvin_per_s;
};

double overlap_parameter(const TestParticle& particle, double b);

/// Dimensionless self-energy E_G / (G m^2 / a) on each branch, and the
/// derivatives with respect to lambda. Both branches are defined everywhere so
/// they can be compared at the junction lambda = 1.
namespace self_energy_shape {
double overlapping(double lambda) noexcept;
double separated(double lambda) noexcept;
double overlapping_slope(double lambda) noexcept;
double separated_slope(double lambda) noexcept;
double piecewise(double lambda) noexcept;
}  // namespace self_energy_shape

double grav_self_energy(const TestParticle& particle, double b);

/// hbar / E_G; +infinity for E_G == 0.
double decoherence_timescale(double E_G);

/// Off-diagonal decay rate of rho(x, y) for |x - y| = b. For the uniform sphere
/// [U(x,x) + U(y,y) - 2 U(x,y)] / (-2 hbar) reduces to E_G(b) / hbar.
double pairwise_decoherence_rate(const TestParticle& particle, double b);

/// G m^2 / (2 a^3 hbar).
double lambda_dp(const TestParticle& particle);

/// m hbar G / (2 a^3), reported also as a temperature rate via k_B.
DpHeating dp_heating(const TestParticle& particle);

DpResult dp_summary(const TestParticle& particle, double b);

/// Time t_D at which hbar / E_G(b(t)) = t, with b(t) the coherent wave-packet
/// width. Throws SolverError when no root exists below 1e12 s.
double nongaussian_time(const TestParticle& particle, const InitialState& state);

}  // namespace freefall
