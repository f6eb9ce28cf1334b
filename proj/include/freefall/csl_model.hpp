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

#include "freefall/constants.hpp"
#include "freefall/particle.hpp"

namespace freefall {

/// CSL collapse parameters. The default localization radius is 100 nm.
struct CslParams {
    double rate = 2.2e-17;                    // s^-1
    double r_c = 1e-7;                        // m
    double reference_mass = constants().amu;  // kg

    void validate() const;
};

/// Sphere form factor f(x) = (6/x^4) [1 - 2/x^2 + (1 + 2/x^2) e^{-x^2}],
/// x = a / r_c. f(0) = 1; evaluated by its Taylor series below x = 1.
double csl_form_factor(double x);

/// rate (m/m0)^2 / (2 r_c^2) f(a / r_c). This is the long-wavelength CSL
/// rate for a uniform sphere; it is not derived from the DP analysis.
double lambda_csl(const TestParticle& particle, const CslParams& params);

}  // namespace freefall
