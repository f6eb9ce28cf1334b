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

#include "freefall/csl_model.hpp"

#include <cmath>
#include <string>

#include "freefall/errors.hpp"

namespace freefall {

void CslParams::validate() const
{
    auto check = [](double v, const char* name) {
        if (!std::isfinite(v) || v <= 0.0)
            throw DomainError(std::string("CSL ") + name + " must be positive and finite");
    };
    check(rate, "rate");
    check(r_c, "r_c");
    check(reference_mass, "reference_mass");
}

double csl_form_factor(double x)
{
    if (!std::isfinite(x) || x < 0.0)
        throw DomainError("form factor argument must be finite and >= 0");
    const double x2 = x * x;
    if (x < 1.0) {
        // f = 6 sum_k (-1)^k (k+1) x^{2k} / (k+3)!; the closed form cancels badly here.
        double term = 1.0 / 6.0;  // x^{2k} / (k+3)! at k = 0
        double sum = 0.0;
        for (int k = 0; k < 30; ++k) {
            const double contrib = (k % 2 == 0 ? 1.0 : -1.0) * (k + 1) * term;
            sum += contrib;
            if (std::abs(contrib) < 1e-18 * std::abs(sum))
                break;
            term *= x2 / (k + 4);
        }
        return 6.0 * sum;
    }
    const double inv2 = 2.0 / x2;
    return 6.0 / (x2 * x2) * (1.0 - inv2 + (1.0 + inv2) * std::exp(-x2));
}

double lambda_csl(const TestParticle& particle, const CslParams& params)
{
    params.validate();
    const double ratio = particle.mass() / params.reference_mass;
    return params.rate * ratio * ratio / (2.0 * params.r_c * params.r_c) *
           csl_form_factor(particle.radius() / params.r_c);
}

}  // namespace freefall
