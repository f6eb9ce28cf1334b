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

#include <cmath>
#include <string>

#include "freefall/errors.hpp"

namespace freefall::roots {

struct BisectionOptions {
    double rel_tol = 1e-12;
    int max_iter = 200;
};

/// Root of a continuous f on [lo, hi] by bisection. f(lo) and f(hi) must have
/// opposite signs (an exact zero at either end is returned directly).
template <typename F>
double bisect(F&& f, double lo, double hi, BisectionOptions opts = {})
{
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0)
        return lo;
    if (f_hi == 0.0)
        return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi))
        throw SolverError("bisection bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] has no sign change");

    for (int i = 0; i < opts.max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double f_mid = f(mid);
        if (f_mid == 0.0)
            return mid;
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= opts.rel_tol * std::abs(mid))
            break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace freefall::roots
