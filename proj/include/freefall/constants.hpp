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

// Physical constants (CODATA 2018) and the unit conversions used at the
// configuration boundary. Everything inside the library is SI.

namespace freefall {

struct PhysicalConstants {
    double hbar;  // J s
    double G;     // m^3 kg^-1 s^-2
    double k_B;   // J K^-1
    double amu;   // kg
};

inline constexpr PhysicalConstants kConstants{
    1.054571817e-34,
    6.67430e-11,
    1.380649e-23,
    1.66053906660e-27,
};

constexpr const PhysicalConstants& constants() noexcept { return kConstants; }

namespace units {
inline constexpr double kSecondsPerDay = 86400.0;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
}  // namespace units

}  // namespace freefall
