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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "freefall/rng.hpp"

using namespace freefall::rng;

TEST_CASE("Philox4x32-10 known-answer vectors")
{
    // Random123 kat_vectors.
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) ==
          Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
          Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
          Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are reproducible and substreams differ")
{
    PhiloxStream a(42, 0), b(42, 0), c(42, 1), d(43, 0);
    std::vector<std::uint64_t> va, vc, vd;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        va.push_back(x);
        vc.push_back(c.next_u64());
        vd.push_back(d.next_u64());
    }
    CHECK(va != vc);
    CHECK(va != vd);

    // No shared 64-bit outputs between neighbouring substreams.
    std::set<std::uint64_t> seen(va.begin(), va.end());
    for (auto x : vc)
        CHECK(seen.count(x) == 0);
}

TEST_CASE("uniforms lie in [0, 1) with the right moments")
{
    PhiloxStream s(7, 3);
    const int n = 1000000;
    double sum = 0, sum2 = 0;
    int bins[10] = {};
    for (int i = 0; i < n; ++i) {
        const double u = s.next_uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum2 += u * u;
        ++bins[static_cast<int>(u * 10)];
    }
    CHECK(std::abs(sum / n - 0.5) < 5 * std::sqrt(1.0 / 12 / n));
    CHECK(std::abs(sum2 / n - 1.0 / 3) < 0.002);

    // Chi-squared with 9 dof; 27.9 is the 0.999 quantile.
    double chi2 = 0;
    for (int b : bins) {
        const double e = n / 10.0;
        chi2 += (b - e) * (b - e) / e;
    }
    CHECK(chi2 < 27.9);
}

TEST_CASE("normal stream moments")
{
    NormalStream s(2026, 0);
    const int n = 2000000;
    double mean = 0, var = 0, skew = 0, kurt = 0;
    for (int i = 0; i < n; ++i) {
        const double z = s.next();
        mean += z;
        var += z * z;
        skew += z * z * z;
        kurt += z * z * z * z;
    }
    mean /= n;
    var /= n;
    skew /= n;
    kurt /= n;
    CHECK(std::abs(mean) < 5 / std::sqrt(double(n)));
    CHECK(std::abs(var - 1.0) < 5 * std::sqrt(2.0 / n));
    CHECK(std::abs(skew) < 5 * std::sqrt(15.0 / n));
    CHECK(std::abs(kurt - 3.0) < 5 * std::sqrt(96.0 / n));
}

TEST_CASE("splitmix64 reference values")
{
    // First outputs of the reference generator seeded with 0 (state advanced once).
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafull);
    CHECK(splitmix64(0x9E3779B97F4A7C15ull) == 0x6e789e6aa1b965f4ull);
}
