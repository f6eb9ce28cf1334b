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

#include "freefall/constants.hpp"
#include "freefall/csl_model.hpp"
#include "freefall/errors.hpp"
#include "freefall/feasibility.hpp"
#include "freefall/particle.hpp"
#include "test_support.hpp"

using namespace freefall;
using freefall::test::rel_err;

namespace {

// Closed form in long double, as an independent reference.
long double closed_form(long double x)
{
    const long double x2 = x * x;
    return 6.0L / (x2 * x2) * (1.0L - 2.0L / x2 + (1.0L + 2.0L / x2) * std::exp(-x2));
}

}  // namespace

TEST_CASE("form factor limits")
{
    CHECK(csl_form_factor(0.0) == 1.0);
    const double f = csl_form_factor(1e-4);
    CHECK(f >= 0.99999);
    CHECK(f <= 1.0);
    CHECK(rel_err(csl_form_factor(2.0), 0.19780254687491298) < 1e-13);
    CHECK_THROWS_AS(csl_form_factor(-1.0), DomainError);
}

TEST_CASE("form factor series agrees with the closed form")
{
    for (double x = 0.4; x < 1.0; x += 0.05)
        CHECK(rel_err(csl_form_factor(x), static_cast<double>(closed_form(x))) < 1e-9);
    CHECK(rel_err(csl_form_factor(std::nextafter(1.0, 0.0)), csl_form_factor(1.0)) < 1e-13);
}

TEST_CASE("form factor is in (0, 1] and decreasing")
{
    double prev = 1.0;
    for (int i = 0; i <= 3000; ++i) {
        const double x = 1e-5 * std::pow(10.0, i * 2e-3);  // 1e-5 .. 10
        const double f = csl_form_factor(x);
        CHECK(f > 0.0);
        CHECK(f <= 1.0);
        CHECK(f <= prev);
        prev = f;
    }
}

TEST_CASE("Lambda_CSL value, point limit and mass scaling")
{
    const auto p = make_particle(200e-9, 2000);
    const CslParams params;
    CHECK(rel_err(lambda_csl(p, params), 3.544406736867754e17) < 1e-12);

    const auto point = make_particle(1e-12, 2000);
    const double ratio = point.mass() / constants().amu;
    const double point_limit = params.rate * ratio * ratio / (2 * params.r_c * params.r_c);
    CHECK(rel_err(lambda_csl(point, params), point_limit) < 1e-9);

    CHECK(rel_err(lambda_csl(make_particle(200e-9, 4000), params), 4 * lambda_csl(p, params)) < 1e-14);
}

TEST_CASE("Lambda_CSL sits within reach of Lambda_min while Lambda_DP does not")
{
    const auto p = make_particle(200e-9, 2000);
    const auto s = make_initial_state(p, 1e5);
    const MissionProfile mission(test::kSeriesTime, 100.0, 100e-9);
    const auto rep = detectability_report(p, s, mission, true, CslParams{});
    CHECK(*rep.ratio_csl >= 1e-3);
    CHECK(*rep.ratio_csl <= 10.0);
    CHECK(rel_err(*rep.ratio_csl, 0.08465495039686796) < 1e-10);
    CHECK(*rep.ratio_dp < 1e-5);
}

TEST_CASE("CSL parameter validation")
{
    const auto p = make_particle(200e-9, 2000);
    CHECK_THROWS_AS(lambda_csl(p, CslParams{0.0, 1e-7, constants().amu}), DomainError);
    CHECK_THROWS_AS(lambda_csl(p, CslParams{2.2e-17, -1.0, constants().amu}), DomainError);
    CHECK_THROWS_AS(lambda_csl(p, CslParams{2.2e-17, 1e-7, 0.0}), DomainError);
    // The literal 100 m radius is accepted as a configuration.
    CHECK(lambda_csl(p, CslParams{2.2e-17, 100.0, constants().amu}) > 0.0);
}
