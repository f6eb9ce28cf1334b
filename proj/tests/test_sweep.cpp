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

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "freefall/dp_model.hpp"
#include "freefall/errors.hpp"
#include "freefall/report.hpp"
#include "freefall/sweep.hpp"
#include "test_support.hpp"

using namespace freefall;
using freefall::test::rel_err;

namespace {

SweepSpec default_spec()
{
    SweepSpec spec;
    spec.radii = log_spaced(50e-9, 2e-6, 50);
    spec.densities = {2000.0, 5000.0};
    return spec;
}

bool same_row(const SweepRow& a, const SweepRow& b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST_CASE("grids")
{
    const auto r = log_spaced(50e-9, 2e-6, 50);
    CHECK(r.size() == 50);
    CHECK(r.front() == 50e-9);
    CHECK(r.back() == 2e-6);
    CHECK(std::is_sorted(r.begin(), r.end()));
    CHECK(rel_err(r[1] / r[0], r[49] / r[48]) < 1e-12);
    CHECK(log_spaced(1e-7, 1e-7, 1).size() == 1);
    const auto l = linear_spaced(1e-7, 1e-6, 10);
    CHECK(rel_err(l[1] - l[0], 1e-7) < 1e-12);
    CHECK_THROWS_AS(log_spaced(0.0, 1.0, 5), DomainError);
    CHECK_THROWS_AS(log_spaced(1.0, 0.5, 5), DomainError);
}

TEST_CASE("ratio sweep: shape and ordering")
{
    const auto spec = default_spec();
    const auto rows = sweep_ratios(spec);
    REQUIRE(rows.size() == 100);
    for (std::size_t d = 0; d < 2; ++d)
        for (std::size_t i = 0; i < 50; ++i) {
            CHECK(rows[d * 50 + i].density == spec.densities[d]);
            CHECK(rows[d * 50 + i].radius == spec.radii[i]);
        }
    for (const auto& row : rows) {
        REQUIRE(row.ratio_dp.has_value());
        REQUIRE(row.ratio_csl.has_value());
        CHECK(std::isfinite(*row.ratio_dp));
        CHECK(*row.ratio_dp >= 0);
        CHECK(*row.ratio_csl >= 0);
        CHECK(row.lambda_min > 0);
    }
}

TEST_CASE("ratio sweep: DP detectability is radius independent and out of reach")
{
    const auto rows = sweep_ratios(default_spec());
    for (std::size_t d = 0; d < 2; ++d) {
        double lo = *rows[d * 50].ratio_dp, hi = lo;
        for (std::size_t i = 0; i < 50; ++i) {
            lo = std::min(lo, *rows[d * 50 + i].ratio_dp);
            hi = std::max(hi, *rows[d * 50 + i].ratio_dp);
            CHECK(*rows[d * 50 + i].ratio_dp < 1e-5);
        }
        CHECK((hi - lo) / lo < 1e-10);
    }
    for (std::size_t i = 0; i < 50; ++i)
        CHECK(rel_err(*rows[50 + i].ratio_dp / *rows[i].ratio_dp, 2.5) < 1e-10);
    CHECK(rel_err(*rows[0].ratio_dp, 4.243611037593787e-8) < 1e-10);
}

TEST_CASE("models left out of the sweep produce empty columns")
{
    auto spec = default_spec();
    spec.csl.reset();
    const auto rows = sweep_ratios(spec);
    CHECK(!rows[10].lambda_csl.has_value());
    CHECK(!rows[10].ratio_csl.has_value());
    CHECK(*rows[10].ratio_dp > 0.0);

    const std::vector<SweepRow> one{rows[10]};
    const auto csv = ratio_csv(one);
    const auto line = csv.substr(csv.find('\n') + 1);
    CHECK(line.substr(line.size() - 2) == ",\n");
    CHECK(line.find(",,") != std::string::npos);
}

TEST_CASE("decoherence-time sweep")
{
    auto spec = default_spec();
    spec.radii = log_spaced(200e-9, 1e-6, 20);
    const auto rows = sweep_decoherence_time(spec);
    REQUIRE(rows.size() == 40);
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(rows[20 + i].t_d < 100.0);           // rho = 5000
        CHECK(rows[20 + i].t_d < rows[i].t_d);     // denser decoheres earlier
    }

    SweepSpec plateau = default_spec();
    plateau.radii = {1e-6, 2e-6};
    plateau.densities = {2000.0};
    const auto p = sweep_decoherence_time(plateau);
    const double ratio = p[0].t_d / p[1].t_d;
    CHECK(ratio >= 0.98);
    CHECK(ratio <= 1.02);
}

TEST_CASE("rows beyond the solver horizon carry an infinity sentinel")
{
    SweepSpec spec = default_spec();
    spec.radii = {1e-9, 1e-6};
    spec.densities = {1.0};
    const auto rows = sweep_decoherence_time(spec);
    CHECK(std::isinf(rows[0].t_d));
    CHECK(std::isfinite(rows[1].t_d));
}

TEST_CASE("rows re-derive from the underlying models")
{
    auto spec = default_spec();
    const auto rows = sweep_decoherence_time(spec);
    std::mt19937 pick(12345);
    for (int k = 0; k < 10; ++k) {
        const auto& row = rows[pick() % rows.size()];
        const auto particle = make_particle(row.radius, row.density);
        const auto state = make_initial_state(particle, spec.omega, spec.nbar, spec.squeeze);
        CHECK(*row.lambda_dp == lambda_dp(particle));
        CHECK(*row.lambda_csl == lambda_csl(particle, *spec.csl));
        CHECK(row.lambda_min == lambda_min(state, spec.mission));
        CHECK(*row.ratio_dp == *row.lambda_dp / row.lambda_min);
        CHECK(row.t_d == nongaussian_time(particle, state));
    }
}

TEST_CASE("parallel sweeps match the serial reference")
{
    const auto spec = default_spec();
    const auto ref = reference::sweep_decoherence_time(spec);
    for (int threads : {1, 2, 5}) {
        const auto par = sweep_decoherence_time(spec, threads);
        REQUIRE(par.size() == ref.size());
        CHECK(std::equal(ref.begin(), ref.end(), par.begin(), same_row));
    }
    const auto ref_r = reference::sweep_ratios(spec);
    const auto par_r = sweep_ratios(spec, 3);
    CHECK(std::equal(ref_r.begin(), ref_r.end(), par_r.begin(), same_row));
}

TEST_CASE("sweep validation and error context")
{
    auto spec = default_spec();
    spec.radii = {2e-7, 1e-7};
    CHECK_THROWS_AS(sweep_ratios(spec), DomainError);
    spec.radii = {};
    CHECK_THROWS_AS(sweep_ratios(spec), DomainError);
    spec = default_spec();
    spec.densities = {2000.0, -1.0};
    CHECK_THROWS_AS(reference::sweep_ratios(spec), DomainError);

    spec = default_spec();
    spec.omega = -1.0;
    CHECK_THROWS_WITH(sweep_ratios(spec, 2), doctest::Contains("radius"));
}
