// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The wfdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "oracles.hpp"

#include "wfdm/errors.hpp"
#include "wfdm/fda.hpp"

#include <catch_amalgamated.hpp>

using namespace wfdm;
using Catch::Approx;

TEST_CASE("frequency increments", "[fda]")
{
    const FdaConfig cfg;
    CHECK(frequency_increment(cfg, 0, 0) == 0.0);
    CHECK(frequency_increment(cfg, 1, 1) == Approx(2000.0 * std::log(4.0)).epsilon(1e-14));
    CHECK(frequency_increment(cfg, 1, 1) == Approx(2772.588722239781).epsilon(1e-12));
    for (int n = 1; n <= cfg.n_half; ++n)
        CHECK(frequency_increment(cfg, n, 3) == frequency_increment(cfg, -n, 3));
    CHECK_THROWS_AS(frequency_increment(cfg, 9, 0), IndexError);
    CHECK_THROWS_AS(frequency_increment(cfg, 0, 7), IndexError);
    CHECK_THROWS_AS(frequency_increment(cfg, 0, -1), IndexError);
}

TEST_CASE("steering vector entries and norm", "[fda]")
{
    FdaConfig cfg;
    cfg.t_obs = 3e-4;
    const Location loc = Location::from_km_deg(180.0, -40.0);
    const auto h = steering_vector(cfg, loc);
    REQUIRE(h.size() == 119);
    CHECK(norm2(h) == Approx(1.0).epsilon(1e-12));
    std::size_t i = 0;
    for (int n = -cfg.n_half; n <= cfg.n_half; ++n)
        for (int l = 0; l < cfg.n_carriers; ++l, ++i)
        {
            const cplx o = oracle::steering_entry(n, l, cfg.n_half, cfg.n_carriers, cfg.f0, cfg.delta_f, cfg.p,
                                                  cfg.element_spacing(), cfg.c, cfg.t_obs, loc.range, loc.angle);
            CHECK(std::abs(h[i] - o) < 1e-9);
        }
}

TEST_CASE("default spacing is half a wavelength", "[fda]")
{
    FdaConfig cfg;
    CHECK(cfg.element_spacing() == Approx(kSpeedOfLight / 2e10));
    cfg.spacing = 0.01;
    CHECK(cfg.element_spacing() == 0.01);
}

TEST_CASE("identical locations give identical steering vectors", "[fda]")
{
    const FdaConfig cfg;
    const auto a = steering_vector(cfg, Location::from_km_deg(150, 50));
    const auto b = steering_vector(cfg, Location::from_km_deg(150, 50 + 360));
    CHECK(oracle::max_abs_diff(a, b) < 1e-9);
    const auto c = steering_vector(cfg, Location::from_km_deg(151, 50));
    CHECK(std::abs(dot_conj(a, c)) < 1.0 - 1e-6);
}

TEST_CASE("configuration validation names the field", "[fda]")
{
    const auto field_of = [](const FdaConfig &cfg) {
        try
        {
            cfg.validate();
        }
        catch (const ConfigError &e)
        {
            return e.field();
        }
        return std::string("none");
    };
    FdaConfig cfg;
    CHECK(field_of(cfg) == "none");
    cfg.delta_f = 1e9; // breaks the narrowband condition
    CHECK(field_of(cfg) == "delta_f_hz");
    cfg = FdaConfig{};
    cfg.f0 = -1;
    CHECK(field_of(cfg) == "f0_hz");
    cfg = FdaConfig{};
    cfg.n_carriers = 0;
    CHECK(field_of(cfg) == "carriers_per_element");
    cfg = FdaConfig{};
    cfg.n_half = -1;
    CHECK(field_of(cfg) == "n_elements");
    cfg = FdaConfig{};
    cfg.spacing = 0.0;
    CHECK(field_of(cfg) == "spacing_m");
}

TEST_CASE("locations", "[fda]")
{
    const Location a = Location::from_km_deg(100, 190);
    CHECK(a.angle_deg() == Approx(-170.0));
    CHECK(Location::from_km_deg(100, -180).angle_deg() == Approx(180.0));
    try
    {
        Location::from_km_deg(-5, 0).validate();
        FAIL("expected a validation error");
    }
    catch (const ConfigError &e)
    {
        CHECK(e.field() == "range");
    }
    const FdaConfig cfg;
    CHECK_THROWS_AS(steering_vector(cfg, Location{0.0, 0.0}), ConfigError);
}

TEST_CASE("steering matrix columns", "[fda]")
{
    const FdaConfig cfg;
    const std::vector<Location> locs{Location::from_km_deg(150, 50), Location::from_km_deg(260, 0)};
    const CMatrix H = steering_matrix(cfg, locs);
    REQUIRE(H.rows() == 119);
    REQUIRE(H.cols() == 2);
    const auto h1 = steering_vector(cfg, locs[1]);
    for (std::size_t r = 0; r < 119; ++r)
        CHECK(H(r, 1) == h1[r]);
    CHECK_THROWS_AS(steering_matrix(cfg, std::span<const Location>{}), InvalidInput);
}
