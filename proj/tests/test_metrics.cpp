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

#include "wfdm/chains.hpp"
#include "wfdm/errors.hpp"
#include "wfdm/metrics.hpp"

#include <catch_amalgamated.hpp>

using namespace wfdm;
using Catch::Approx;

TEST_CASE("SNR relations", "[metrics]")
{
    CHECK(snr(1, 1) == 1.0);
    CHECK(linear_to_db(snr(1, 0.1)) == Approx(10.0));
    CHECK(linear_to_db(snr(1, 1) / snr_an(1, 1, 0.9)) == Approx(10.0 * std::log10(1.0 / 0.81)));
    CHECK(linear_to_db(1.0 / 0.81) == Approx(0.915).margin(5e-4));
    CHECK_THROWS_AS(snr(0, 1), InvalidInput);
    CHECK_THROWS_AS(snr(1, -1), InvalidInput);
}

TEST_CASE("theoretical M-PSK error rate", "[metrics]")
{
    CHECK(theoretical_ber_mpsk(0, 2) == Approx(1.0));
    CHECK(theoretical_ber_mpsk(0, 4) == Approx(0.5));
    CHECK(theoretical_ber_mpsk(0, 8) == Approx(1.0 / 3.0));
    CHECK(theoretical_ber_mpsk(10, 4) == Approx(7.827011290012e-4).epsilon(1e-9));
    for (int m : {2, 4, 8})
    {
        double prev = 1.0;
        for (int db = 0; db <= 20; ++db)
        {
            const double b = theoretical_ber_mpsk(db_to_linear(db), m);
            CHECK(b < prev);
            prev = b;
        }
    }
    CHECK_THROWS_AS(theoretical_ber_mpsk(1, 16), InvalidInput);
    CHECK(q_function(0) == 0.5);
    CHECK(q_function(3) == Approx(1.3498980316301e-3).epsilon(1e-12));
}

TEST_CASE("rates", "[metrics]")
{
    CHECK(achievable_rate(coop_bob_sinr(1, 0.1)) == Approx(std::log2(11.0)));
    CHECK(achievable_rate(coop_bob_sinr(1, 0.1)) == Approx(3.459).margin(5e-4));
    CHECK(coop_bob_sinr(2, 0.5) == snr(2, 0.5));
}

TEST_CASE("cooperative Eve SINR limits", "[metrics]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    const auto w0 = weights_multi(sc.coop_wfrft.with_alpha(0.0));
    const double g = energy(leakage_coefficients(pre, sc.fda, sc.eves[1]));
    CHECK(coop_eve_sinr(pre, sc.eves[1], sc.fda, w0, 1.0, 0.1) == Approx(g / 0.1));

    const auto w = weights_multi(sc.coop_wfrft);
    const double ceiling = std::norm(w[0]) / equivalent_an_variance(w);
    for (const auto &loc : {sc.eves[0], sc.eves[1], Location::from_km_deg(120, -70)})
    {
        CHECK(coop_eve_sinr(pre, loc, sc.fda, w, 1.0, 1e-14) == Approx(ceiling).epsilon(1e-6));
        for (double nv : {1.0, 0.1, 0.01})
            CHECK(coop_eve_sinr(pre, loc, sc.fda, w, 1.0, nv) <= ceiling);
    }
}

TEST_CASE("secrecy rate formulas", "[metrics]")
{
    const std::vector<double> b{2.0, 3.0};
    CHECK(coop_secrecy_rate(b, std::vector<double>{2.0, 3.0}) == 0.0);
    CHECK(coop_secrecy_rate(std::vector<double>{3.0}, std::vector<double>{1.0}) == 2.0);
    CHECK(coop_secrecy_rate(std::vector<double>{1.0}, std::vector<double>{3.0}) == 0.0);
    // max_k min_v by brute force
    const std::vector<double> e{0.5, 1.5};
    double want = 0.0;
    for (double rb : b)
    {
        double worst = 1e9;
        for (double re : e)
            worst = std::min(worst, rb - re);
        want = std::max(want, worst);
    }
    CHECK(coop_secrecy_rate(b, e) == want);

    CHECK_THROWS_AS(inde_secrecy_rate(b, {}), InvalidInput);
    CHECK(inde_secrecy_rate(std::vector<double>{1.0, 1.0}, {{1.0, 1.0}}) == 0.0);
    CHECK(inde_secrecy_rate(std::vector<double>{3.0}, {{1.0}, {2.0}}) ==
          coop_secrecy_rate(std::vector<double>{3.0}, std::vector<double>{1.0, 2.0}));
    CHECK(inde_secrecy_rate(b, {{0.5, 1.0}, {0.2, 1.4}}) == Approx(3.0 - 1.4));
}

TEST_CASE("independent Eve SINR", "[metrics]")
{
    const Scenario sc = default_scenario();
    std::vector<WfrftWeights> w;
    for (const auto &bob : sc.bobs)
        w.push_back(weights_multi(bob.wfrft));
    const double gamma = 10.0;
    for (std::size_t k = 0; k < 3; ++k)
    {
        ComplexSequence rho(3);
        rho[k] = 1.0;
        const double lam = inde_eve_sinr(rho, w, k, 1.0, 1.0 / gamma);
        const double want = gamma * std::norm(w[k][0]) / (gamma * equivalent_an_variance(w[k]) + 1.0);
        CHECK(lam == Approx(want).margin(1e-12));
        CHECK(lam < gamma);

        std::vector<WfrftWeights> id(3, weights_multi({}));
        CHECK(inde_eve_sinr(rho, id, k, 1.0, 1.0 / gamma) == Approx(gamma));
    }
    CHECK_THROWS_AS(inde_eve_sinr(ComplexSequence(3), w, 3, 1, 1), IndexError);
}

TEST_CASE("AN-DM Eve at a Bob equals the Bob", "[metrics]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    const auto rho = leakage_coefficients(pre, sc.fda, sc.eves[0]);
    const double ng = null_space_gain(pre, sc.fda, sc.eves[0]);
    CHECK(ng < 1e-12);
    const double lam = an_eve_sinr(rho, ng, pre.dimension(), 0, 1.0, 0.1, 0.9);
    CHECK(lam == Approx(snr_an(1.0, 0.1, 0.9)).epsilon(1e-9));
}
