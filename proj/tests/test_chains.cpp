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

#include <catch_amalgamated.hpp>

using namespace wfdm;
using Catch::Approx;

namespace
{

ComplexSequence draw_symbols(RandomStream &rng, const PskAlphabet &a, std::size_t n)
{
    ComplexSequence s(n);
    for (auto &z : s)
        z = a.points()[rng.next_u64() % static_cast<std::uint64_t>(a.order())];
    return s;
}

ComplexSequence coop_symbols(RandomStream &rng, const Scenario &sc)
{
    ComplexSequence s;
    for (const auto &b : sc.bobs)
        s.push_back(draw_symbols(rng, b.alphabet, 1)[0]);
    return s;
}

double maxdiff(std::span<const cplx> a, std::span<const cplx> b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("cooperative encode at order zero is plain zero-forcing", "[chains][coop]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    RandomStream rng(31);
    const auto s = coop_symbols(rng, sc);
    const auto x = coop_alice_encode(s, sc.coop_wfrft.with_alpha(0.0), pre, 1.0);
    CHECK(maxdiff(x, transmit_cooperative(pre, s, 1.0)) < 1e-14);
}

TEST_CASE("cooperative noiseless chain", "[chains][coop]")
{
    Scenario sc = default_scenario();
    sc.ps = 2.5;
    const Precoder pre = sc.precoder();
    RandomStream rng(32);
    double resid = 0.0, dec = 0.0;
    for (int t = 0; t < 500; ++t)
    {
        const auto s = coop_symbols(rng, sc);
        const auto u = wfrft(s, sc.coop_wfrft);
        CHECK(norm2(u) == Approx(norm2(s)).epsilon(1e-9));
        const auto x = coop_alice_encode(s, sc.coop_wfrft, pre, sc.ps);
        const auto hx = pre.h_matrix.apply_adjoint(x);
        ComplexSequence y(3);
        for (std::size_t k = 0; k < 3; ++k)
        {
            resid = std::max(resid, std::abs(hx[k] - std::sqrt(sc.ps) * u[k]));
            y[k] = coop_eve_observe(x, sc.bobs[k].location, sc.fda, 0.0, rng);
        }
        const auto d = coop_bobs_decode(y, sc.coop_wfrft);
        for (std::size_t k = 0; k < 3; ++k)
            dec = std::max(dec, std::abs(d[k] - std::sqrt(sc.ps) * s[k]));
    }
    CHECK(resid < 1e-8);
    CHECK(dec < 1e-8);
}

TEST_CASE("inverse transform preserves white noise", "[chains][coop]")
{
    const Scenario sc = default_scenario();
    RandomStream rng(33);
    double in = 0.0, out = 0.0;
    const int n = 100000;
    for (int t = 0; t < n; ++t)
    {
        const auto noise = awgn(ComplexSequence(3), 0.3, rng);
        const auto d = coop_bobs_decode(noise, sc.coop_wfrft);
        in += energy(noise);
        out += energy(d);
    }
    CHECK(out / in == Approx(1.0).epsilon(0.02));
}

TEST_CASE("mismatched shared key leaves a residual that grows with the mismatch", "[chains][coop]")
{
    Scenario sc = default_scenario();
    sc.coop_wfrft = WfrftParams{0.5, {}, {}}; // single-parameter key: smooth in alpha
    const Precoder pre = sc.precoder();
    RandomStream rng(34);
    double prev = 0.0;
    for (double da : {0.0, 0.01, 0.05, 0.2})
    {
        RandomStream r = rng;
        double err = 0.0;
        for (int t = 0; t < 200; ++t)
        {
            const auto s = coop_symbols(r, sc);
            const auto x = coop_alice_encode(s, sc.coop_wfrft, pre, 1.0);
            ComplexSequence y(3);
            for (std::size_t k = 0; k < 3; ++k)
                y[k] = observe(x, sc.bobs[k].location, sc.fda, 0.0, r);
            const auto d = coop_bobs_decode(y, sc.coop_wfrft.with_alpha(0.5 + da));
            err += std::pow(maxdiff(d, s), 2);
        }
        if (da == 0.0)
            CHECK(err < 1e-12);
        else
            CHECK(err > prev);
        prev = err;
    }

    // A multi-parameter key is far more sensitive to the same mismatch.
    const auto residual = [&](const WfrftParams &key, double da) {
        RandomStream r = rng;
        double err = 0.0;
        for (int t = 0; t < 200; ++t)
        {
            const auto s = coop_symbols(r, sc);
            const auto x = coop_alice_encode(s, key, pre, 1.0);
            ComplexSequence y(3);
            for (std::size_t k = 0; k < 3; ++k)
                y[k] = observe(x, sc.bobs[k].location, sc.fda, 0.0, r);
            err += std::pow(maxdiff(coop_bobs_decode(y, key.with_alpha(key.alpha + da)), s), 2);
        }
        return err;
    };
    const WfrftParams multi = default_scenario().coop_wfrft;
    CHECK(residual(multi, 1e-3) > 10.0 * residual(sc.coop_wfrft, 1e-3));
}

TEST_CASE("cooperative Eve observations", "[chains][coop]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    RandomStream rng(35);
    const auto s = coop_symbols(rng, sc);
    const auto x = coop_alice_encode(s, sc.coop_wfrft, pre, 1.0);
    const cplx eve = coop_eve_observe(x, sc.eves[0], sc.fda, 0.0, rng);
    const cplx bob = observe(x, sc.bobs[0].location, sc.fda, 0.0, rng);
    CHECK(std::abs(eve - bob) < 1e-12);
    CHECK(coop_eve_observe(ComplexSequence(119), sc.eves[1], sc.fda, 0.0, rng) == cplx(0.0));

    const auto rho = leakage_coefficients(pre, sc.fda, sc.eves[1]);
    for (int t = 0; t < 100; ++t)
    {
        const auto st = coop_symbols(rng, sc);
        const auto xt = coop_alice_encode(st, sc.coop_wfrft, pre, 1.7);
        const cplx noise = rng.complex_gaussian(0.1);
        const cplx full = observe(xt, sc.eves[1], sc.fda, 0.0, rng) + noise;
        const auto parts = coop_eve_decompose(st, sc.coop_wfrft, rho, 1.7, noise);
        CHECK(std::abs(parts.total() - full) < 1e-9);
    }
}

TEST_CASE("leakage coefficients at a Bob are a unit vector", "[chains]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    for (std::size_t k = 0; k < 3; ++k)
    {
        const auto rho = leakage_coefficients(pre, sc.fda, sc.bobs[k].location);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(rho[j] - (j == k ? 1.0 : 0.0)) < 1e-8);
    }
}

TEST_CASE("independent frame assembly", "[chains][inde]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    RandomStream rng(36);
    std::vector<ComplexSequence> per_bob;
    for (const auto &b : sc.bobs)
        per_bob.push_back(draw_symbols(rng, b.alphabet, 2 * b.block_len));
    const TransmitFrame frame = inde_alice_encode(per_bob, sc.bobs, pre, 1.0);
    REQUIRE(frame.q_total == 5);
    REQUIRE(frame.columns.size() == 5);

    // Path 1 (Q = 3) spans two transform blocks inside the five channel uses.
    const auto fifo1 = inde_path_stream(per_bob[0], sc.bobs[0]);
    const ComplexSequence first(per_bob[0].begin(), per_bob[0].begin() + 3);
    const ComplexSequence second(per_bob[0].begin() + 3, per_bob[0].end());
    const auto b1 = wfrft(first, sc.bobs[0].wfrft), b2 = wfrft(second, sc.bobs[0].wfrft);
    for (std::size_t q = 0; q < 3; ++q)
        CHECK(std::abs(fifo1[q] - b1[q]) < 1e-14);
    for (std::size_t q = 0; q < 2; ++q)
        CHECK(std::abs(fifo1[3 + q] - b2[q]) < 1e-14);

    for (std::size_t q = 0; q < 5; ++q)
    {
        const auto hx = pre.h_matrix.apply_adjoint(frame.columns[q]);
        for (std::size_t k = 0; k < 3; ++k)
        {
            const auto fifo = inde_path_stream(per_bob[k], sc.bobs[k]);
            CHECK(std::abs(hx[k] - fifo[q]) < 1e-8);
        }
    }
}

TEST_CASE("independent frame with equal blocks and order zero is plain zero-forcing", "[chains][inde]")
{
    Scenario sc = default_scenario();
    for (auto &b : sc.bobs)
    {
        b.block_len = 4;
        b.wfrft.alpha = 0.0;
    }
    const Precoder pre = sc.precoder();
    RandomStream rng(37);
    std::vector<ComplexSequence> per_bob;
    for (const auto &b : sc.bobs)
        per_bob.push_back(draw_symbols(rng, b.alphabet, 4));
    const auto frame = inde_alice_encode(per_bob, sc.bobs, pre, 1.0);
    for (std::size_t q = 0; q < 4; ++q)
    {
        const ComplexSequence s{per_bob[0][q], per_bob[1][q], per_bob[2][q]};
        CHECK(maxdiff(frame.columns[q], transmit_cooperative(pre, s, 1.0)) < 1e-14);
    }
}

TEST_CASE("independent framing errors", "[chains][inde]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    std::vector<ComplexSequence> short_paths{ComplexSequence(3), ComplexSequence(4), ComplexSequence(5)};
    CHECK_THROWS_AS(inde_alice_encode(short_paths, sc.bobs, pre, 1.0), FramingError);
    CHECK_THROWS_AS(inde_bob_decode(ComplexSequence(5), sc.bobs[1]), FramingError);
    CHECK_THROWS_AS(inde_bob_decode(ComplexSequence{}, sc.bobs[1]), FramingError);
}

TEST_CASE("independent noiseless round trip and alignment", "[chains][inde]")
{
    Scenario sc = default_scenario();
    sc.ps = 0.7;
    const Precoder pre = sc.precoder();
    RandomStream rng(38);
    const std::size_t n = 60;
    std::vector<ComplexSequence> per_bob;
    for (const auto &b : sc.bobs)
        per_bob.push_back(draw_symbols(rng, b.alphabet, n));
    const auto frame = inde_alice_encode(per_bob, sc.bobs, pre, sc.ps, n);
    for (std::size_t k = 0; k < 3; ++k)
    {
        const auto obs = inde_eve_observe(frame, sc.bobs[k].location, sc.fda, 0.0, rng);
        const auto fifo = inde_path_stream(per_bob[k], sc.bobs[k]);
        for (std::size_t q = 0; q < n; ++q)
            CHECK(std::abs(obs[q] - std::sqrt(sc.ps) * fifo[q]) < 1e-8);
        const auto d = inde_bob_decode(obs, sc.bobs[k]);
        double err = 0.0;
        for (std::size_t q = 0; q < n; ++q)
            err = std::max(err, std::abs(d[q] - std::sqrt(sc.ps) * per_bob[k][q]));
        CHECK(err < 1e-8);

        if (sc.bobs[k].wfrft.alpha != 0.0)
        {
            // Shift by one sample: blocks straddle the boundaries.
            ComplexSequence shifted(obs.begin() + 1, obs.end());
            shifted.push_back(obs.front());
            const auto ds = inde_bob_decode(shifted, sc.bobs[k]);
            double mse = 0.0;
            for (std::size_t q = 0; q + 1 < n; ++q)
                mse += std::norm(ds[q] - std::sqrt(sc.ps) * per_bob[k][q + 1]);
            CHECK(mse / n > 0.1);
        }
    }
}

TEST_CASE("independent Eve decomposition and leaked-key decoding", "[chains][inde]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    RandomStream rng(39);
    const std::size_t n = 60;
    std::vector<ComplexSequence> per_bob;
    for (const auto &b : sc.bobs)
        per_bob.push_back(draw_symbols(rng, b.alphabet, n));
    const auto frame = inde_alice_encode(per_bob, sc.bobs, pre, 1.3, n);

    const Location eve = sc.eves[1];
    const auto rho = leakage_coefficients(pre, sc.fda, eve);
    const auto clean = inde_eve_observe(frame, eve, sc.fda, 0.0, rng);
    const auto noise = awgn(ComplexSequence(n), 0.1, rng);
    for (std::size_t target = 0; target < 3; ++target)
    {
        const auto parts = inde_eve_decompose(per_bob, sc.bobs, rho, target, 1.3, noise);
        for (std::size_t q = 0; q < n; ++q)
            CHECK(std::abs(parts[q].total() - (clean[q] + noise[q])) < 1e-9);
    }

    // Co-located with Bob 1 and holding the key: exact recovery.
    const auto at_bob = inde_eve_observe(frame, sc.eves[0], sc.fda, 0.0, rng);
    const auto leaked = eve_decode_with_leaked_params(at_bob, sc.bobs, 0);
    ComplexSequence scaled(per_bob[0]);
    for (auto &z : scaled)
        z *= std::sqrt(1.3);
    CHECK(maxdiff(leaked, scaled) < 1e-8);

    // Displaced from every Bob: still distorted.
    const Location off = Location::from_km_deg(160, 60);
    const auto obs_off = inde_eve_observe(frame, off, sc.fda, 0.0, rng);
    const auto dec_off = eve_decode_with_leaked_params(obs_off, sc.bobs, 0);
    double mse = 0.0;
    for (std::size_t q = 0; q < n; ++q)
        mse += std::norm(dec_off[q] - std::sqrt(1.3) * per_bob[0][q]);
    CHECK(mse / n > 0.05);
    CHECK_THROWS_AS(eve_decode_with_leaked_params(obs_off, sc.bobs, 3), IndexError);
}

TEST_CASE("single Bob: leaked key gives a scaled copy", "[chains][inde]")
{
    Scenario sc = default_scenario();
    sc.bobs.resize(1);
    sc.bobs[0].block_len = 4;
    const Precoder pre = sc.precoder();
    RandomStream rng(40);
    const auto s = draw_symbols(rng, sc.bobs[0].alphabet, 40);
    const auto frame = inde_alice_encode(std::vector<ComplexSequence>{s}, sc.bobs, pre, 1.0, 40);
    const Location eve = Location::from_km_deg(170, 45);
    const auto rho = leakage_coefficients(pre, sc.fda, eve);
    const auto d = eve_decode_with_leaked_params(inde_eve_observe(frame, eve, sc.fda, 0.0, rng), sc.bobs, 0);
    for (std::size_t q = 0; q < s.size(); ++q)
        CHECK(std::abs(d[q] - rho[0] * s[q]) < 1e-9);
}

TEST_CASE("cooperative and independent coincide for one Bob", "[chains]")
{
    Scenario sc = default_scenario();
    sc.bobs.resize(1);
    sc.bobs[0].block_len = 1;
    sc.bobs[0].wfrft = sc.coop_wfrft;
    const Precoder pre = sc.precoder();
    RandomStream rng(41);
    const auto s = draw_symbols(rng, sc.bobs[0].alphabet, 20);
    const auto frame = inde_alice_encode(std::vector<ComplexSequence>{s}, sc.bobs, pre, 1.0, 20);
    RandomStream na(5), nb(5);
    for (std::size_t q = 0; q < s.size(); ++q)
    {
        const ComplexSequence one{s[q]};
        const auto x = coop_alice_encode(one, sc.coop_wfrft, pre, 1.0);
        const cplx yc = observe(x, sc.bobs[0].location, sc.fda, 0.2, na);
        const cplx yi = observe(frame.columns[q], sc.bobs[0].location, sc.fda, 0.2, nb);
        CHECK(std::abs(yc - yi) < 1e-12);
    }
}

TEST_CASE("transmit power is fixed by Ps and the precoder", "[chains]")
{
    const Scenario sc = default_scenario();
    const Precoder pre = sc.precoder();
    RandomStream rng(42);
    double e = 0.0;
    const int n = 50000;
    for (int t = 0; t < n; ++t)
        e += energy(coop_alice_encode(coop_symbols(rng, sc), sc.coop_wfrft, pre, 1.0));
    CHECK(pre.epsilon * e / n == Approx(1.0).epsilon(0.02));
}

TEST_CASE("AWGN channel", "[chains]")
{
    RandomStream rng(43);
    const ComplexSequence sig{1.0, cplx(0.0, 2.0)};
    CHECK(awgn(sig, 0.0, rng) == sig);
    CHECK_THROWS_AS(awgn(sig, -1.0, rng), InvalidInput);

    const std::size_t n = 1'000'000;
    const auto z = awgn(ComplexSequence(n), 0.4, rng);
    double v = 0.0, re2 = 0.0, im2 = 0.0, cross = 0.0;
    for (const cplx &c : z)
    {
        v += std::norm(c);
        re2 += c.real() * c.real();
        im2 += c.imag() * c.imag();
        cross += c.real() * c.imag();
    }
    CHECK(v / n == Approx(0.4).epsilon(0.01));
    CHECK(re2 / n == Approx(0.2).epsilon(0.01));
    CHECK(std::abs(cross / std::sqrt(re2 * im2)) < 0.01);
}

TEST_CASE("scenario validation", "[chains]")
{
    Scenario sc = default_scenario();
    CHECK_NOTHROW(sc.validate());
    CHECK(sc.frame_period() == 60);
    CHECK(sc.eve_target(0) == 0);
    CHECK(sc.eve_target(1) == 1);
    sc.noise_var = 0.0;
    CHECK_THROWS_AS(sc.validate(), ConfigError);
    sc = default_scenario();
    sc.bobs.clear();
    CHECK_THROWS_AS(sc.validate(), ConfigError);
}
