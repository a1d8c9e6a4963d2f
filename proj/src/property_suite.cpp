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

#include "wfdm/chains.hpp"
#include "wfdm/experiments.hpp"
#include "wfdm/psk.hpp"
#include "wfdm/random.hpp"

#include <algorithm>
#include <cmath>

namespace wfdm
{

namespace
{

// Fixed so the residual table does not depend on the run seed.
constexpr std::uint64_t kSuiteSeed = 0x5eed5417eULL;

ComplexSequence random_vector(RandomStream &rng, std::size_t n)
{
    ComplexSequence v(n);
    for (auto &z : v)
        z = rng.complex_gaussian(1.0);
    return v;
}

WfrftParams random_params(RandomStream &rng)
{
    WfrftParams p;
    p.alpha = 8.0 * (static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53) - 4.0;
    for (std::size_t k = 0; k < 4; ++k)
    {
        p.m_vec[k] = static_cast<int>(rng.next_u64() % 9) - 4;
        p.n_vec[k] = static_cast<int>(rng.next_u64() % 9) - 4;
    }
    return p;
}

double max_diff(std::span<const cplx> a, std::span<const cplx> b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

std::vector<ResultRow> run_property_suite(const ExperimentSpec &spec, const Precoder *corrupted)
{
    const Scenario &sc = spec.config.scenario;
    const std::string ex = to_string(Experiment::property_suite);
    std::vector<ResultRow> rows;
    const auto check = [&](const std::string &name, double residual, double tol) {
        ResultRow r;
        r.experiment = ex;
        r.param1_name = "tolerance";
        r.param1 = tol;
        r.metric = "residual." + name;
        r.value = residual;
        rows.push_back(r);
        r.metric = "pass." + name;
        r.value = residual < tol ? 1.0 : 0.0;
        rows.push_back(r);
    };

    // WFRFT algebra
    {
        RandomStream rng(kSuiteSeed);
        double inv = 0.0, uni = 0.0, per = 0.0, add = 0.0, lin = 0.0;
        for (int c = 0; c < 200; ++c)
        {
            const std::size_t J = 1 + rng.next_u64() % 16;
            const WfrftParams p = random_params(rng);
            const auto s = random_vector(rng, J);
            const auto t = random_vector(rng, J);
            const auto fs = wfrft(s, p);
            inv = std::max(inv, max_diff(inverse_wfrft(fs, p), s));
            uni = std::max(uni, std::abs(norm2(fs) - norm2(s)));
            per = std::max(per, max_diff(wfrft(s, p.with_alpha(p.alpha + 4.0)), fs));
            const double beta = 2.0 * (static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53);
            add = std::max(add, max_diff(wfrft(fs, p.with_alpha(beta)), wfrft(s, p.with_alpha(p.alpha + beta))));
            const cplx a = rng.complex_gaussian(1.0), b = rng.complex_gaussian(1.0);
            ComplexSequence mix(J);
            for (std::size_t i = 0; i < J; ++i)
                mix[i] = a * s[i] + b * t[i];
            const auto ft = wfrft(t, p);
            ComplexSequence want(J);
            for (std::size_t i = 0; i < J; ++i)
                want[i] = a * fs[i] + b * ft[i];
            lin = std::max(lin, max_diff(wfrft(mix, p), want));
        }
        check("wfrft_inverse", inv, 1e-9);
        check("wfrft_unitarity", uni, 1e-9);
        check("wfrft_periodicity", per, 1e-9);
        check("wfrft_additivity", add, 1e-9);
        check("wfrft_linearity", lin, 1e-9);
    }

    // Precoder
    const Precoder pre = corrupted ? *corrupted : sc.precoder();
    {
        const CMatrix hp = pre.h_matrix.adjoint() * pre.p_matrix;
        const double zf = max_abs(hp - CMatrix::identity(pre.users()));
        check("precoder_identity", zf, 1e-8);
        double tr = 0.0;
        for (const cplx &z : pre.p_matrix.data())
            tr += std::norm(z);
        check("precoder_power", std::abs(pre.epsilon * tr - 1.0), 1e-10);
    }

    // Noiseless loopback, both schemes
    {
        RandomStream rng(kSuiteSeed + 1);
        const std::size_t K = sc.users();
        double coop = 0.0;
        for (int t = 0; t < 200; ++t)
        {
            ComplexSequence s(K);
            for (std::size_t k = 0; k < K; ++k)
            {
                const auto &a = sc.bobs[k].alphabet;
                s[k] = a.points()[rng.next_u64() % static_cast<std::uint64_t>(a.order())];
            }
            const auto x = coop_alice_encode(s, sc.coop_wfrft, pre, sc.ps);
            ComplexSequence y(K);
            for (std::size_t k = 0; k < K; ++k)
                y[k] = observe(x, sc.bobs[k].location, sc.fda, 0.0, rng);
            const auto d = coop_bobs_decode(y, sc.coop_wfrft);
            for (std::size_t k = 0; k < K; ++k)
                coop = std::max(coop, std::abs(d[k] - std::sqrt(sc.ps) * s[k]));
        }
        check("loopback_coop", coop, 1e-8);

        const std::size_t n = sc.frame_period() * std::max<std::size_t>(1, 60 / sc.frame_period() + 1);
        std::vector<ComplexSequence> per_bob(K);
        for (std::size_t k = 0; k < K; ++k)
        {
            const auto &a = sc.bobs[k].alphabet;
            for (std::size_t q = 0; q < n; ++q)
                per_bob[k].push_back(a.points()[rng.next_u64() % static_cast<std::uint64_t>(a.order())]);
        }
        const TransmitFrame frame = inde_alice_encode(per_bob, sc.bobs, pre, sc.ps, n);
        double inde = 0.0;
        for (std::size_t k = 0; k < K; ++k)
        {
            const auto obs = inde_eve_observe(frame, sc.bobs[k].location, sc.fda, 0.0, rng);
            const auto d = inde_bob_decode(obs, sc.bobs[k]);
            for (std::size_t q = 0; q < n; ++q)
                inde = std::max(inde, std::abs(d[q] - std::sqrt(sc.ps) * per_bob[k][q]));
        }
        check("loopback_inde", inde, 1e-8);
    }

    // PSK round trip
    {
        RandomStream rng(kSuiteSeed + 2);
        double bad = 0.0;
        for (int m : {2, 4, 8})
        {
            const PskAlphabet a(m);
            BitVector bits(static_cast<std::size_t>(a.bits_per_symbol()) * 256);
            for (auto &b : bits)
                b = rng.bit();
            const auto c = count_bit_errors(bits, demap_ml(map_bits(bits, a), a));
            bad += static_cast<double>(c.errors);
        }
        check("psk_roundtrip", bad, 0.5);
    }

    // Measured (no pass/fail): pooled equivalent-AN variance over (1 - |ω₀|²) per Bob block.
    {
        RandomStream rng(kSuiteSeed + 3);
        for (std::size_t k = 0; k < sc.users(); ++k)
        {
            const auto &b = sc.bobs[k];
            const WfrftWeights w = weights_multi(b.wfrft);
            const double expect = equivalent_an_variance(w);
            double acc = 0.0;
            std::size_t cnt = 0;
            for (int t = 0; t < 20000; ++t)
            {
                ComplexSequence s(b.block_len);
                for (auto &z : s)
                    z = b.alphabet.points()[rng.next_u64() % static_cast<std::uint64_t>(b.alphabet.order())];
                const auto f = wfrft(s, b.wfrft);
                for (std::size_t i = 0; i < s.size(); ++i)
                {
                    acc += std::norm(f[i] - w[0] * s[i]);
                    ++cnt;
                }
            }
            ResultRow r;
            r.experiment = ex;
            r.param1_name = "bob";
            r.param1 = static_cast<double>(k + 1);
            r.metric = "measured.an_variance_ratio";
            r.value = expect > 0.0 ? (acc / static_cast<double>(cnt)) / expect : 0.0;
            r.n = cnt;
            rows.push_back(r);
        }
    }
    return rows;
}

} // namespace wfdm
