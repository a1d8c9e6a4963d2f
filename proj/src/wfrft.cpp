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

#include "wfdm/wfrft.hpp"

#include "wfdm/errors.hpp"

#include <cmath>

namespace wfdm
{

namespace
{

double reduce_mod4(double x)
{
    double r = std::fmod(x, 4.0);
    if (r < 0.0)
        r += 4.0;
    return r;
}

void require_nonempty(std::span<const cplx> s, const char *who)
{
    if (s.empty())
        throw InvalidInput(std::string(who) + ": empty sequence");
}

} // namespace

bool WfrftParams::single_parameter() const
{
    for (std::size_t k = 0; k < 4; ++k)
        if (m_vec[k] != 0 || n_vec[k] != 0)
            return false;
    return true;
}

ComplexSequence normalized_dft(std::span<const cplx> s)
{
    require_nonempty(s, "normalized_dft");
    const std::size_t J = s.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(J));

    // Twiddle table indexed by (k*n) mod J keeps the phase argument exact.
    std::vector<cplx> twiddle(J);
    for (std::size_t m = 0; m < J; ++m)
        twiddle[m] = std::polar(1.0, -2.0 * kPi * static_cast<double>(m) / static_cast<double>(J));

    ComplexSequence out(J);
    for (std::size_t k = 0; k < J; ++k)
    {
        cplx acc = 0.0;
        std::size_t idx = 0;
        for (std::size_t n = 0; n < J; ++n)
        {
            acc += s[n] * twiddle[idx];
            idx += k;
            if (idx >= J)
                idx -= J;
        }
        out[k] = acc * scale;
    }
    return out;
}

std::array<ComplexSequence, 4> dft_powers(std::span<const cplx> s)
{
    require_nonempty(s, "dft_powers");
    std::array<ComplexSequence, 4> p;
    p[0].assign(s.begin(), s.end());
    p[1] = normalized_dft(p[0]);
    p[2] = normalized_dft(p[1]);
    p[3] = normalized_dft(p[2]);
    return p;
}

WfrftWeights weights_multi(const WfrftParams &p)
{
    const double a = reduce_mod4(p.alpha);
    // Eigenvalue phase for eigenspace k: (π/2)(4m_k+1)(4n_k+k)α, taken mod 2π via mod-4 reduction.
    std::array<cplx, 4> eig{};
    for (int k = 0; k < 4; ++k)
    {
        const long long factor = static_cast<long long>(4 * p.m_vec[k] + 1) * (4LL * p.n_vec[k] + k);
        const double turns = reduce_mod4(static_cast<double>(factor) * a);
        eig[k] = std::polar(1.0, -0.5 * kPi * turns);
    }
    WfrftWeights w{};
    for (int i = 0; i < 4; ++i)
    {
        cplx acc = 0.0;
        for (int k = 0; k < 4; ++k)
            acc += eig[k] * std::polar(1.0, 0.5 * kPi * static_cast<double>((k * i) % 4));
        w[i] = 0.25 * acc;
    }
    return w;
}

WfrftWeights weights_single(double alpha)
{
    const double a = reduce_mod4(alpha);
    WfrftWeights w{};
    for (int i = 0; i < 4; ++i)
    {
        const double t = (a - i) * kPi / 4.0;
        w[i] = std::cos(t) * std::cos(2.0 * t) * std::polar(1.0, -3.0 * t);
    }
    return w;
}

ComplexSequence apply_weights(std::span<const cplx> s, const WfrftWeights &w)
{
    const auto powers = dft_powers(s);
    ComplexSequence out(s.size());
    for (std::size_t i = 0; i < 4; ++i)
    {
        if (w[i] == cplx(0.0))
            continue;
        for (std::size_t n = 0; n < s.size(); ++n)
            out[n] += w[i] * powers[i][n];
    }
    return out;
}

ComplexSequence wfrft(std::span<const cplx> s, const WfrftParams &p)
{
    require_nonempty(s, "wfrft");
    return apply_weights(s, weights_multi(p));
}

ComplexSequence inverse_wfrft(std::span<const cplx> s, const WfrftParams &p)
{
    require_nonempty(s, "inverse_wfrft");
    return wfrft(s, p.inverse());
}

ComplexSequence wfrft_blocks(std::span<const cplx> s, std::size_t block_len, const WfrftParams &p)
{
    if (block_len == 0 || s.empty() || s.size() % block_len != 0)
        throw FramingError("wfrft_blocks: length " + std::to_string(s.size()) +
                           " is not a positive multiple of block length " + std::to_string(block_len));
    const WfrftWeights w = weights_multi(p);
    ComplexSequence out;
    out.reserve(s.size());
    for (std::size_t off = 0; off < s.size(); off += block_len)
    {
        const auto blk = apply_weights(s.subspan(off, block_len), w);
        out.insert(out.end(), blk.begin(), blk.end());
    }
    return out;
}

double equivalent_an_variance(const WfrftWeights &w) { return 1.0 - std::norm(w[0]); }

} // namespace wfdm
