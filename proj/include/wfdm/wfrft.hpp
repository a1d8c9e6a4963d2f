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

#pragma once

#include "wfdm/types.hpp"

#include <array>
#include <span>

namespace wfdm
{

// Nine-parameter descriptor of the 4-weighted fractional Fourier transform:
// the order `alpha` and the integer vectors M_V (`m_vec`) and N_V (`n_vec`).
// All-zero vectors give the single-parameter transform.
struct WfrftParams
{
    double alpha = 0.0;
    std::array<int, 4> m_vec{};
    std::array<int, 4> n_vec{};

    // Same vectors, order negated. This is the inverse transform.
    WfrftParams inverse() const { return {-alpha, m_vec, n_vec}; }
    WfrftParams with_alpha(double a) const { return {a, m_vec, n_vec}; }
    bool single_parameter() const;

    friend bool operator==(const WfrftParams &, const WfrftParams &) = default;
};

// Weights ω0..ω3 applied to D⁰s .. D³s.
using WfrftWeights = std::array<cplx, 4>;

// Unitary DFT, ṡ_k = J^{-1/2} Σ_n s_n exp(-j2πkn/J). Direct O(J²) summation.
ComplexSequence normalized_dft(std::span<const cplx> s);

// Returns {s, D(s), D²(s), D³(s)}.
std::array<ComplexSequence, 4> dft_powers(std::span<const cplx> s);

/// Multi-parameter weights
///   ω_i = 1/4 Σ_k exp{-j(π/2)[(4m_k+1)(4n_k+k)α - k i]}.
/// alpha enters only modulo 4.
WfrftWeights weights_multi(const WfrftParams &p);

/// Closed form of weights_multi for M_V = N_V = 0:
///   ω_i = cos[(α-i)π/4] · cos[2(α-i)π/4] · exp(-j3(α-i)π/4).
WfrftWeights weights_single(double alpha);

// Σ ω_i D^i(s) for precomputed weights.
ComplexSequence apply_weights(std::span<const cplx> s, const WfrftWeights &w);

ComplexSequence wfrft(std::span<const cplx> s, const WfrftParams &p);
ComplexSequence inverse_wfrft(std::span<const cplx> s, const WfrftParams &p);

// Block-wise transform of a stream made of whole `block_len` blocks.
// Throws FramingError when the length is not a positive multiple of block_len.
ComplexSequence wfrft_blocks(std::span<const cplx> s, std::size_t block_len, const WfrftParams &p);

// Variance 1 - |ω0|² that the equivalent artificial noise ω1ṡ+ω2s̈+ω3s⃛ is modelled with.
double equivalent_an_variance(const WfrftWeights &w);

} // namespace wfdm
