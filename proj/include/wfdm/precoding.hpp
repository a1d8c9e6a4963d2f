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

#include "wfdm/random.hpp"
#include "wfdm/types.hpp"

#include <span>

namespace wfdm
{

inline constexpr double kDefaultCondLimit = 1e8;

// Zero-forcing precoder P = H (HᴴH)⁻¹ for the legitimate steering matrix H.
struct Precoder
{
    CMatrix p_matrix;      // (2N+1)L x K
    CMatrix h_matrix;      // steering matrix the precoder was built from
    double epsilon = 1.0;  // 1 / tr(PPᴴ)
    double gram_condition = 1.0;

    std::size_t users() const { return p_matrix.cols(); }
    std::size_t dimension() const { return p_matrix.rows(); }
};

// Amplitude split of the AN directional-modulation baseline: the useful signal gets β₁,
// artificial noise the remaining power fraction 1 - β₁².
struct AnDmConfig
{
    double beta1 = 0.9;

    void validate() const;
};

// Solves the K x K Gram system by Hermitian Cholesky. The condition estimate is the
// squared ratio of the largest to smallest Cholesky pivot. Throws IllConditionedGeometry
// (naming the most coherent column pair) when it exceeds cond_limit or the factorisation
// breaks down.
Precoder build_precoder(const CMatrix &h_matrix, double cond_limit = kDefaultCondLimit);

// x = sqrt(ps) · P · u
ComplexSequence transmit_cooperative(const Precoder &pre, std::span<const cplx> u, double ps);

// Projects g onto the null space of Hᴴ: Πg = g - P(Hᴴg).
ComplexSequence project_null_space(const Precoder &pre, std::span<const cplx> g);

// Unit-norm artificial-noise direction Πg/‖Πg‖ for a fresh complex Gaussian g.
ComplexSequence draw_an_direction(const Precoder &pre, RandomStream &rng);

// x = sqrt(β₁² ps) P s + sqrt((1-β₁²) ps) w. Every legitimate receiver sees exactly
// β₁ sqrt(ps) s_k. Throws DegenerateBaseline when H is square.
ComplexSequence transmit_an_baseline(const Precoder &pre, std::span<const cplx> s, double ps, const AnDmConfig &cfg,
                                     RandomStream &rng);

} // namespace wfdm
