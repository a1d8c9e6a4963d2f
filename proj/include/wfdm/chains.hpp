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

#include "wfdm/fda.hpp"
#include "wfdm/precoding.hpp"
#include "wfdm/psk.hpp"
#include "wfdm/random.hpp"
#include "wfdm/types.hpp"
#include "wfdm/wfrft.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wfdm
{

struct BobProfile
{
    Location location;
    PskAlphabet alphabet{4};
    WfrftParams wfrft;       // per-user parameters, independent scheme
    std::size_t block_len = 1; // Q_k

    void validate() const;
};

struct Scenario
{
    FdaConfig fda;
    std::vector<BobProfile> bobs;
    std::vector<Location> eves;
    std::vector<int> eve_targets; // 0-based Bob index per Eve; empty entries default to min(v, K-1)
    double ps = 1.0;
    double noise_var = 0.1;
    AnDmConfig an_baseline;
    WfrftParams coop_wfrft; // shared parameter of the cooperative scheme
    double cond_limit = kDefaultCondLimit;

    std::size_t users() const { return bobs.size(); }
    std::vector<Location> bob_locations() const;
    std::size_t eve_target(std::size_t v) const;
    std::size_t frame_period() const; // lcm of the block lengths

    void validate() const;
    Precoder precoder() const;
};

// Three Bobs, two Eves, 17 x 7 FDA at 10 GHz, 10 dB SNR.
Scenario default_scenario();

struct TransmitFrame
{
    std::vector<ComplexSequence> columns;
    std::size_t q_total = 0;
};

// y = hᴴ(loc)·x + ξ.
cplx observe(std::span<const cplx> x, const Location &loc, const FdaConfig &cfg, double noise_var,
             RandomStream &rng);

ComplexSequence awgn(std::span<const cplx> signal, double noise_var, RandomStream &rng);

// ϱ = Pᵀ h*(loc). A receiver at loc sees hᴴ P z = Σ ϱ_k z_k.
ComplexSequence leakage_coefficients(const Precoder &pre, const FdaConfig &cfg, const Location &loc);

// √Ps · ϱᵀ z, the noiseless observation of a receiver with coefficients ϱ.
cplx effective_observation(std::span<const cplx> rho, std::span<const cplx> z, double ps);

// ---- cooperative scheme

ComplexSequence coop_alice_encode(std::span<const cplx> symbols, const WfrftParams &shared, const Precoder &pre,
                                  double ps);

ComplexSequence coop_bobs_decode(std::span<const cplx> received, const WfrftParams &shared);

cplx coop_eve_observe(std::span<const cplx> x, const Location &eve, const FdaConfig &cfg, double noise_var,
                      RandomStream &rng);

struct CoopDecomposition
{
    cplx distorted;     // √Ps ω₀ Σ ϱ_k s_k
    cplx equivalent_an; // √Ps Σ ϱ_k η_k
    cplx noise;

    cplx total() const { return distorted + equivalent_an + noise; }
};

CoopDecomposition coop_eve_decompose(std::span<const cplx> symbols, const WfrftParams &shared,
                                     std::span<const cplx> rho, double ps, cplx noise);

// ---- independent scheme

// F^{α_k} applied per Q_k block; the per-path FIFO contents.
ComplexSequence inde_path_stream(std::span<const cplx> symbols, const BobProfile &profile);

// Every path must supply whole blocks covering the channel uses (default max Q_k).
TransmitFrame inde_alice_encode(std::span<const ComplexSequence> per_bob, std::span<const BobProfile> bobs,
                                const Precoder &pre, double ps, std::optional<std::size_t> channel_uses = {});

// Observations must cover whole Q_k blocks.
ComplexSequence inde_bob_decode(std::span<const cplx> observations, const BobProfile &profile);

ComplexSequence inde_eve_observe(const TransmitFrame &frame, const Location &eve, const FdaConfig &cfg,
                                 double noise_var, RandomStream &rng);

// Inverse transform with Bob target_k's leaked parameters and block length.
ComplexSequence eve_decode_with_leaked_params(std::span<const cplx> observations, std::span<const BobProfile> leaked,
                                              std::size_t target_k);

struct InDeDecomposition
{
    cplx distorted;     // √Ps ϱ_k ω₀,k s_k
    cplx mixed;         // √Ps Σ_{k'≠k} ϱ_k' ω₀,k' s_k'
    cplx equivalent_an; // √Ps Σ_k' ϱ_k' η_k'
    cplx noise;

    cplx total() const { return distorted + mixed + equivalent_an + noise; }
};

std::vector<InDeDecomposition> inde_eve_decompose(std::span<const ComplexSequence> per_bob,
                                                  std::span<const BobProfile> bobs, std::span<const cplx> rho,
                                                  std::size_t target_k, double ps, std::span<const cplx> noise);

} // namespace wfdm
