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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace wfdm
{

// Explicit random source handed to every stochastic operation. Child streams are keyed
// deterministically on (seed, key...) so that a trial's draws do not depend on which
// worker runs it or in what order.
class RandomStream
{
public:
    explicit RandomStream(std::uint64_t seed);

    // Stream keyed on a master seed and an arbitrary key path, e.g.
    // (seed, experiment id, sweep index, trial index).
    static RandomStream keyed(std::uint64_t master, std::initializer_list<std::uint64_t> keys);
    static RandomStream keyed(std::uint64_t master, std::span<const std::uint64_t> keys);

    RandomStream child(std::uint64_t index) const;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }
    double gaussian() { return normal_(engine_); }
    // Circular complex Gaussian, E|z|² = variance, split equally between I and Q.
    cplx complex_gaussian(double variance);
    std::uint8_t bit();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
    std::uint64_t bit_cache_ = 0;
    int bits_left_ = 0;
};

// SplitMix64 finaliser; the key-derivation mixer.
std::uint64_t mix64(std::uint64_t x);

} // namespace wfdm
