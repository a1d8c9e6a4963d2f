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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace wfdm
{

class RandomStream;

struct McSettings
{
    std::size_t min_symbols = 100'000;
    std::size_t max_symbols = 20'000'000;
    std::size_t min_errors = 50;
    std::size_t round_trials = 16; // trials per stopping-rule check; fixed so results ignore thread count
    unsigned threads = 1;

    void validate() const;
};

struct Tally
{
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
    std::uint64_t symbols = 0;

    Tally &operator+=(const Tally &o)
    {
        errors += o.errors;
        bits += o.bits;
        symbols += o.symbols;
        return *this;
    }
};

struct BerEstimate
{
    Tally tally;
    bool converged = false;

    double ber() const { return tally.bits ? static_cast<double>(tally.errors) / static_cast<double>(tally.bits) : 0.0; }
    double ci95() const;
};

double binomial_ci95(double p, std::uint64_t n);

// Fills one Tally per receiver for a single trial.
using TrialFn = std::function<void(RandomStream &rng, std::vector<Tally> &out)>;

// Runs rounds of keyed trials until every receiver has min_errors and min_symbols, or
// max_symbols is reached. Trial i uses RandomStream::keyed(seed, {key..., i}). When `watch`
// is non-empty only the flagged receivers take part in the stopping rule.
std::vector<BerEstimate> run_monte_carlo(std::size_t receivers, const TrialFn &trial, std::uint64_t seed,
                                         const std::vector<std::uint64_t> &key, const McSettings &settings,
                                         const std::vector<bool> &watch = {});

// Evaluates fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn);

} // namespace wfdm
