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

#include "wfdm/engine.hpp"

#include "wfdm/errors.hpp"
#include "wfdm/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace wfdm
{

void McSettings::validate() const
{
    if (min_symbols < 10'000)
        throw ConfigError("min_symbols", "must be at least 10000");
    if (min_errors < 50)
        throw ConfigError("min_errors", "must be at least 50");
    if (max_symbols < min_symbols)
        throw ConfigError("max_symbols", "must not be below min_symbols");
    if (round_trials == 0)
        throw ConfigError("round_trials", "must be positive");
    if (threads == 0)
        throw ConfigError("threads", "must be positive");
}

double binomial_ci95(double p, std::uint64_t n)
{
    if (n == 0)
        return 0.0;
    return 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double BerEstimate::ci95() const { return binomial_ci95(ber(), tally.bits); }

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mu);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

std::vector<BerEstimate> run_monte_carlo(std::size_t receivers, const TrialFn &trial, std::uint64_t seed,
                                         const std::vector<std::uint64_t> &key, const McSettings &settings,
                                         const std::vector<bool> &watch)
{
    if (!watch.empty() && watch.size() != receivers)
        throw InvalidInput("run_monte_carlo: watch mask size does not match the receiver count");
    if (settings.round_trials == 0)
        throw InvalidInput("run_monte_carlo: round_trials must be positive");
    std::vector<Tally> total(receivers);
    std::uint64_t next_trial = 0;

    const auto done = [&](bool &converged_all) {
        std::uint64_t symbols = ~0ULL;
        converged_all = true;
        for (std::size_t k = 0; k < receivers; ++k)
        {
            if (!watch.empty() && !watch[k])
                continue;
            const Tally &t = total[k];
            symbols = std::min(symbols, t.symbols);
            if (t.errors < settings.min_errors || t.symbols < settings.min_symbols)
                converged_all = false;
        }
        if (symbols == ~0ULL)
            return true;
        return converged_all || symbols >= settings.max_symbols;
    };

    bool all = false;
    while (!done(all))
    {
        const std::size_t n = settings.round_trials;
        std::vector<std::vector<Tally>> results(n, std::vector<Tally>(receivers));
        parallel_for(n, settings.threads, [&](std::size_t i) {
            std::vector<std::uint64_t> path(key);
            path.push_back(next_trial + i);
            RandomStream rng = RandomStream::keyed(seed, path);
            trial(rng, results[i]);
        });
        // In-order reduction.
        for (const auto &r : results)
            for (std::size_t k = 0; k < receivers; ++k)
                total[k] += r[k];
        next_trial += n;
    }

    std::vector<BerEstimate> out(receivers);
    for (std::size_t k = 0; k < receivers; ++k)
    {
        out[k].tally = total[k];
        out[k].converged = total[k].errors >= settings.min_errors && total[k].symbols >= settings.min_symbols;
    }
    return out;
}

} // namespace wfdm
