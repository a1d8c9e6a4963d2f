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

#include "wfdm/random.hpp"

#include <cmath>

namespace wfdm
{

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

RandomStream RandomStream::keyed(std::uint64_t master, std::initializer_list<std::uint64_t> keys)
{
    return keyed(master, std::span<const std::uint64_t>(keys.begin(), keys.size()));
}

RandomStream RandomStream::keyed(std::uint64_t master, std::span<const std::uint64_t> keys)
{
    std::uint64_t h = mix64(master);
    for (std::uint64_t k : keys)
        h = mix64(h ^ mix64(k + 0x632be59bd9b4e019ULL));
    return RandomStream(h);
}

RandomStream RandomStream::child(std::uint64_t index) const { return keyed(seed_, {index}); }

cplx RandomStream::complex_gaussian(double variance)
{
    const double s = std::sqrt(0.5 * variance);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
}

std::uint8_t RandomStream::bit()
{
    if (bits_left_ == 0)
    {
        bit_cache_ = engine_();
        bits_left_ = 64;
    }
    const auto b = static_cast<std::uint8_t>(bit_cache_ & 1U);
    bit_cache_ >>= 1;
    --bits_left_;
    return b;
}

} // namespace wfdm
