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
#include <span>
#include <string>
#include <vector>

namespace wfdm
{

using BitVector = std::vector<std::uint8_t>;

// Unit-energy M-PSK with binary-reflected Gray labels. Point k sits at
// exp(j(2πk/M + φ_M)), φ₂ = 0, φ₄ = π/4, φ₈ = π/8, and carries label k ^ (k >> 1).
class PskAlphabet
{
public:
    explicit PskAlphabet(int m = 4);

    static PskAlphabet from_name(const std::string &name); // "bpsk", "qpsk", "8psk" or "2"/"4"/"8"

    int order() const noexcept { return m_; }
    int bits_per_symbol() const noexcept { return bits_; }
    double phase_offset() const noexcept { return offset_; }
    std::span<const cplx> points() const noexcept { return points_; }
    unsigned label(int k) const { return labels_.at(static_cast<std::size_t>(k)); }
    std::string name() const;

    // Constellation index nearest to y (phase-only decision).
    int decide(cplx y) const;
    // Point carrying the given Gray label.
    cplx point_for_label(unsigned label) const { return points_[index_of_label_[label]]; }

    friend bool operator==(const PskAlphabet &a, const PskAlphabet &b) { return a.m_ == b.m_; }

private:
    int m_;
    int bits_;
    double offset_;
    std::vector<cplx> points_;
    std::vector<unsigned> labels_;
    std::vector<int> index_of_label_;
};

// Bits are grouped MSB-first into labels. Throws FramingError if the bit count is not a
// multiple of log2 M.
ComplexSequence map_bits(std::span<const std::uint8_t> bits, const PskAlphabet &alphabet);

BitVector demap_ml(std::span<const cplx> y, const PskAlphabet &alphabet);

// Appends the label bits of the decision for y.
void demap_into(cplx y, const PskAlphabet &alphabet, BitVector &out);

struct BitErrorCount
{
    std::size_t errors = 0;
    std::size_t total = 0;
};

BitErrorCount count_bit_errors(std::span<const std::uint8_t> tx, std::span<const std::uint8_t> rx);

} // namespace wfdm
