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

#include "wfdm/psk.hpp"

#include "wfdm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace wfdm
{

PskAlphabet::PskAlphabet(int m) : m_(m)
{
    switch (m)
    {
    case 2:
        bits_ = 1;
        offset_ = 0.0;
        break;
    case 4:
        bits_ = 2;
        offset_ = kPi / 4.0;
        break;
    case 8:
        bits_ = 3;
        offset_ = kPi / 8.0;
        break;
    default:
        throw ConfigError("modulation", "unsupported PSK order " + std::to_string(m) + " (expected 2, 4 or 8)");
    }
    points_.resize(static_cast<std::size_t>(m));
    labels_.resize(static_cast<std::size_t>(m));
    index_of_label_.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
    {
        points_[k] = std::polar(1.0, 2.0 * kPi * k / m + offset_);
        labels_[k] = static_cast<unsigned>(k ^ (k >> 1));
        index_of_label_[labels_[k]] = k;
    }
}

PskAlphabet PskAlphabet::from_name(const std::string &name)
{
    std::string s;
    for (char ch : name)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (s == "bpsk" || s == "2")
        return PskAlphabet(2);
    if (s == "qpsk" || s == "4")
        return PskAlphabet(4);
    if (s == "8psk" || s == "8")
        return PskAlphabet(8);
    throw ConfigError("modulation", "unknown modulation '" + name + "'");
}

std::string PskAlphabet::name() const
{
    switch (m_)
    {
    case 2:
        return "BPSK";
    case 4:
        return "QPSK";
    default:
        return "8PSK";
    }
}

int PskAlphabet::decide(cplx y) const
{
    const double step = 2.0 * kPi / m_;
    const double pos = (std::arg(y) - offset_) / step;
    int k = static_cast<int>(std::lround(pos)) % m_;
    if (k < 0)
        k += m_;
    return k;
}

ComplexSequence map_bits(std::span<const std::uint8_t> bits, const PskAlphabet &alphabet)
{
    const auto b = static_cast<std::size_t>(alphabet.bits_per_symbol());
    if (bits.size() % b != 0)
        throw FramingError("map_bits: " + std::to_string(bits.size()) + " bits is not a multiple of " +
                           std::to_string(b));
    ComplexSequence out;
    out.reserve(bits.size() / b);
    for (std::size_t i = 0; i < bits.size(); i += b)
    {
        unsigned label = 0;
        for (std::size_t j = 0; j < b; ++j)
            label = (label << 1) | (bits[i + j] & 1U);
        out.push_back(alphabet.point_for_label(label));
    }
    return out;
}

void demap_into(cplx y, const PskAlphabet &alphabet, BitVector &out)
{
    const unsigned label = alphabet.label(alphabet.decide(y));
    for (int j = alphabet.bits_per_symbol() - 1; j >= 0; --j)
        out.push_back(static_cast<std::uint8_t>((label >> j) & 1U));
}

BitVector demap_ml(std::span<const cplx> y, const PskAlphabet &alphabet)
{
    BitVector out;
    out.reserve(y.size() * static_cast<std::size_t>(alphabet.bits_per_symbol()));
    for (const cplx &z : y)
        demap_into(z, alphabet, out);
    return out;
}

BitErrorCount count_bit_errors(std::span<const std::uint8_t> tx, std::span<const std::uint8_t> rx)
{
    if (tx.size() != rx.size())
        throw InvalidInput("count_bit_errors: length mismatch (" + std::to_string(tx.size()) + " vs " +
                           std::to_string(rx.size()) + ")");
    BitErrorCount c{0, tx.size()};
    for (std::size_t i = 0; i < tx.size(); ++i)
        c.errors += ((tx[i] ^ rx[i]) & 1U);
    return c;
}

} // namespace wfdm
