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

#include "wfdm/csv.hpp"
#include "wfdm/engine.hpp"
#include "wfdm/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wfdm
{

enum class Scheme
{
    wfrft_coop,
    wfrft_inde,
    an_dm
};

enum class ProbeMode
{
    with_key,
    without_key
};

enum class Experiment
{
    ber_vs_snr,
    ber_vs_angle,
    ber_vs_range,
    secrecy_vs_snr,
    secrecy_map,
    robustness_location,
    robustness_alpha,
    property_suite
};

std::string to_string(Scheme s);
std::string to_string(ProbeMode m);
std::string to_string(Experiment e);
Scheme parse_scheme(const std::string &s);
ProbeMode parse_probe_mode(const std::string &s);
Experiment parse_experiment(const std::string &s);

struct ExperimentSpec
{
    SimConfig config;
    Experiment experiment = Experiment::ber_vs_snr;
    std::uint64_t seed = 1;
    ProbeMode probe = ProbeMode::with_key;
    std::vector<Scheme> schemes{Scheme::wfrft_coop, Scheme::wfrft_inde, Scheme::an_dm};
    unsigned threads = 1;
};

// A receiver in a simulated link. Bobs are always receivers 0..K-1; extra receivers
// (Eves, probes) follow.
struct ProbeSpec
{
    std::string name;
    Location location;
    std::size_t target = 0;
    bool with_key = false;
};

// Decoder keys that differ from the transmit parameters (parameter mismatch).
struct KeyOverride
{
    std::optional<WfrftParams> coop_rx;
    std::vector<WfrftParams> inde_rx; // per Bob, empty for none
};

class LinkSimulator
{
public:
    LinkSimulator(Scenario sc, Scheme scheme, Precoder pre, std::vector<ProbeSpec> extras, KeyOverride keys = {});

    std::size_t receivers() const { return names_.size(); }
    const std::vector<std::string> &names() const { return names_; }
    std::size_t bits_per_symbol(std::size_t receiver) const;
    // Channel uses per trial are rounded up to the frame period of the independent scheme.
    std::size_t round_symbols(std::size_t n) const;

    void trial(RandomStream &rng, std::size_t n_symbols, double noise_var, std::vector<Tally> &out) const;

private:
    struct Rx
    {
        ComplexSequence rho;
        ComplexSequence h; // only kept for the AN baseline
        std::size_t target;
        bool with_key;
    };

    void trial_coop(RandomStream &rng, std::size_t n, double noise_var, std::vector<Tally> &out) const;
    void trial_inde(RandomStream &rng, std::size_t n, double noise_var, std::vector<Tally> &out) const;
    void trial_an(RandomStream &rng, std::size_t n, double noise_var, std::vector<Tally> &out) const;

    Scenario sc_;
    Scheme scheme_;
    Precoder pre_;
    std::vector<Rx> rx_;
    std::vector<std::string> names_;
    std::vector<ComplexSequence> coop_tx_op_; // K x K operator, row-major
    std::vector<ComplexSequence> coop_rx_op_;
    std::vector<ComplexSequence> coop_key_op_; // inverse with the true shared key (probes)
    std::vector<WfrftParams> inde_rx_;
};

std::vector<ResultRow> run_ber_vs_snr(const ExperimentSpec &spec);
std::vector<ResultRow> run_ber_map(const ExperimentSpec &spec); // ber_vs_angle or ber_vs_range
std::vector<ResultRow> run_secrecy_vs_snr(const ExperimentSpec &spec);
std::vector<ResultRow> run_secrecy_map(const ExperimentSpec &spec);
std::vector<ResultRow> run_robustness(const ExperimentSpec &spec); // robustness_location or robustness_alpha
std::vector<ResultRow> run_property_suite(const ExperimentSpec &spec, const Precoder *corrupted = nullptr);

std::vector<ResultRow> run_experiment(const ExperimentSpec &spec);

// True if any "converged.*" row reports 0.
bool has_nonconverged(const std::vector<ResultRow> &rows);

// SNR (dB) at which a BER curve crosses target, by linear interpolation of log10 BER.
// Returns nullopt if the curve never brackets the target.
std::optional<double> snr_at_ber(const std::vector<double> &snr_db, const std::vector<double> &ber, double target);

// Width in degrees of the contiguous angle run around `center_deg` with BER < threshold.
double lobe_width_deg(const std::vector<double> &angles_deg, const std::vector<double> &ber, double center_deg,
                      double threshold);

// Evenly spaced angles strictly inside (-90, 90).
std::vector<double> angle_grid(std::size_t n);
std::vector<double> range_grid_km(double lo, double hi, std::size_t n);

} // namespace wfdm
