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

#include "wfdm/fda.hpp"

#include "wfdm/errors.hpp"

#include <cmath>
#include <string>

namespace wfdm
{

double deg_to_rad(double deg) { return deg * kPi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

void FdaConfig::validate() const
{
    if (n_half < 0)
        throw ConfigError("n_elements", "element count must be a positive odd number");
    if (n_carriers < 1)
        throw ConfigError("carriers_per_element", "at least one carrier per element required");
    if (!(f0 > 0.0) || !std::isfinite(f0))
        throw ConfigError("f0_hz", "central frequency must be positive");
    if (!std::isfinite(delta_f))
        throw ConfigError("delta_f_hz", "frequency increment must be finite");
    if (!std::isfinite(p))
        throw ConfigError("p", "increment control factor must be finite");
    if (!(c > 0.0))
        throw ConfigError("c", "propagation speed must be positive");
    if (!(element_spacing() > 0.0) || !std::isfinite(element_spacing()))
        throw ConfigError("spacing_m", "element spacing must be positive");
    if (!std::isfinite(t_obs))
        throw ConfigError("t_obs_s", "observation time must be finite");

    // Largest increment sits at the outermost element, last carrier (or the opposite sign when p < 0).
    double worst = 0.0;
    for (int n : {0, n_half})
        for (int l : {0, n_carriers - 1})
            worst = std::max(worst, std::abs(frequency_increment(*this, n, l)));
    if (!(worst < f0 / 100.0))
        throw ConfigError("delta_f_hz", "max |Δf_{n,l}| = " + std::to_string(worst) +
                                            " Hz violates the narrowband constraint |Δf_{n,l}| < f0/100");
}

Location Location::from_km_deg(double range_km, double angle_deg)
{
    Location loc{range_km * 1e3, deg_to_rad(angle_deg)};
    loc.angle = std::remainder(loc.angle, 2.0 * kPi);
    if (loc.angle <= -kPi)
        loc.angle += 2.0 * kPi;
    return loc;
}

double Location::angle_deg() const { return rad_to_deg(angle); }

void Location::validate() const
{
    if (!(range > 0.0) || !std::isfinite(range))
        throw ConfigError("range", "range must be strictly positive");
    if (!std::isfinite(angle))
        throw ConfigError("angle", "angle must be finite");
}

double frequency_increment(const FdaConfig &cfg, int n, int l)
{
    if (n < -cfg.n_half || n > cfg.n_half)
        throw IndexError("frequency_increment: element index " + std::to_string(n) + " outside [-N, N]");
    if (l < 0 || l >= cfg.n_carriers)
        throw IndexError("frequency_increment: carrier index " + std::to_string(l) + " outside [0, L-1]");
    // ln[(|n|+1)^p (l+1)] = p ln(|n|+1) + ln(l+1)
    return cfg.delta_f * (cfg.p * std::log(static_cast<double>(std::abs(n) + 1)) + std::log(static_cast<double>(l + 1)));
}

ComplexSequence steering_vector(const FdaConfig &cfg, const Location &loc)
{
    cfg.validate();
    loc.validate();
    const double norm = 1.0 / std::sqrt(static_cast<double>(cfg.dimension()));
    const double delay = cfg.t_obs - loc.range / cfg.c;
    const double spatial = 2.0 * kPi * cfg.f0 * cfg.element_spacing() * std::sin(loc.angle) / cfg.c;

    ComplexSequence h;
    h.reserve(cfg.dimension());
    for (int n = -cfg.n_half; n <= cfg.n_half; ++n)
        for (int l = 0; l < cfg.n_carriers; ++l)
        {
            const double phase = 2.0 * kPi * frequency_increment(cfg, n, l) * delay + spatial * n;
            h.push_back(std::polar(norm, phase));
        }
    return h;
}

CMatrix steering_matrix(const FdaConfig &cfg, std::span<const Location> locs)
{
    if (locs.empty())
        throw InvalidInput("steering_matrix: no locations");
    CMatrix H(cfg.dimension(), locs.size());
    for (std::size_t k = 0; k < locs.size(); ++k)
    {
        const auto h = steering_vector(cfg, locs[k]);
        std::copy(h.begin(), h.end(), H.col(k).begin());
    }
    return H;
}

} // namespace wfdm
