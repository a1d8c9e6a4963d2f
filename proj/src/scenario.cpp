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

#include "wfdm/scenario.hpp"

#include "wfdm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace wfdm
{

namespace
{

std::string trim(const std::string &s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

struct Entry
{
    std::string value;
    std::size_t line;
};

class Reader
{
public:
    explicit Reader(const std::string &text)
    {
        std::istringstream in(text);
        std::string raw;
        std::size_t line_no = 0;
        while (std::getline(in, raw))
        {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            const auto hash = raw.find('#');
            const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError(line_no, "", "expected 'key = value'");
            std::string key = trim(line.substr(0, eq));
            std::transform(key.begin(), key.end(), key.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ParseError(line_no, "", "missing key");
            if (value.empty())
                throw ParseError(line_no, key, "missing value");
            if (!entries_.emplace(key, Entry{value, line_no}).second)
                throw ParseError(line_no, key, "duplicate key");
        }
    }

    bool has(const std::string &key) const { return entries_.count(key) != 0; }

    std::optional<double> number(const std::string &key)
    {
        const auto it = take(key);
        if (!it)
            return std::nullopt;
        return parse_number(it->value, it->line, key);
    }

    std::optional<long long> integer(const std::string &key)
    {
        const auto it = take(key);
        if (!it)
            return std::nullopt;
        const double v = parse_number(it->value, it->line, key);
        if (std::floor(v) != v || std::abs(v) > 9.0e15)
            throw ParseError(it->line, key, "expected an integer, got '" + it->value + "'");
        return static_cast<long long>(v);
    }

    std::optional<std::vector<double>> list(const std::string &key)
    {
        const auto it = take(key);
        if (!it)
            return std::nullopt;
        std::string v = it->value;
        if (v.front() == '[')
        {
            if (v.back() != ']')
                throw ParseError(it->line, key, "unterminated list");
            v = v.substr(1, v.size() - 2);
        }
        std::vector<double> out;
        std::string item;
        std::istringstream in(v);
        while (std::getline(in, item, ','))
        {
            item = trim(item);
            if (item.empty())
                throw ParseError(it->line, key, "empty list element");
            out.push_back(parse_number(item, it->line, key));
        }
        return out;
    }

    std::optional<std::string> text(const std::string &key)
    {
        const auto it = take(key);
        if (!it)
            return std::nullopt;
        return it->value;
    }

    std::optional<bool> boolean(const std::string &key)
    {
        const auto it = take(key);
        if (!it)
            return std::nullopt;
        std::string v = it->value;
        std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (v == "true" || v == "1" || v == "yes")
            return true;
        if (v == "false" || v == "0" || v == "no")
            return false;
        throw ParseError(it->line, key, "expected a boolean, got '" + it->value + "'");
    }

    std::size_t line_of(const std::string &key) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    // Highest N among keys "<prefix>N.<field>".
    std::size_t max_index(const std::string &prefix) const
    {
        std::size_t best = 0;
        for (const auto &[k, e] : entries_)
        {
            if (k.rfind(prefix, 0) != 0)
                continue;
            const auto dot = k.find('.');
            if (dot == std::string::npos || dot == prefix.size())
                continue;
            const std::string digits = k.substr(prefix.size(), dot - prefix.size());
            std::size_t idx = 0;
            const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
            if (res.ec != std::errc() || res.ptr != digits.data() + digits.size() || idx == 0)
                throw ParseError(e.line, k, "bad index in key");
            best = std::max(best, idx);
        }
        return best;
    }

    void reject_unused() const
    {
        for (const auto &[k, e] : entries_)
            if (!used_.count(k))
                throw ParseError(e.line, k, "unknown key");
    }

private:
    const Entry *take(const std::string &key)
    {
        const auto it = entries_.find(key);
        if (it == entries_.end())
            return nullptr;
        used_.insert(key);
        return &it->second;
    }

    static double parse_number(const std::string &s, std::size_t line, const std::string &key)
    {
        double v = 0.0;
        const char *first = s.data();
        if (!s.empty() && s.front() == '+')
            ++first;
        const auto res = std::from_chars(first, s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
            throw ParseError(line, key, "expected a number, got '" + s + "'");
        return v;
    }

    std::map<std::string, Entry> entries_;
    std::set<std::string> used_;
};

std::array<int, 4> int_vector(const std::vector<double> &v, const std::string &field)
{
    if (v.size() != 4)
        throw ConfigError(field, "expected exactly 4 integers");
    std::array<int, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
    {
        if (std::floor(v[i]) != v[i] || std::abs(v[i]) > 1e6)
            throw ConfigError(field, "entries must be integers");
        out[i] = static_cast<int>(v[i]);
    }
    return out;
}

std::size_t positive_count(long long v, const std::string &field)
{
    if (v < 1)
        throw ConfigError(field, "must be a positive integer");
    return static_cast<std::size_t>(v);
}

void read_scenario(Reader &r, Scenario &sc)
{
    if (auto v = r.number("f0_hz"))
        sc.fda.f0 = *v;
    if (auto v = r.number("delta_f_hz"))
        sc.fda.delta_f = *v;
    if (auto v = r.integer("n_elements"))
    {
        if (*v < 1 || *v % 2 == 0)
            throw ConfigError("n_elements", "element count must be a positive odd number, got " + std::to_string(*v));
        sc.fda.n_half = static_cast<int>((*v - 1) / 2);
    }
    if (auto v = r.integer("carriers_per_element"))
    {
        if (*v < 1)
            throw ConfigError("carriers_per_element", "at least one carrier per element required");
        sc.fda.n_carriers = static_cast<int>(*v);
    }
    if (auto v = r.number("p"))
        sc.fda.p = *v;
    if (auto v = r.number("spacing_m"))
        sc.fda.spacing = *v;
    if (auto v = r.number("c_mps"))
        sc.fda.c = *v;
    if (auto v = r.number("t_obs_s"))
        sc.fda.t_obs = *v;
    if (auto v = r.number("ps"))
        sc.ps = *v;

    const auto noise = r.number("noise_var");
    const auto snr_db = r.number("snr_db");
    if (noise && snr_db)
        throw ConfigError("snr_db", "give either noise_var or snr_db, not both");
    if (noise)
        sc.noise_var = *noise;
    if (snr_db)
        sc.noise_var = sc.ps / std::pow(10.0, *snr_db / 10.0);

    if (auto v = r.number("beta1"))
        sc.an_baseline.beta1 = *v;
    if (auto v = r.number("cond_limit"))
        sc.cond_limit = *v;

    std::optional<std::array<int, 4>> mv, nv;
    if (auto v = r.list("mv"))
        mv = int_vector(*v, "mv");
    if (auto v = r.list("nv"))
        nv = int_vector(*v, "nv");
    if (auto v = r.number("alpha"))
        sc.coop_wfrft.alpha = *v;
    if (mv)
        sc.coop_wfrft.m_vec = *mv;
    if (nv)
        sc.coop_wfrft.n_vec = *nv;

    // Bobs 1..3 have built-in defaults; extra Bobs need a location.
    std::size_t n_bobs = std::max(sc.bobs.size(), r.max_index("bob"));
    if (auto v = r.integer("num_bobs"))
        n_bobs = positive_count(*v, "num_bobs");
    if (n_bobs < r.max_index("bob"))
        throw ConfigError("num_bobs", "keys refer to Bob " + std::to_string(r.max_index("bob")) +
                                          " but num_bobs is " + std::to_string(n_bobs));
    sc.bobs.resize(n_bobs, BobProfile{Location{0.0, 0.0}, PskAlphabet(4), sc.coop_wfrft, 4});
    for (std::size_t k = 0; k < n_bobs; ++k)
    {
        const std::string pre = "bob" + std::to_string(k + 1) + ".";
        BobProfile &b = sc.bobs[k];
        const auto range = r.number(pre + "range_km");
        const auto angle = r.number(pre + "angle_deg");
        const double range_km = range ? *range : b.location.range / 1e3;
        const double angle_deg = angle ? *angle : b.location.angle_deg();
        b.location = Location::from_km_deg(range_km, angle_deg);
        if (b.location.range == 0.0 && !range)
            throw ConfigError(pre + "range_km", "Bob " + std::to_string(k + 1) + " has no location");
        if (auto v = r.text(pre + "modulation"))
            b.alphabet = PskAlphabet::from_name(*v);
        if (auto v = r.number(pre + "alpha"))
            b.wfrft.alpha = *v;
        if (mv)
            b.wfrft.m_vec = *mv;
        if (nv)
            b.wfrft.n_vec = *nv;
        if (auto v = r.integer(pre + "q"))
        {
            if (*v < 1)
                throw ConfigError(pre + "q", "WFRFT block length must be at least 1");
            b.block_len = static_cast<std::size_t>(*v);
        }
    }

    std::size_t n_eves = std::max(sc.eves.size(), r.max_index("eve"));
    if (auto v = r.integer("num_eves"))
    {
        if (*v < 0)
            throw ConfigError("num_eves", "must not be negative");
        n_eves = static_cast<std::size_t>(*v);
    }
    if (n_eves < r.max_index("eve"))
        throw ConfigError("num_eves", "keys refer to Eve " + std::to_string(r.max_index("eve")) +
                                          " but num_eves is " + std::to_string(n_eves));
    sc.eves.resize(n_eves, Location{0.0, 0.0});
    sc.eve_targets.resize(n_eves, -1);
    for (std::size_t v = 0; v < n_eves; ++v)
    {
        const std::string pre = "eve" + std::to_string(v + 1) + ".";
        const auto range = r.number(pre + "range_km");
        const auto angle = r.number(pre + "angle_deg");
        if (sc.eves[v].range == 0.0 && !range)
            throw ConfigError(pre + "range_km", "Eve " + std::to_string(v + 1) + " has no location");
        sc.eves[v] = Location::from_km_deg(range ? *range : sc.eves[v].range / 1e3,
                                           angle ? *angle : sc.eves[v].angle_deg());
        if (auto t = r.integer(pre + "target"))
        {
            if (*t < 1 || static_cast<std::size_t>(*t) > n_bobs)
                throw ConfigError(pre + "target", "must name a Bob between 1 and " + std::to_string(n_bobs));
            sc.eve_targets[v] = static_cast<int>(*t - 1);
        }
    }
}

void read_run(Reader &r, RunSettings &run)
{
    if (auto v = r.list("snr_grid_db"))
        run.snr_grid_db = *v;
    if (auto v = r.integer("min_symbols"))
        run.mc.min_symbols = positive_count(*v, "min_symbols");
    if (auto v = r.integer("max_symbols"))
        run.mc.max_symbols = positive_count(*v, "max_symbols");
    if (auto v = r.integer("min_errors"))
        run.mc.min_errors = positive_count(*v, "min_errors");
    if (auto v = r.integer("round_trials"))
        run.mc.round_trials = positive_count(*v, "round_trials");
    if (auto v = r.integer("trial_symbols"))
        run.trial_symbols = positive_count(*v, "trial_symbols");
    if (auto v = r.number("map_snr_db"))
        run.map_snr_db = *v;
    if (auto v = r.integer("map_symbols"))
        run.map_symbols = positive_count(*v, "map_symbols");
    if (auto v = r.integer("angle_points"))
        run.angle_points = positive_count(*v, "angle_points");
    if (auto v = r.integer("range_points"))
        run.range_points = positive_count(*v, "range_points");
    if (auto v = r.number("range_min_km"))
        run.range_min_km = *v;
    if (auto v = r.number("range_max_km"))
        run.range_max_km = *v;
    if (auto v = r.list("beta1_grid"))
        run.beta1_grid = *v;
    if (auto v = r.text("eve_set"))
        run.eve_set = *v;
    if (auto v = r.integer("secrecy_angle_points"))
        run.secrecy_angle_points = positive_count(*v, "secrecy_angle_points");
    if (auto v = r.integer("secrecy_range_points"))
        run.secrecy_range_points = positive_count(*v, "secrecy_range_points");
    if (auto v = r.list("robust_snr_grid_db"))
        run.robust_snr_grid_db = *v;
    const auto dr = r.list("delta_r_km");
    const auto dt = r.list("delta_theta_deg");
    if (dr || dt)
    {
        if (!dr || !dt || dr->size() != dt->size())
            throw ConfigError("delta_r_km", "delta_r_km and delta_theta_deg must be given together with equal length");
        run.location_errors.clear();
        for (std::size_t i = 0; i < dr->size(); ++i)
            run.location_errors.emplace_back((*dr)[i], (*dt)[i]);
    }
    if (auto v = r.list("delta_alpha_single"))
        run.delta_alpha_single = *v;
    if (auto v = r.list("delta_alpha_multi"))
        run.delta_alpha_multi = *v;
    if (auto v = r.number("target_ber"))
        run.target_ber = *v;
    if (auto v = r.integer("robust_bob"))
        run.robust_bob = positive_count(*v, "robust_bob");
    if (auto v = r.boolean("leaked_eve"))
        run.leaked_eve = *v;
}

} // namespace

RunSettings::RunSettings()
{
    for (int i = 0; i <= 48; ++i)
        robust_snr_grid_db.push_back(4.0 + 0.25 * i);
}

void RunSettings::validate() const
{
    mc.validate();
    if (snr_grid_db.empty())
        throw ConfigError("snr_grid_db", "empty SNR grid");
    if (!(range_min_km > 0.0) || !(range_max_km > range_min_km))
        throw ConfigError("range", "map range bounds must satisfy 0 < range_min_km < range_max_km");
    for (double b : beta1_grid)
        AnDmConfig{b}.validate();
    if (eve_set != "default" && eve_set != "random9" && eve_set != "all")
        throw ConfigError("eve_set", "expected default, random9 or all");
    if (robust_snr_grid_db.size() < 2)
        throw ConfigError("robust_snr_grid_db", "need at least two points");
    if (!(target_ber > 0.0 && target_ber < 0.5))
        throw ConfigError("target_ber", "must lie in (0, 0.5)");
}

SimConfig parse_config(const std::string &text)
{
    Reader r(text);
    SimConfig cfg;
    read_scenario(r, cfg.scenario);
    read_run(r, cfg.run);
    r.reject_unused();
    cfg.scenario.validate();
    cfg.run.validate();
    if (cfg.run.robust_bob > cfg.scenario.users())
        throw ConfigError("robust_bob", "names a Bob that does not exist");
    return cfg;
}

SimConfig load_config(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

Scenario parse_scenario(const std::string &text) { return parse_config(text).scenario; }

Scenario load_scenario(const std::string &path) { return load_config(path).scenario; }

std::vector<Location> random_eves()
{
    const double pts[9][2] = {{259, 107}, {221, -106}, {298, -138}, {157, 41}, {159, -69},
                              {182, -34}, {247, 8},    {229, 1},    {188, 10}};
    std::vector<Location> out;
    for (const auto &p : pts)
        out.push_back(Location::from_km_deg(p[0], p[1]));
    return out;
}

} // namespace wfdm
