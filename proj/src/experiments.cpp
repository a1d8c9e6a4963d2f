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

#include "wfdm/experiments.hpp"

#include "wfdm/chains.hpp"
#include "wfdm/errors.hpp"
#include "wfdm/metrics.hpp"
#include "wfdm/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

namespace wfdm
{

namespace
{

double noise_for_snr(double ps, double snr_db) { return ps / db_to_linear(snr_db); }

// Columns of the length-K transform, stored row-major as op[i][j].
std::vector<ComplexSequence> operator_matrix(std::size_t K, const WfrftParams &p)
{
    std::vector<ComplexSequence> op(K, ComplexSequence(K));
    ComplexSequence e(K);
    for (std::size_t j = 0; j < K; ++j)
    {
        std::fill(e.begin(), e.end(), cplx(0.0));
        e[j] = 1.0;
        const ComplexSequence col = wfrft(e, p);
        for (std::size_t i = 0; i < K; ++i)
            op[i][j] = col[i];
    }
    return op;
}

void mat_vec(const std::vector<ComplexSequence> &op, std::span<const cplx> v, std::span<cplx> out)
{
    for (std::size_t i = 0; i < op.size(); ++i)
    {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j)
            acc += op[i][j] * v[j];
        out[i] = acc;
    }
}

unsigned draw_label(RandomStream &rng, const PskAlphabet &a)
{
    return static_cast<unsigned>(rng.next_u64() & static_cast<std::uint64_t>(a.order() - 1));
}

void score(const PskAlphabet &a, cplx y, unsigned tx_label, Tally &t)
{
    const unsigned rx = a.label(a.decide(y));
    t.errors += static_cast<std::uint64_t>(std::popcount(rx ^ tx_label));
    t.bits += static_cast<std::uint64_t>(a.bits_per_symbol());
    t.symbols += 1;
}

std::vector<RandomStream> noise_streams(const RandomStream &rng, std::size_t n)
{
    std::vector<RandomStream> out;
    out.reserve(n);
    for (std::size_t r = 0; r < n; ++r)
        out.push_back(rng.child(1 + r));
    return out;
}

ResultRow row(const std::string &experiment, const std::string &scheme, const std::string &p1n,
              std::optional<double> p1, const std::string &p2n, std::optional<double> p2, const std::string &metric,
              double value, std::optional<std::uint64_t> n = {}, std::optional<double> ci = {})
{
    ResultRow r;
    r.experiment = experiment;
    r.scheme = scheme;
    r.param1_name = p1n;
    r.param1 = p1;
    r.param2_name = p2n;
    r.param2 = p2;
    r.metric = metric;
    r.value = value;
    r.n = n;
    r.ci95 = ci;
    return r;
}

void meta_rows(const ExperimentSpec &spec, std::vector<ResultRow> &rows)
{
    const std::string ex = to_string(spec.experiment);
    const auto &mc = spec.config.run.mc;
    ResultRow seed = row(ex, "", "", {}, "", {}, "meta.seed", 0.0);
    seed.text = std::to_string(spec.seed);
    rows.push_back(seed);
    ResultRow probe = row(ex, "", "", {}, "", {}, "meta.probe_mode", 0.0);
    probe.text = to_string(spec.probe);
    rows.push_back(probe);
    rows.push_back(row(ex, "", "", {}, "", {}, "meta.min_symbols", static_cast<double>(mc.min_symbols)));
    rows.push_back(row(ex, "", "", {}, "", {}, "meta.max_symbols", static_cast<double>(mc.max_symbols)));
    rows.push_back(row(ex, "", "", {}, "", {}, "meta.min_errors", static_cast<double>(mc.min_errors)));
    ResultRow note = row(ex, "", "", {}, "", {}, "meta.mc_counts", 0.0);
    note.text = "artifact defaults (sample counts are not given by the reference)";
    rows.push_back(note);
}

void ber_rows(std::vector<ResultRow> &rows, const std::string &ex, const std::string &scheme, const std::string &p1n,
              double p1, const std::string &p2n, std::optional<double> p2, const std::string &name,
              const BerEstimate &e)
{
    rows.push_back(row(ex, scheme, p1n, p1, p2n, p2, "ber." + name, e.ber(), e.tally.bits, e.ci95()));
    rows.push_back(row(ex, scheme, p1n, p1, p2n, p2, "bit_errors." + name, static_cast<double>(e.tally.errors),
                       e.tally.bits));
    rows.push_back(row(ex, scheme, p1n, p1, p2n, p2, "converged." + name, e.converged ? 1.0 : 0.0, e.tally.bits));
}

std::vector<BerEstimate> simulate(const LinkSimulator &link, double noise_var, std::uint64_t seed,
                                  const std::vector<std::uint64_t> &key, const McSettings &mc, std::size_t trial_symbols,
                                  const std::vector<bool> &watch = {})
{
    const std::size_t n = link.round_symbols(trial_symbols);
    const TrialFn fn = [&](RandomStream &rng, std::vector<Tally> &out) { link.trial(rng, n, noise_var, out); };
    return run_monte_carlo(link.receivers(), fn, seed, key, mc, watch);
}

std::string bob_name(std::size_t k) { return "bob" + std::to_string(k + 1); }
std::string eve_name(std::size_t v) { return "eve" + std::to_string(v + 1); }

Scenario perturbed_bobs(const Scenario &sc, double dr_km, double dtheta_deg)
{
    Scenario out = sc;
    for (auto &b : out.bobs)
        b.location = Location::from_km_deg(b.location.range / 1e3 + dr_km, b.location.angle_deg() + dtheta_deg);
    return out;
}

std::vector<std::pair<std::string, std::vector<Location>>> eve_sets(const Scenario &sc, const std::string &which)
{
    std::vector<std::pair<std::string, std::vector<Location>>> out;
    if (which == "default" || which == "all")
        out.emplace_back("default", sc.eves);
    if (which == "random9" || which == "all")
        out.emplace_back("random9", random_eves());
    return out;
}

// Bob and Eve rates plus the secrecy rate for one scheme at one SNR.
RateReport rate_report(const Scenario &sc, const Precoder &pre, Scheme scheme, std::span<const Location> eves,
                       double noise_var, double beta1)
{
    const std::size_t K = sc.users();
    RateReport rep;
    std::vector<WfrftWeights> w(K);
    for (std::size_t k = 0; k < K; ++k)
        w[k] = weights_multi(sc.bobs[k].wfrft);
    switch (scheme)
    {
    case Scheme::wfrft_coop: {
        rep.bob_rates.assign(K, achievable_rate(coop_bob_sinr(sc.ps, noise_var)));
        const WfrftWeights wc = weights_multi(sc.coop_wfrft);
        std::vector<double> flat;
        for (const auto &e : eves)
        {
            const double r = achievable_rate(coop_eve_sinr(pre, e, sc.fda, wc, sc.ps, noise_var));
            rep.eve_rates.push_back({r});
            flat.push_back(r);
        }
        rep.secrecy_rate = coop_secrecy_rate(rep.bob_rates, flat);
        break;
    }
    case Scheme::wfrft_inde: {
        rep.bob_rates.assign(K, achievable_rate(snr(sc.ps, noise_var)));
        for (const auto &e : eves)
        {
            const ComplexSequence rho = leakage_coefficients(pre, sc.fda, e);
            std::vector<double> rates(K);
            for (std::size_t k = 0; k < K; ++k)
                rates[k] = achievable_rate(inde_eve_sinr(rho, w, k, sc.ps, noise_var));
            rep.eve_rates.push_back(rates);
        }
        rep.secrecy_rate = inde_secrecy_rate(rep.bob_rates, rep.eve_rates);
        break;
    }
    case Scheme::an_dm: {
        rep.bob_rates.assign(K, achievable_rate(snr_an(sc.ps, noise_var, beta1)));
        for (const auto &e : eves)
        {
            const ComplexSequence rho = leakage_coefficients(pre, sc.fda, e);
            const double ng = null_space_gain(pre, sc.fda, e);
            std::vector<double> rates(K);
            for (std::size_t k = 0; k < K; ++k)
                rates[k] = achievable_rate(an_eve_sinr(rho, ng, pre.dimension(), k, sc.ps, noise_var, beta1));
            rep.eve_rates.push_back(rates);
        }
        rep.secrecy_rate = inde_secrecy_rate(rep.bob_rates, rep.eve_rates);
        break;
    }
    }
    return rep;
}

std::vector<double> beta_grid(const ExperimentSpec &spec)
{
    std::vector<double> g = spec.config.run.beta1_grid;
    g.push_back(spec.config.scenario.an_baseline.beta1);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

} // namespace

// ---------------------------------------------------------------- names

std::string to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::wfrft_coop:
        return "wfrft_coop";
    case Scheme::wfrft_inde:
        return "wfrft_inde";
    default:
        return "an_dm";
    }
}

std::string to_string(ProbeMode m) { return m == ProbeMode::with_key ? "with_key" : "without_key"; }

std::string to_string(Experiment e)
{
    switch (e)
    {
    case Experiment::ber_vs_snr:
        return "ber_vs_snr";
    case Experiment::ber_vs_angle:
        return "ber_vs_angle";
    case Experiment::ber_vs_range:
        return "ber_vs_range";
    case Experiment::secrecy_vs_snr:
        return "secrecy_vs_snr";
    case Experiment::secrecy_map:
        return "secrecy_map";
    case Experiment::robustness_location:
        return "robustness_location";
    case Experiment::robustness_alpha:
        return "robustness_alpha";
    default:
        return "property_suite";
    }
}

Scheme parse_scheme(const std::string &s)
{
    for (Scheme x : {Scheme::wfrft_coop, Scheme::wfrft_inde, Scheme::an_dm})
        if (to_string(x) == s)
            return x;
    throw ConfigError("scheme", "unknown scheme '" + s + "' (expected wfrft_coop, wfrft_inde or an_dm)");
}

ProbeMode parse_probe_mode(const std::string &s)
{
    if (s == "with_key")
        return ProbeMode::with_key;
    if (s == "without_key")
        return ProbeMode::without_key;
    throw ConfigError("probe", "unknown probe mode '" + s + "' (expected with_key or without_key)");
}

Experiment parse_experiment(const std::string &s)
{
    for (int i = 0; i <= static_cast<int>(Experiment::property_suite); ++i)
        if (to_string(static_cast<Experiment>(i)) == s)
            return static_cast<Experiment>(i);
    throw ConfigError("experiment", "unknown experiment '" + s + "'");
}

// ---------------------------------------------------------------- link

LinkSimulator::LinkSimulator(Scenario sc, Scheme scheme, Precoder pre, std::vector<ProbeSpec> extras,
                             KeyOverride keys)
    : sc_(std::move(sc)), scheme_(scheme), pre_(std::move(pre))
{
    const std::size_t K = sc_.users();
    if (pre_.users() != K)
        throw InvalidInput("LinkSimulator: precoder serves " + std::to_string(pre_.users()) + " users, scenario has " +
                           std::to_string(K));
    const bool need_h = scheme_ == Scheme::an_dm;
    const auto add = [&](const std::string &name, const Location &loc, std::size_t target, bool key) {
        if (target >= K)
            throw IndexError("LinkSimulator: receiver '" + name + "' targets a missing Bob");
        Rx r{leakage_coefficients(pre_, sc_.fda, loc), {}, target, key};
        if (need_h)
            r.h = steering_vector(sc_.fda, loc);
        rx_.push_back(std::move(r));
        names_.push_back(name);
    };
    for (std::size_t k = 0; k < K; ++k)
        add(bob_name(k), sc_.bobs[k].location, k, true);
    for (const auto &p : extras)
        add(p.name, p.location, p.target, p.with_key);

    const WfrftParams rx = keys.coop_rx.value_or(sc_.coop_wfrft);
    coop_tx_op_ = operator_matrix(K, sc_.coop_wfrft);
    coop_rx_op_ = operator_matrix(K, rx.inverse());
    coop_key_op_ = operator_matrix(K, sc_.coop_wfrft.inverse());

    if (!keys.inde_rx.empty() && keys.inde_rx.size() != K)
        throw InvalidInput("LinkSimulator: need one decoder key per Bob");
    for (std::size_t k = 0; k < K; ++k)
        inde_rx_.push_back(keys.inde_rx.empty() ? sc_.bobs[k].wfrft : keys.inde_rx[k]);
}

std::size_t LinkSimulator::bits_per_symbol(std::size_t receiver) const
{
    return static_cast<std::size_t>(sc_.bobs.at(rx_.at(receiver).target).alphabet.bits_per_symbol());
}

std::size_t LinkSimulator::round_symbols(std::size_t n) const
{
    n = std::max<std::size_t>(n, 1);
    if (scheme_ != Scheme::wfrft_inde)
        return n;
    const std::size_t p = sc_.frame_period();
    return (n + p - 1) / p * p;
}

void LinkSimulator::trial(RandomStream &rng, std::size_t n_symbols, double noise_var, std::vector<Tally> &out) const
{
    out.assign(rx_.size(), Tally{});
    switch (scheme_)
    {
    case Scheme::wfrft_coop:
        trial_coop(rng, n_symbols, noise_var, out);
        break;
    case Scheme::wfrft_inde:
        trial_inde(rng, round_symbols(n_symbols), noise_var, out);
        break;
    case Scheme::an_dm:
        trial_an(rng, n_symbols, noise_var, out);
        break;
    }
}

void LinkSimulator::trial_coop(RandomStream &rng, std::size_t n, double noise_var, std::vector<Tally> &out) const
{
    const std::size_t K = sc_.users();
    RandomStream data = rng.child(0);
    auto noise = noise_streams(rng, rx_.size());
    std::vector<unsigned> lab(K);
    ComplexSequence s(K), u(K), yb(K), dec(K);
    for (std::size_t t = 0; t < n; ++t)
    {
        for (std::size_t k = 0; k < K; ++k)
        {
            lab[k] = draw_label(data, sc_.bobs[k].alphabet);
            s[k] = sc_.bobs[k].alphabet.point_for_label(lab[k]);
        }
        mat_vec(coop_tx_op_, s, u);
        for (std::size_t k = 0; k < K; ++k)
        {
            yb[k] = effective_observation(rx_[k].rho, u, sc_.ps);
            if (noise_var > 0.0)
                yb[k] += noise[k].complex_gaussian(noise_var);
        }
        mat_vec(coop_rx_op_, yb, dec);
        for (std::size_t k = 0; k < K; ++k)
            score(sc_.bobs[k].alphabet, dec[k], lab[k], out[k]);

        for (std::size_t r = K; r < rx_.size(); ++r)
        {
            const std::size_t tk = rx_[r].target;
            cplx y = effective_observation(rx_[r].rho, u, sc_.ps);
            if (noise_var > 0.0)
                y += noise[r].complex_gaussian(noise_var);
            if (rx_[r].with_key)
            {
                // The probe's observation takes the target's slot in the cooperative vector.
                cplx acc = coop_key_op_[tk][tk] * (y - yb[tk]);
                for (std::size_t j = 0; j < K; ++j)
                    acc += coop_key_op_[tk][j] * yb[j];
                y = acc;
            }
            score(sc_.bobs[tk].alphabet, y, lab[tk], out[r]);
        }
    }
}

void LinkSimulator::trial_inde(RandomStream &rng, std::size_t n, double noise_var, std::vector<Tally> &out) const
{
    const std::size_t K = sc_.users();
    RandomStream data = rng.child(0);
    auto noise = noise_streams(rng, rx_.size());
    std::vector<std::vector<unsigned>> lab(K, std::vector<unsigned>(n));
    std::vector<ComplexSequence> z(K);
    for (std::size_t k = 0; k < K; ++k)
    {
        const auto &a = sc_.bobs[k].alphabet;
        ComplexSequence s(n);
        for (std::size_t q = 0; q < n; ++q)
        {
            lab[k][q] = draw_label(data, a);
            s[q] = a.point_for_label(lab[k][q]);
        }
        z[k] = inde_path_stream(s, sc_.bobs[k]);
    }

    ComplexSequence obs(n), zq(K);
    for (std::size_t r = 0; r < rx_.size(); ++r)
    {
        for (std::size_t q = 0; q < n; ++q)
        {
            for (std::size_t k = 0; k < K; ++k)
                zq[k] = z[k][q];
            obs[q] = effective_observation(rx_[r].rho, zq, sc_.ps);
            if (noise_var > 0.0)
                obs[q] += noise[r].complex_gaussian(noise_var);
        }
        const std::size_t tk = rx_[r].target;
        const BobProfile &bob = sc_.bobs[tk];
        ComplexSequence dec;
        if (r < K)
        {
            BobProfile keyed = bob;
            keyed.wfrft = inde_rx_[tk];
            dec = inde_bob_decode(obs, keyed);
        }
        else if (rx_[r].with_key)
            dec = inde_bob_decode(obs, bob);
        else
            dec = obs;
        for (std::size_t q = 0; q < n; ++q)
            score(bob.alphabet, dec[q], lab[tk][q], out[r]);
    }
}

void LinkSimulator::trial_an(RandomStream &rng, std::size_t n, double noise_var, std::vector<Tally> &out) const
{
    const std::size_t K = sc_.users();
    const double beta = sc_.an_baseline.beta1;
    const double a_an = std::sqrt((1.0 - beta * beta) * sc_.ps);
    RandomStream data = rng.child(0);
    RandomStream an_rng = rng.child(1 + rx_.size());
    auto noise = noise_streams(rng, rx_.size());
    std::vector<unsigned> lab(K);
    ComplexSequence s(K);
    for (std::size_t t = 0; t < n; ++t)
    {
        for (std::size_t k = 0; k < K; ++k)
        {
            lab[k] = draw_label(data, sc_.bobs[k].alphabet);
            s[k] = sc_.bobs[k].alphabet.point_for_label(lab[k]);
        }
        const ComplexSequence w = draw_an_direction(pre_, an_rng);
        for (std::size_t r = 0; r < rx_.size(); ++r)
        {
            cplx y = effective_observation(rx_[r].rho, s, beta * beta * sc_.ps) + a_an * dot_conj(rx_[r].h, w);
            if (noise_var > 0.0)
                y += noise[r].complex_gaussian(noise_var);
            const std::size_t tk = rx_[r].target;
            score(sc_.bobs[tk].alphabet, y, lab[tk], out[r]);
        }
    }
}

// ---------------------------------------------------------------- experiments

std::vector<ResultRow> run_ber_vs_snr(const ExperimentSpec &spec)
{
    const Scenario &sc = spec.config.scenario;
    const RunSettings &run = spec.config.run;
    const std::string ex = to_string(Experiment::ber_vs_snr);
    McSettings mc = run.mc;
    mc.threads = spec.threads;
    const Precoder pre = sc.precoder();

    std::vector<ResultRow> rows;
    meta_rows(spec, rows);
    for (Scheme scheme : spec.schemes)
    {
        std::vector<ProbeSpec> extras;
        for (std::size_t v = 0; v < sc.eves.size(); ++v)
            extras.push_back({eve_name(v), sc.eves[v], sc.eve_target(v), false});
        if (run.leaked_eve && scheme != Scheme::an_dm)
            for (std::size_t v = 0; v < sc.eves.size(); ++v)
                extras.push_back({eve_name(v) + "_leaked", sc.eves[v], sc.eve_target(v), true});
        const LinkSimulator link(sc, scheme, pre, extras);
        const std::string sn = to_string(scheme);

        for (std::size_t i = 0; i < run.snr_grid_db.size(); ++i)
        {
            const double snr_db = run.snr_grid_db[i];
            const double nv = noise_for_snr(sc.ps, snr_db);
            const auto est = simulate(link, nv, spec.seed,
                                      {static_cast<std::uint64_t>(Experiment::ber_vs_snr),
                                       static_cast<std::uint64_t>(scheme), i},
                                      mc, run.trial_symbols);
            const double gamma = scheme == Scheme::an_dm ? snr_an(sc.ps, nv, sc.an_baseline.beta1) : snr(sc.ps, nv);
            for (std::size_t r = 0; r < link.receivers(); ++r)
                ber_rows(rows, ex, sn, "snr_db", snr_db, "", {}, link.names()[r], est[r]);
            for (std::size_t k = 0; k < sc.users(); ++k)
                rows.push_back(row(ex, sn, "snr_db", snr_db, "", {}, "theory." + bob_name(k),
                                   theoretical_ber_mpsk(gamma, sc.bobs[k].alphabet.order())));
        }
    }
    return rows;
}

std::vector<ResultRow> run_ber_map(const ExperimentSpec &spec)
{
    const bool by_angle = spec.experiment != Experiment::ber_vs_range;
    const Scenario &sc = spec.config.scenario;
    const RunSettings &run = spec.config.run;
    const std::string ex = to_string(by_angle ? Experiment::ber_vs_angle : Experiment::ber_vs_range);
    const Precoder pre = sc.precoder();
    const double nv = noise_for_snr(sc.ps, run.map_snr_db);
    const bool key = spec.probe == ProbeMode::with_key;

    const std::vector<double> axis =
        by_angle ? angle_grid(run.angle_points) : range_grid_km(run.range_min_km, run.range_max_km, run.range_points);

    std::vector<ProbeSpec> probes;
    std::vector<std::pair<double, double>> coords; // (angle_deg, range_km)
    for (std::size_t k = 0; k < sc.users(); ++k)
    {
        const double r_km = sc.bobs[k].location.range / 1e3;
        const double a_deg = sc.bobs[k].location.angle_deg();
        for (double x : axis)
        {
            const double ang = by_angle ? x : a_deg;
            const double rng_km = by_angle ? r_km : x;
            probes.push_back({"probe", Location::from_km_deg(rng_km, ang), k, key});
            coords.emplace_back(ang, rng_km);
        }
    }

    McSettings mc = run.mc;
    mc.threads = spec.threads;
    mc.min_symbols = run.map_symbols;
    mc.max_symbols = run.map_symbols;
    const std::size_t per_trial = (run.map_symbols + mc.round_trials - 1) / mc.round_trials;

    std::vector<ResultRow> rows;
    meta_rows(spec, rows);
    rows.push_back(row(ex, "", "", {}, "", {}, "meta.snr_db", run.map_snr_db));
    for (Scheme scheme : spec.schemes)
    {
        const LinkSimulator link(sc, scheme, pre, probes);
        const std::string sn = to_string(scheme);
        // Fixed budget: the error target is unreachable, so every point runs map_symbols.
        McSettings fixed = mc;
        fixed.min_errors = ~std::size_t{0};
        const auto res = simulate(link, nv, spec.seed,
                                  {static_cast<std::uint64_t>(spec.experiment), static_cast<std::uint64_t>(scheme)},
                                  fixed, per_trial);
        for (std::size_t p = 0; p < probes.size(); ++p)
        {
            BerEstimate e = res[sc.users() + p];
            e.converged = e.tally.errors >= run.mc.min_errors;
            const std::string name = "target_" + bob_name(probes[p].target);
            if (by_angle)
                ber_rows(rows, ex, sn, "angle_deg", coords[p].first, "range_km", coords[p].second, name, e);
            else
                ber_rows(rows, ex, sn, "range_km", coords[p].second, "angle_deg", coords[p].first, name, e);
        }
    }
    return rows;
}

std::vector<ResultRow> run_secrecy_vs_snr(const ExperimentSpec &spec)
{
    const Scenario &sc = spec.config.scenario;
    const RunSettings &run = spec.config.run;
    const std::string ex = to_string(Experiment::secrecy_vs_snr);
    const Precoder pre = sc.precoder();
    std::vector<ResultRow> rows;
    meta_rows(spec, rows);
    const auto sets = eve_sets(sc, run.eve_set);

    for (Scheme scheme : spec.schemes)
    {
        const std::string sn = to_string(scheme);
        const std::vector<double> betas =
            scheme == Scheme::an_dm ? beta_grid(spec) : std::vector<double>{sc.an_baseline.beta1};
        for (double beta : betas)
        {
            const std::string p2n = scheme == Scheme::an_dm ? "beta1" : "";
            const std::optional<double> p2 = scheme == Scheme::an_dm ? std::optional<double>(beta) : std::nullopt;
            for (double snr_db : run.snr_grid_db)
            {
                const double nv = noise_for_snr(sc.ps, snr_db);
                bool bobs_done = false;
                for (const auto &[set_name, eves] : sets)
                {
                    if (eves.empty())
                        continue;
                    const RateReport rep = rate_report(sc, pre, scheme, eves, nv, beta);
                    if (!bobs_done)
                    {
                        for (std::size_t k = 0; k < rep.bob_rates.size(); ++k)
                            rows.push_back(row(ex, sn, "snr_db", snr_db, p2n, p2, "bob_rate." + bob_name(k),
                                               rep.bob_rates[k]));
                        bobs_done = true;
                    }
                    for (std::size_t v = 0; v < rep.eve_rates.size(); ++v)
                    {
                        if (scheme == Scheme::wfrft_coop)
                            rows.push_back(row(ex, sn, "snr_db", snr_db, p2n, p2,
                                               "eve_rate." + eve_name(v) + "." + set_name, rep.eve_rates[v][0]));
                        else
                            for (std::size_t k = 0; k < rep.eve_rates[v].size(); ++k)
                                rows.push_back(row(ex, sn, "snr_db", snr_db, p2n, p2,
                                                   "eve_rate." + eve_name(v) + "_" + bob_name(k) + "." + set_name,
                                                   rep.eve_rates[v][k]));
                    }
                    rows.push_back(
                        row(ex, sn, "snr_db", snr_db, p2n, p2, "secrecy_rate." + set_name, rep.secrecy_rate));
                }
            }
        }
    }
    return rows;
}

std::vector<ResultRow> run_secrecy_map(const ExperimentSpec &spec)
{
    const Scenario &sc = spec.config.scenario;
    const RunSettings &run = spec.config.run;
    const std::string ex = to_string(Experiment::secrecy_map);
    const Precoder pre = sc.precoder();
    const double nv = noise_for_snr(sc.ps, run.map_snr_db);
    const auto angles = angle_grid(run.secrecy_angle_points);
    const auto ranges = range_grid_km(run.range_min_km, run.range_max_km, run.secrecy_range_points);

    std::vector<ResultRow> rows;
    meta_rows(spec, rows);
    rows.push_back(row(ex, "", "", {}, "", {}, "meta.snr_db", run.map_snr_db));
    for (Scheme scheme : spec.schemes)
    {
        const std::string sn = to_string(scheme);
        for (std::size_t k = 0; k < sc.users(); ++k)
        {
            const Location loc = sc.bobs[k].location;
            const Location eve[1] = {loc};
            const RateReport rep = rate_report(sc, pre, scheme, eve, nv, sc.an_baseline.beta1);
            rows.push_back(row(ex, sn, "angle_deg", loc.angle_deg(), "range_km", loc.range / 1e3,
                               "secrecy_rate.at_" + bob_name(k), rep.secrecy_rate));
        }
        std::vector<double> cells(angles.size() * ranges.size());
        parallel_for(angles.size(), spec.threads, [&](std::size_t i) {
            for (std::size_t j = 0; j < ranges.size(); ++j)
            {
                const Location eve[1] = {Location::from_km_deg(ranges[j], angles[i])};
                cells[i * ranges.size() + j] =
                    rate_report(sc, pre, scheme, eve, nv, sc.an_baseline.beta1).secrecy_rate;
            }
        });
        for (std::size_t i = 0; i < angles.size(); ++i)
            for (std::size_t j = 0; j < ranges.size(); ++j)
                rows.push_back(row(ex, sn, "angle_deg", angles[i], "range_km", ranges[j], "secrecy_rate",
                                   cells[i * ranges.size() + j]));
    }
    return rows;
}

std::vector<ResultRow> run_robustness(const ExperimentSpec &spec)
{
    const bool location_mode = spec.experiment != Experiment::robustness_alpha;
    const Scenario &sc = spec.config.scenario;
    const RunSettings &run = spec.config.run;
    const std::string ex = to_string(location_mode ? Experiment::robustness_location : Experiment::robustness_alpha);
    const std::size_t watched = run.robust_bob - 1;
    const std::string wname = bob_name(watched);
    McSettings mc = run.mc;
    mc.threads = spec.threads;

    std::vector<ResultRow> rows;
    meta_rows(spec, rows);
    rows.push_back(row(ex, "", "", {}, "", {}, "meta.target_ber", run.target_ber));

    // One BER curve, stopped two points after it falls below the target.
    const auto curve = [&](const LinkSimulator &link, Scheme scheme, std::vector<double> &snrs,
                           std::vector<BerEstimate> &est) {
        std::vector<bool> watch(link.receivers(), false);
        watch[watched] = true;
        int below = 0;
        for (std::size_t i = 0; i < run.robust_snr_grid_db.size() && below < 2; ++i)
        {
            const double snr_db = run.robust_snr_grid_db[i];
            const auto e = simulate(link, noise_for_snr(sc.ps, snr_db), spec.seed,
                                    {static_cast<std::uint64_t>(spec.experiment), static_cast<std::uint64_t>(scheme), i},
                                    mc, run.trial_symbols, watch);
            snrs.push_back(snr_db);
            est.push_back(e[watched]);
            if (e[watched].ber() < run.target_ber)
                ++below;
        }
    };
    const auto emit = [&](const std::string &sn, const std::string &p2n, double p2, const std::string &suffix,
                          const std::vector<double> &snrs, const std::vector<BerEstimate> &est,
                          std::optional<double> ref) -> std::optional<double> {
        std::vector<double> bers;
        for (std::size_t i = 0; i < snrs.size(); ++i)
        {
            ber_rows(rows, ex, sn, "snr_db", snrs[i], p2n, p2, wname + suffix, est[i]);
            bers.push_back(est[i].ber());
        }
        const auto at = snr_at_ber(snrs, bers, run.target_ber);
        if (at)
        {
            rows.push_back(row(ex, sn, "", {}, p2n, p2, "snr_at_target." + wname + suffix, *at));
            if (ref)
                rows.push_back(row(ex, sn, "", {}, p2n, p2, "penalty_db." + wname + suffix, *at - *ref));
        }
        return at;
    };

    for (Scheme scheme : spec.schemes)
    {
        const std::string sn = to_string(scheme);
        if (location_mode)
        {
            std::vector<std::pair<double, double>> conds{{0.0, 0.0}};
            conds.insert(conds.end(), run.location_errors.begin(), run.location_errors.end());
            std::optional<double> ref;
            for (std::size_t c = 0; c < conds.size(); ++c)
            {
                const auto [dr, dt] = conds[c];
                rows.push_back(row(ex, sn, "", {}, "condition", static_cast<double>(c), "condition.delta_r_km", dr));
                rows.push_back(
                    row(ex, sn, "", {}, "condition", static_cast<double>(c), "condition.delta_theta_deg", dt));
                const Precoder est_pre = perturbed_bobs(sc, dr, dt).precoder();
                const LinkSimulator link(sc, scheme, est_pre, {});
                std::vector<double> snrs;
                std::vector<BerEstimate> est;
                curve(link, scheme, snrs, est);
                const auto at = emit(sn, "condition", static_cast<double>(c), "", snrs, est, ref);
                if (c == 0)
                    ref = at;
            }
        }
        else
        {
            if (scheme == Scheme::an_dm)
                continue;
            const Precoder pre = sc.precoder();
            for (const bool multi : {false, true})
            {
                Scenario fam = sc;
                if (!multi)
                {
                    fam.coop_wfrft = WfrftParams{sc.coop_wfrft.alpha, {}, {}};
                    for (auto &b : fam.bobs)
                        b.wfrft = WfrftParams{b.wfrft.alpha, {}, {}};
                }
                std::vector<double> deltas = multi ? run.delta_alpha_multi : run.delta_alpha_single;
                deltas.insert(deltas.begin(), 0.0);
                const std::string suffix = multi ? ".multi" : ".single";
                const std::string p2n = multi ? "delta_alpha_multi" : "delta_alpha_single";
                std::optional<double> ref;
                for (std::size_t d = 0; d < deltas.size(); ++d)
                {
                    if (d > 0 && deltas[d] == 0.0)
                        continue;
                    KeyOverride keys;
                    keys.coop_rx = fam.coop_wfrft.with_alpha(fam.coop_wfrft.alpha + deltas[d]);
                    for (const auto &b : fam.bobs)
                        keys.inde_rx.push_back(b.wfrft.with_alpha(b.wfrft.alpha + deltas[d]));
                    const LinkSimulator link(fam, scheme, pre, {}, keys);
                    std::vector<double> snrs;
                    std::vector<BerEstimate> est;
                    curve(link, scheme, snrs, est);
                    const auto at = emit(sn, p2n, deltas[d], suffix, snrs, est, ref);
                    if (d == 0)
                        ref = at;
                }
            }
        }
    }
    return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentSpec &spec)
{
    switch (spec.experiment)
    {
    case Experiment::ber_vs_snr:
        return run_ber_vs_snr(spec);
    case Experiment::ber_vs_angle:
    case Experiment::ber_vs_range:
        return run_ber_map(spec);
    case Experiment::secrecy_vs_snr:
        return run_secrecy_vs_snr(spec);
    case Experiment::secrecy_map:
        return run_secrecy_map(spec);
    case Experiment::robustness_location:
    case Experiment::robustness_alpha:
        return run_robustness(spec);
    case Experiment::property_suite:
        return run_property_suite(spec);
    }
    return {};
}

bool has_nonconverged(const std::vector<ResultRow> &rows)
{
    return std::any_of(rows.begin(), rows.end(),
                       [](const ResultRow &r) { return r.metric.rfind("converged.", 0) == 0 && r.value == 0.0; });
}

std::optional<double> snr_at_ber(const std::vector<double> &snr_db, const std::vector<double> &ber, double target)
{
    if (snr_db.size() != ber.size())
        throw InvalidInput("snr_at_ber: length mismatch");
    const auto lg = [](double b) { return std::log10(std::max(b, 1e-300)); };
    for (std::size_t i = 0; i + 1 < ber.size(); ++i)
    {
        if (ber[i] >= target && ber[i + 1] < target)
        {
            const double y0 = lg(ber[i]), y1 = lg(ber[i + 1]), yt = std::log10(target);
            const double f = (y0 - yt) / (y0 - y1);
            return snr_db[i] + f * (snr_db[i + 1] - snr_db[i]);
        }
    }
    return std::nullopt;
}

double lobe_width_deg(const std::vector<double> &angles_deg, const std::vector<double> &ber, double center_deg,
                      double threshold)
{
    if (angles_deg.size() != ber.size() || angles_deg.empty())
        throw InvalidInput("lobe_width_deg: need matching non-empty grids");
    std::size_t c = 0;
    for (std::size_t i = 1; i < angles_deg.size(); ++i)
        if (std::abs(angles_deg[i] - center_deg) < std::abs(angles_deg[c] - center_deg))
            c = i;
    if (!(ber[c] < threshold))
        return 0.0;
    std::size_t lo = c, hi = c;
    while (lo > 0 && ber[lo - 1] < threshold)
        --lo;
    while (hi + 1 < ber.size() && ber[hi + 1] < threshold)
        ++hi;
    return angles_deg[hi] - angles_deg[lo];
}

std::vector<double> angle_grid(std::size_t n)
{
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = -90.0 + 180.0 * static_cast<double>(i + 1) / static_cast<double>(n + 1);
    return out;
}

std::vector<double> range_grid_km(double lo, double hi, std::size_t n)
{
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

} // namespace wfdm
