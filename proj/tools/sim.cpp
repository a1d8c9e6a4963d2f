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

// sim: run one experiment and write its CSV.
//
//   sim <experiment> --config <path> --seed <u64> --out <csv path>
//       [--scheme wfrft_coop|wfrft_inde|an_dm] [--probe with_key|without_key] [--threads N]
//
// Exit status: 0 success, 2 configuration error, 3 a reported BER point did not converge.

#include "wfdm/errors.hpp"
#include "wfdm/experiments.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    using namespace wfdm;

    CLI::App app{"WFRFT directional modulation simulator"};
    std::string experiment, config_path, out_path, scheme, probe = "with_key";
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::vector<double> snr_grid;

    app.add_option("experiment", experiment,
                   "ber_vs_snr | ber_vs_angle | ber_vs_range | secrecy_vs_snr | secrecy_map | "
                   "robustness_location | robustness_alpha | property_suite")
        ->required();
    app.add_option("--config", config_path, "scenario file (absent keys keep their defaults)");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--out", out_path, "output CSV path")->required();
    app.add_option("--scheme", scheme, "restrict to one scheme");
    app.add_option("--probe", probe, "probe receiver mode for BER maps");
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--snr-grid", snr_grid, "override the SNR grid (dB)")->delimiter(',');

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try
    {
        ExperimentSpec spec;
        spec.experiment = parse_experiment(experiment);
        if (!config_path.empty())
            spec.config = load_config(config_path);
        if (!snr_grid.empty())
            spec.config.run.snr_grid_db = snr_grid;
        spec.seed = seed;
        spec.threads = threads;
        spec.probe = parse_probe_mode(probe);
        if (!scheme.empty())
            spec.schemes = {parse_scheme(scheme)};

        const auto rows = run_experiment(spec);
        write_csv_file(out_path, rows);

        const bool gated = spec.experiment == Experiment::ber_vs_snr ||
                           spec.experiment == Experiment::robustness_location ||
                           spec.experiment == Experiment::robustness_alpha;
        if (gated && has_nonconverged(rows))
        {
            std::cerr << "sim: some BER points did not reach the error target; see converged.* rows\n";
            return 3;
        }
        if (spec.experiment == Experiment::property_suite)
            for (const auto &r : rows)
                if (r.metric.rfind("pass.", 0) == 0 && r.value == 0.0)
                    std::cerr << "sim: property check failed: " << r.metric.substr(5) << '\n';
        return 0;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "sim: config error: " << e.what() << '\n';
        return 2;
    }
    catch (const ParseError &e)
    {
        std::cerr << "sim: config parse error: " << e.what() << '\n';
        return 2;
    }
    catch (const IllConditionedGeometry &e)
    {
        std::cerr << "sim: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "sim: " << e.what() << '\n';
        return 1;
    }
}
