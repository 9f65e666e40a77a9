// SPDX-License-Identifier: Apache-2.0
//
// simo-sounder: SIMO indoor channel-sounder simulation and analysis
// Copyright (C) 2026 The simo-sounder Authors
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

#include "simo/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "simo/analysis.hpp"
#include "simo/config.hpp"
#include "simo/error.hpp"
#include "simo/file_util.hpp"
#include "simo/report_io.hpp"
#include "simo/snapshot_io.hpp"

namespace fs = std::filesystem;

namespace simo::cli
{
    namespace
    {
        struct Failure
        {
            int code;
            std::string message;
        };

        std::filesystem::path sidecar_path(const fs::path &out)
        {
            auto p = out;
            p += ".config";
            return p;
        }

        std::string read_or_fail(const fs::path &path)
        {
            try
            {
                return read_text_file(path);
            }
            catch (const Error &e)
            {
                throw Failure{exit_usage, e.what()};
            }
        }

        void write_or_fail(const fs::path &path, std::string_view content)
        {
            try
            {
                write_file_atomic(path, content);
            }
            catch (const Error &e)
            {
                throw Failure{exit_usage, e.what()};
            }
        }

        struct SimulateArgs
        {
            std::string geometry;
            std::string config_path;
            std::optional<std::uint64_t> seed;
            std::string out;
            std::string iq_out;
            unsigned threads = 1;
        };

        int run_simulate(const SimulateArgs &a, std::ostream &out)
        {
            const ArrayKind kind = *parse_array_kind(a.geometry);
            RunConfig config = default_run_config(kind);
            SimulationInputs inputs = [&] {
                try
                {
                    if (!a.config_path.empty())
                        config = parse_run_config(read_or_fail(a.config_path), config);
                    if (config.geometry != kind)
                        throw Error(ErrorKind::malformed_config, "config geometry '" +
                                                                     std::string(to_string(config.geometry)) +
                                                                     "' disagrees with --geometry " + a.geometry);
                    if (a.seed)
                        config.seed = *a.seed;
                    return build_inputs(config);
                }
                catch (const Error &e)
                {
                    throw Failure{exit_malformed, std::string("config: ") + e.what()};
                }
            }();

            std::vector<SnapshotRecord> records;
            try
            {
                records = simulate(inputs, {a.threads, !a.iq_out.empty()});
            }
            catch (const Error &e)
            {
                throw Failure{exit_numeric, std::string("simulation: ") + e.what()};
            }

            const GainSnapshotFile file = make_gain_file(records, config.tx_power_dbm);
            write_or_fail(a.out, format_gain_file(file));
            write_or_fail(sidecar_path(a.out), format_run_config(config));
            if (!a.iq_out.empty())
                write_or_fail(a.iq_out, format_iq_file(records));
            out << "simulate: " << records.size() << " snapshots x " << file.n_elements() << " elements -> "
                << a.out << "\n";
            return exit_ok;
        }

        struct AnalyzeArgs
        {
            std::string in;
            double snr_db = 33.0;
            std::string report;
            std::string series_dir;
            double ref_gain_db = -55.0;
            bool chain_referenced = false;
            std::optional<double> tx_power_dbm;
        };

        int run_analyze(const AnalyzeArgs &a, std::ostream &out)
        {
            if (!std::isfinite(a.snr_db) || !std::isfinite(a.ref_gain_db))
                throw Failure{exit_usage, "--snr-db and --ref-gain-db must be finite"};

            GainSnapshotFile file;
            try
            {
                file = parse_gain_file(read_or_fail(a.in));
            }
            catch (const Error &e)
            {
                throw Failure{exit_malformed, a.in + ": " + e.what()};
            }

            std::optional<RunConfig> config;
            const auto sidecar = sidecar_path(a.in);
            if (fs::exists(sidecar))
            {
                try
                {
                    config = parse_run_config(read_or_fail(sidecar));
                }
                catch (const Error &e)
                {
                    throw Failure{exit_malformed, sidecar.string() + ": " + e.what()};
                }
            }

            AnalysisOptions options;
            options.rho = Snr::from_db(a.snr_db);
            options.capacity_ref_gain_db = a.ref_gain_db;
            if (a.tx_power_dbm)
                options.tx_power_dbm = *a.tx_power_dbm;
            else if (config)
                options.tx_power_dbm = config->tx_power_dbm;
            else if (const auto inferred = infer_tx_power_dbm(file))
                options.tx_power_dbm = *inferred;
            if (a.chain_referenced)
                options.rss_offset_db = config ? config->chain_gain_db : RunConfig{}.chain_gain_db;

            const std::string geometry = config ? std::string(to_string(config->geometry)) : std::string();
            MetricSeries series;
            SummaryReport report;
            try
            {
                const auto snapshots = to_gain_snapshots(file);
                series = compute_metrics(snapshots, options, geometry);
                report = summarize(series);
            }
            catch (const Error &e)
            {
                const int code = e.kind() == ErrorKind::invalid_input || e.kind() == ErrorKind::empty_input
                                     ? exit_malformed
                                     : exit_numeric;
                throw Failure{code, std::string("analysis: ") + e.what()};
            }
            report.tool_version = std::string(tool_version);
            if (config)
                report.config = config_entries(*config);

            const fs::path dir = a.series_dir;
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec)
                throw Failure{exit_usage, "cannot create " + dir.string() + ": " + ec.message()};
            write_or_fail(dir / "rss.csv", format_rss_series(series));
            write_or_fail(dir / "k_ratios.csv", format_k_series(series));
            write_or_fail(dir / "capacity.csv", format_capacity_series(series));
            write_or_fail(dir / "normalized_capacity.csv", format_normalized_capacity_series(series));
            write_or_fail(a.report, format_report(report));

            out << "analyze: " << report.n_snapshots << " snapshots, mean C " << report.capacity.mean << " bps/Hz";
            if (report.normalized_capacity)
                out << ", mean C_n " << report.normalized_capacity->mean;
            out << " -> " << a.report << "\n";
            return exit_ok;
        }

        struct CompareArgs
        {
            std::string report_a;
            std::string report_b;
            std::string out;
        };

        int run_compare(const CompareArgs &a, std::ostream &out)
        {
            auto load = [](const std::string &path) {
                try
                {
                    return parse_report(read_or_fail(path));
                }
                catch (const Error &e)
                {
                    throw Failure{exit_malformed, path + ": " + e.what()};
                }
            };
            const SummaryReport ra = load(a.report_a);
            const SummaryReport rb = load(a.report_b);

            Comparison comparison;
            try
            {
                comparison = compare(ra, rb);
            }
            catch (const Error &e)
            {
                throw Failure{e.kind() == ErrorKind::incomparable_reports ? exit_usage : exit_malformed, e.what()};
            }
            write_or_fail(a.out, format_comparison(comparison));
            out << "compare: higher capacity " << comparison.higher_capacity << ", higher normalized capacity "
                << comparison.higher_normalized_capacity << " -> " << a.out << "\n";
            return exit_ok;
        }
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"SIMO indoor channel-sounder simulation and analysis", "simo-sounder"};
        app.set_version_flag("--version", std::string(tool_version));
        app.require_subcommand(1);

        SimulateArgs sim;
        auto *sim_cmd = app.add_subcommand("simulate", "Simulate a measurement campaign and write the gain snapshot file");
        sim_cmd->add_option("--geometry", sim.geometry, "Receive array")->required()->check(CLI::IsMember({"ula", "pi"}));
        sim_cmd->add_option("--config", sim.config_path, "Run configuration overriding the geometry defaults")
            ->check(CLI::ExistingFile);
        sim_cmd->add_option("--seed", sim.seed, "Random seed (overrides the config)");
        sim_cmd->add_option("--out", sim.out, "Gain snapshot CSV")->required();
        sim_cmd->add_option("--iq-out", sim.iq_out, "Raw IQ CSV");
        sim_cmd->add_option("--threads", sim.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

        AnalyzeArgs ana;
        auto *ana_cmd = app.add_subcommand("analyze", "Compute metric series and a summary report");
        ana_cmd->add_option("--in", ana.in, "Gain snapshot CSV")->required()->check(CLI::ExistingFile);
        ana_cmd->add_option("--snr-db", ana.snr_db, "Per-element SNR rho in dB")->capture_default_str();
        ana_cmd->add_option("--report", ana.report, "Report output (JSON)")->required();
        ana_cmd->add_option("--series-dir", ana.series_dir, "Directory for the per-metric CSV series")->required();
        ana_cmd->add_option("--ref-gain-db", ana.ref_gain_db, "Channel power gain treated as unity for capacity")
            ->capture_default_str();
        ana_cmd->add_flag("--chain-referenced", ana.chain_referenced, "Report RSS after the receiver chain gain");
        ana_cmd->add_option("--tx-power-dbm", ana.tx_power_dbm, "Transmit power (default: from the run config)");

        CompareArgs cmp;
        auto *cmp_cmd = app.add_subcommand("compare", "Compare two summary reports");
        cmp_cmd->add_option("--report-a", cmp.report_a)->required()->check(CLI::ExistingFile);
        cmp_cmd->add_option("--report-b", cmp.report_b)->required()->check(CLI::ExistingFile);
        cmp_cmd->add_option("--out", cmp.out, "Comparison table (CSV)")->required();

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError &e)
        {
            if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            {
                out << (dynamic_cast<const CLI::CallForVersion *>(&e) ? e.what() + std::string("\n") : app.help());
                return exit_ok;
            }
            err << "simo-sounder: " << e.what() << "\n";
            return exit_usage;
        }

        try
        {
            if (*sim_cmd)
                return run_simulate(sim, out);
            if (*ana_cmd)
                return run_analyze(ana, out);
            return run_compare(cmp, out);
        }
        catch (const Failure &f)
        {
            err << "simo-sounder: error: " << f.message << "\n";
            return f.code;
        }
        catch (const Error &e)
        {
            err << "simo-sounder: error: " << e.what() << "\n";
            return exit_numeric;
        }
    }
}
