// SPDX-License-Identifier: Apache-2.0
//
// remcr: cognitive radio interference under imperfect radio environment maps
// Copyright (C) 2026 The remcr authors
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

#include "remcr/cli.hpp"
#include "remcr/experiments.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace remcr::cli
{
    namespace
    {
        struct Options
        {
            std::string config_path;
            std::optional<std::uint64_t> seed;
            std::optional<std::size_t> trials;
            std::string out_path;
            std::string format = "csv";
            std::string policy = "smallest-first";
            std::string grid_phase = "random";
            std::optional<std::size_t> runs;
        };

        nlohmann::ordered_json config_json(const ScenarioConfig &c)
        {
            nlohmann::ordered_json j;
            j["R"] = c.R;
            j["R0"] = c.R0;
            j["Rc"] = c.Rc;
            j["sigma_dB"] = c.sigma_dB;
            j["gamma_pl"] = c.gamma_pl;
            j["cr_density"] = c.cr_density;
            j["activity_p"] = c.activity_p;
            j["f_D"] = c.f_D;
            j["buffer_dB"] = c.buffer_dB;
            j["delta_grid"] = c.delta_grid;
            j["D_d"] = c.D_d;
            j["noise_power"] = c.noise_power;
            j["K_dB"] = c.K_dB ? nlohmann::ordered_json(*c.K_dB) : nlohmann::ordered_json(nullptr);
            j["master_seed"] = c.master_seed;
            return j;
        }

        void apply_worker_override(std::ostream &err)
        {
            const char *v = std::getenv(kWorkersEnv);
            if (!v || !*v)
                return;
            char *end = nullptr;
            const long n = std::strtol(v, &end, 10);
            if (*end != '\0' || n <= 0)
            {
                err << "warning: ignoring " << kWorkersEnv << "='" << v << "'\n";
                return;
            }
            omp_set_num_threads(static_cast<int>(n));
        }

        void emit(const Table &t, const Options &o, const std::string &command, const ScenarioConfig &cfg,
                  std::size_t trials, std::ostream &out)
        {
            std::ofstream file;
            std::ostream *dst = &out;
            if (!o.out_path.empty())
            {
                file.open(o.out_path, std::ios::binary);
                if (!file)
                    throw std::runtime_error("cannot open output file '" + o.out_path + "'");
                dst = &file;
            }
            if (o.format == "json")
            {
                nlohmann::ordered_json meta;
                meta["command"] = command;
                meta["version"] = kVersion;
                meta["seed"] = cfg.master_seed;
                meta["trials"] = trials;
                meta["policy"] = o.policy;
                meta["grid_phase"] = o.grid_phase;
                meta["config"] = config_json(cfg);
                write_json(*dst, t, meta.dump());
            }
            else
                write_csv(*dst, t);
            dst->flush();
            if (!*dst)
                throw std::runtime_error("failed writing output");
        }

        int dispatch(const std::string &command, const Options &o, std::ostream &out, std::ostream &err)
        {
            ScenarioConfig cfg = o.config_path.empty() ? ScenarioConfig{} : load_scenario(o.config_path);
            if (o.seed)
                cfg.master_seed = *o.seed;
            cfg.validate();
            for (const auto &w : cfg.warnings())
                err << "warning: " << w << '\n';

            TrialContext ctx = TrialContext::make(cfg);
            ctx.policy = &policy_by_name(o.policy);
            ctx.random_grid_phase = o.grid_phase == "random";

            if (command == "validate")
            {
                bool all = true;
                Table t;
                t.columns = {"check", "status", "detail"};
                for (const auto &c : run_invariant_checks(ctx))
                {
                    err << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
                    t.add_row({c.name, std::string(c.passed ? "PASS" : "FAIL"), c.detail});
                    all = all && c.passed;
                }
                emit(t, o, command, cfg, 0, out);
                return all ? kExitOk : kExitFailure;
            }
            if (command == "cdf")
            {
                const std::size_t n = o.trials.value_or(2000);
                const CdfStudy s = study_cdf(ctx, kDefaultGridSizes, n);
                for (std::size_t i = 0; i < s.grid_sizes.size(); ++i)
                    err << "delta " << s.grid_sizes[i] << " m: P(degradation > 3 dB) = " << s.p_above_3dB[i] << '\n';
                emit(s.table(), o, command, cfg, n, out);
                return kExitOk;
            }
            if (command == "grid-tradeoff")
            {
                const std::size_t n = o.trials.value_or(2000);
                const GridTradeoffStudy s = study_grid_tradeoff(ctx, kDefaultTradeoffDd, kDefaultExtraBuffers, n);
                emit(s.table(), o, command, cfg, n, out);
                return kExitOk;
            }
            if (command == "backoff")
            {
                const std::size_t n = o.trials.value_or(2000);
                const BackoffStudy s = study_backoff(ctx, kDefaultBackoffDd, kDefaultBackoffGrid, n);
                emit(s.table(), o, command, cfg, n, out);
                return kExitOk;
            }
            // lcr and aed
            LcrStudyOptions lo;
            lo.n_profile_trials = o.trials.value_or(1000);
            if (o.runs)
                lo.fading.runs = *o.runs;
            const LcrStudy s = study_lcr(ctx, lo);
            for (const auto &c : s.cases)
                err << c.fading << '/' << c.profile << ": N = " << c.weights.size()
                    << ", mean = " << linear_to_db(c.mean() / cfg.noise_power) << " dB\n";
            emit(command == "lcr" ? s.lcr_table() : s.aed_table(), o, command, cfg, lo.n_profile_trials, out);
            return kExitOk;
        }
    }

    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Cognitive radio interference under imperfect radio environment maps", "remcr"};
        app.set_version_flag("--version", kVersion);
        app.require_subcommand(1, 1);

        Options o;
        app.add_option("--config", o.config_path, "Scenario file (key = value lines)");
        app.add_option("--seed", o.seed, "Master seed, overrides the scenario file");
        app.add_option("--trials", o.trials, "Admission trials per evaluation")->check(CLI::PositiveNumber);
        app.add_option("--out", o.out_path, "Output file, default standard output");
        app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        app.add_option("--policy", o.policy, "Admission order")
            ->check(CLI::IsMember({"smallest-first", "largest-first", "arrival", "fcfs"}));
        app.add_option("--grid-phase", o.grid_phase, "REM grid registration per trial")
            ->check(CLI::IsMember({"random", "origin"}));
        app.add_option("--runs", o.runs, "Fading runs per Monte Carlo curve (lcr, aed)")->check(CLI::PositiveNumber);

        const std::pair<const char *, const char *> commands[] = {
            {"cdf", "Realised degradation CDF per REM grid size"},
            {"grid-tradeoff", "Largest grid size per decorrelation distance and extra buffer"},
            {"backoff", "Reduced target buffer per decorrelation distance and grid size"},
            {"lcr", "Analytic and simulated level crossing rates of the extreme profiles"},
            {"aed", "Analytic and simulated average exceedance durations of the extreme profiles"},
            {"validate", "Run the invariant self-checks"},
        };
        for (const auto &[name, help] : commands)
            app.add_subcommand(name, help)->fallthrough();

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::Success &e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError &e)
        {
            app.exit(e, out, err);
            return kExitUsage;
        }

        apply_worker_override(err);
        const std::string command = app.get_subcommands().front()->get_name();
        try
        {
            return dispatch(command, o, out, err);
        }
        catch (const ConfigError &e)
        {
            err << "config error: " << e.what() << '\n';
            return kExitUsage;
        }
        catch (const FitFailure &e)
        {
            err << "fit failure: " << e.what() << '\n';
            return kExitFitFailure;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return kExitFailure;
        }
    }
}
