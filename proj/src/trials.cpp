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

#include "remcr/trials.hpp"
#include "remcr/geometry.hpp"
#include "remcr/rem.hpp"

#include <cstddef>

namespace remcr
{
    TrialContext TrialContext::make(const ScenarioConfig &config)
    {
        config.validate();
        TrialContext ctx;
        ctx.config = config;
        ctx.calibration = calibrate(config);
        ctx.target_buffer_dB = config.buffer_dB;
        return ctx;
    }

    TrialOutcome run_trial(const TrialContext &ctx, std::uint64_t seed, std::uint64_t trial_index)
    {
        const ScenarioConfig &cfg = ctx.config;
        const RemModel model = RemModel::from(cfg);

        auto place_stream = derive_stream(seed, trial_index, "placement");
        auto shadow_stream = derive_stream(seed, trial_index, "shadow");
        auto rem_stream = derive_stream(seed, trial_index, "rem");

        Placement pl = sample_placement(place_stream, cfg);
        if (ctx.random_grid_phase && cfg.delta_grid > 0.0)
        {
            auto grid_stream = derive_stream(seed, trial_index, "grid");
            pl.grid_phase.x = grid_stream.uniform();
            pl.grid_phase.y = grid_stream.uniform();
            snap_placement(pl, cfg.delta_grid);
        }

        const LinkGain pu_link{sample_shadow(shadow_stream, cfg.sigma_dB), norm(pl.pu_tx), ctx.calibration.A};
        const double S_true = pu_link.power(cfg.gamma_pl);
        const RemEstimate pu_est = estimate_link(rem_stream, model, pu_link, pl.pu_tx, pl.pu_tx_snapped,
                                                 pl.pu_rx, pl.pu_rx_snapped);

        TrialOutcome out;
        out.clamped_links = pu_est.clamped ? 1 : 0;

        std::vector<Candidate> candidates(pl.crs.size());
        for (std::size_t i = 0; i < pl.crs.size(); ++i)
        {
            const LinkGain link{sample_shadow(shadow_stream, cfg.sigma_dB), norm(pl.crs[i]), ctx.calibration.B};
            const RemEstimate est = estimate_link(rem_stream, model, link, pl.crs[i], pl.crs_snapped[i],
                                                  pl.pu_rx, pl.pu_rx_snapped);
            candidates[i] = {link.power(cfg.gamma_pl), est.I_hat};
            out.clamped_links += est.clamped ? 1 : 0;
        }

        const double budget = interference_threshold(ctx.target_buffer_dB, cfg.noise_power);
        out.profile = allocate(candidates, S_true, pu_est.I_hat, budget, *ctx.policy);
        out.degradation_dB = degradation_dB(out.profile, cfg.noise_power);
        return out;
    }

    namespace parallel
    {
        std::vector<TrialOutcome> run_trials(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials)
        {
            std::vector<TrialOutcome> out(n_trials);
            const auto n = static_cast<std::ptrdiff_t>(n_trials);
#pragma omp parallel for schedule(dynamic, 16)
            for (std::ptrdiff_t i = 0; i < n; ++i)
                out[static_cast<std::size_t>(i)] = run_trial(ctx, seed, static_cast<std::uint64_t>(i));
            return out;
        }

        std::vector<double> degradations(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials)
        {
            std::vector<double> out(n_trials);
            const auto n = static_cast<std::ptrdiff_t>(n_trials);
#pragma omp parallel for schedule(dynamic, 16)
            for (std::ptrdiff_t i = 0; i < n; ++i)
                out[static_cast<std::size_t>(i)] = run_trial(ctx, seed, static_cast<std::uint64_t>(i)).degradation_dB;
            return out;
        }
    }

    namespace serial
    {
        std::vector<TrialOutcome> run_trials(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials)
        {
            std::vector<TrialOutcome> out;
            out.reserve(n_trials);
            for (std::size_t i = 0; i < n_trials; ++i)
                out.push_back(run_trial(ctx, seed, i));
            return out;
        }

        std::vector<double> degradations(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials)
        {
            std::vector<double> out;
            out.reserve(n_trials);
            for (std::size_t i = 0; i < n_trials; ++i)
                out.push_back(run_trial(ctx, seed, i).degradation_dB);
            return out;
        }
    }
}
