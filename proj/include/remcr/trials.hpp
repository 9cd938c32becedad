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

#pragma once

#include "remcr/allocation.hpp"
#include "remcr/channel.hpp"
#include "remcr/scenario.hpp"

#include <cstdint>
#include <vector>

namespace remcr
{
    // Everything a single admission trial needs; immutable and shared
    // read-only by all workers.
    struct TrialContext
    {
        ScenarioConfig config;
        Calibration calibration;
        double target_buffer_dB = 2.0; // budget the controller enforces on predictions
        const AdmissionPolicy *policy = &default_policy();
        // Draw the REM grid registration uniformly per trial; false anchors a
        // cell corner at the PU receiver in every trial.
        bool random_grid_phase = true;

        // Calibrates A and B for `config` and targets config.buffer_dB.
        static TrialContext make(const ScenarioConfig &config);
    };

    struct TrialOutcome
    {
        InterferenceProfile profile;
        double degradation_dB = 0.0;
        std::size_t clamped_links = 0; // REM grid distances clamped to R0
    };

    // One trial: place PU and CRs, draw shadowing, predict every link from the
    // REM grid, admit, and report the true admitted profile. Randomness comes
    // from derive_stream(seed, trial_index, ...) with tags that do not depend on
    // the grid size, decorrelation distance or buffer, so sweeps over those
    // parameters reuse identical placements and shadowing.
    TrialOutcome run_trial(const TrialContext &ctx, std::uint64_t seed, std::uint64_t trial_index);

    // OpenMP trial-parallel kernels. Output index i always holds trial i, so
    // results are independent of the thread count.
    namespace parallel
    {
        std::vector<TrialOutcome> run_trials(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials);
        std::vector<double> degradations(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials);
    }

    // Plain loops over the same per-trial function; the reference the parallel
    // kernels are tested against.
    namespace serial
    {
        std::vector<TrialOutcome> run_trials(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials);
        std::vector<double> degradations(const TrialContext &ctx, std::uint64_t seed, std::size_t n_trials);
    }
}
