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

#include "remcr/channel.hpp"
#include "remcr/geometry.hpp"
#include "remcr/random.hpp"

namespace remcr
{
    // Parameters of the REM error model shared by every link of a scenario.
    struct RemModel
    {
        double sigma_dB = 8.0;
        double gamma_pl = 3.5;
        double D_d = 100.0;
        double R0 = 10.0; // lower clamp for the grid distance

        static RemModel from(const ScenarioConfig &config)
        {
            return {config.sigma_dB, config.gamma_pl, config.D_d, config.R0};
        }
    };

    struct RemEstimate
    {
        double I_hat = 0.0; // REM-predicted power of the link
        double rho = 1.0;   // correlation between the true and predicted shadowing
        double r_hat = 0.0; // grid-to-grid distance used by the prediction
        bool clamped = false; // r_hat was zero and got clamped to R0
    };

    // Predicts a link's power from the REM grid. The transmitter is displaced
    // by |true_pos - snapped_pos| and the receiver by |pu_true - pu_snapped|;
    // the predicted shadowing is rho X + sqrt(1 - rho^2) E with E an
    // independent copy of X drawn from `stream`.
    RemEstimate estimate_link(RandomStream &stream, const RemModel &model, const LinkGain &true_link,
                              Point true_pos, Point snapped_pos, Point pu_true, Point pu_snapped);

    // Same as estimate_link with the innovation E supplied by the caller.
    RemEstimate estimate_link_with(double innovation_E, const RemModel &model, const LinkGain &true_link,
                                   Point true_pos, Point snapped_pos, Point pu_true, Point pu_snapped);
}
