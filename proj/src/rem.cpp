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

#include "remcr/rem.hpp"

#include <cmath>

namespace remcr
{
    RemEstimate estimate_link_with(double innovation_E, const RemModel &model, const LinkGain &true_link,
                                   Point true_pos, Point snapped_pos, Point pu_true, Point pu_snapped)
    {
        RemEstimate out;
        const double d_i = distance(true_pos, snapped_pos);
        const double d_p = distance(pu_true, pu_snapped);
        out.rho = gudmundson_rho(d_i, d_p, model.D_d);

        const double X_hat = out.rho * true_link.shadow_X + std::sqrt(1.0 - out.rho * out.rho) * innovation_E;

        out.r_hat = distance(snapped_pos, pu_snapped);
        if (out.r_hat <= 0.0)
        {
            out.r_hat = model.R0;
            out.clamped = true;
        }
        out.I_hat = received_power(true_link.power_const, X_hat, out.r_hat, model.gamma_pl);
        return out;
    }

    RemEstimate estimate_link(RandomStream &stream, const RemModel &model, const LinkGain &true_link,
                              Point true_pos, Point snapped_pos, Point pu_true, Point pu_snapped)
    {
        const double E = sample_shadow(stream, model.sigma_dB);
        return estimate_link_with(E, model, true_link, true_pos, snapped_pos, pu_true, pu_snapped);
    }
}
