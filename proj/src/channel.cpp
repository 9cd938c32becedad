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

#include "remcr/channel.hpp"
#include "remcr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace remcr
{
    double received_power(double power_const, double shadow_X, double distance_r, double gamma_pl)
    {
        if (!(distance_r > 0.0))
            throw std::invalid_argument("received_power: distance must be positive");
        return power_const * std::exp(shadow_X - gamma_pl * std::log(distance_r));
    }

    double LinkGain::power(double gamma_pl) const
    {
        return received_power(power_const, shadow_X, distance_r, gamma_pl);
    }

    double sample_shadow(RandomStream &stream, double sigma_dB)
    {
        if (!(sigma_dB > 0.0))
            throw std::invalid_argument("sample_shadow: sigma_dB must be positive");
        return kShadowBeta * sigma_dB * stream.normal();
    }

    double gudmundson_rho(double d_i, double d_p, double D_d)
    {
        if (d_i < 0.0 || d_p < 0.0 || !(D_d > 0.0))
            throw std::invalid_argument("gudmundson_rho: distances must be >= 0 and D_d > 0");
        return std::pow(0.5, d_i / D_d) * std::pow(0.5, d_p / D_d);
    }

    double gain_quantile_05(const ScenarioConfig &config, double inner, double outer,
                            std::size_t n_samples, const char *tag)
    {
        if (!(inner > 0.0) || !(inner < outer))
            throw std::invalid_argument("calibration: degenerate annulus (R0 must be smaller than the outer radius)");
        if (n_samples < 10000)
            throw std::invalid_argument("calibration: at least 10^4 samples are required");

        auto stream = derive_stream(config.master_seed, 0, tag);
        std::vector<double> gains(n_samples);
        for (auto &g : gains)
        {
            const double r = norm(sample_annulus_point(stream, inner, outer));
            const double X = sample_shadow(stream, config.sigma_dB);
            g = received_power(1.0, X, r, config.gamma_pl);
        }
        const auto k = static_cast<std::size_t>(std::floor(0.05 * static_cast<double>(n_samples)));
        std::nth_element(gains.begin(), gains.begin() + static_cast<std::ptrdiff_t>(k), gains.end());
        return gains[k];
    }

    double calibrate_A(const ScenarioConfig &config, std::size_t n_trials)
    {
        const double q = gain_quantile_05(config, config.R0, config.R, n_trials, "calibrate_pu");
        return db_to_linear(5.0) * config.noise_power / q;
    }

    double calibrate_B(const ScenarioConfig &config, double A, std::size_t n_trials)
    {
        const double q_pu = gain_quantile_05(config, config.R0, config.R, n_trials, "calibrate_pu");
        const double q_cr = gain_quantile_05(config, config.R0, config.Rc, n_trials, "calibrate_cr");
        return A * q_pu / q_cr;
    }

    Calibration calibrate(const ScenarioConfig &config, std::size_t n_trials)
    {
        const double A = calibrate_A(config, n_trials);
        return {A, calibrate_B(config, A, n_trials)};
    }
}
