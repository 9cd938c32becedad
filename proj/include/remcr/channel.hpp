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

#include "remcr/random.hpp"
#include "remcr/scenario.hpp"

#include <cstddef>
#include <numbers>

namespace remcr
{
    // Converts a dB-domain Gaussian shadow value to the natural-log domain.
    inline constexpr double kShadowBeta = std::numbers::ln10 / 10.0;

    // Mean (local-average) gain of one link: power_const * e^X * r^-gamma.
    struct LinkGain
    {
        double shadow_X = 0.0;    // natural-log shadow value
        double distance_r = 1.0;  // meters
        double power_const = 1.0; // A for the PU link, B for CR links

        double power(double gamma_pl) const;
    };

    double received_power(double power_const, double shadow_X, double distance_r, double gamma_pl);

    // X = beta * Xt with Xt ~ N(0, sigma_dB^2).
    double sample_shadow(RandomStream &stream, double sigma_dB);

    // Shadowing correlation between a true link and its REM estimate when the
    // two endpoints are displaced by d_i and d_p.
    double gudmundson_rho(double d_i, double d_p, double D_d);

    struct Calibration
    {
        double A = 0.0; // PU transmit constant
        double B = 0.0; // CR transmit constant
    };

    inline constexpr std::size_t kDefaultCalibrationSamples = 200000;

    // 5th percentile of e^X r^-gamma with r uniform (by area) on [inner, outer].
    // Draws come from derive_stream(config.master_seed, 0, tag).
    double gain_quantile_05(const ScenarioConfig &config, double inner, double outer,
                            std::size_t n_samples, const char *tag);

    // A such that the PU SNR exceeds 5 dB with probability 0.95 over PU
    // transmitter placement and shadowing.
    double calibrate_A(const ScenarioConfig &config, std::size_t n_trials = kDefaultCalibrationSamples);

    // B such that a CR receiver within Rc of its transmitter sees SNR >= 5 dB
    // with probability 0.95: B = A * q05(PU link) / q05(CR link).
    double calibrate_B(const ScenarioConfig &config, double A, std::size_t n_trials = kDefaultCalibrationSamples);

    Calibration calibrate(const ScenarioConfig &config, std::size_t n_trials = kDefaultCalibrationSamples);
}
