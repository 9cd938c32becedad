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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace remcr
{
    // Raised when the three-moment noncentral chi-square fit has no admissible
    // root. Keeps the offending weights for diagnostics.
    class FitFailure : public std::runtime_error
    {
    public:
        FitFailure(const std::string &what, std::vector<double> weights)
            : std::runtime_error(what), weights_(std::move(weights)) {}
        const std::vector<double> &weights() const { return weights_; }

    private:
        std::vector<double> weights_;
    };

    // Gamma law with shape r and rate theta.
    struct GammaFit
    {
        double r = 1.0;
        double theta = 1.0;

        double mean() const { return r / theta; }
        double variance() const { return r / (theta * theta); }
        // Location of the maximum of the gamma-process crossing rate.
        double lcr_mode() const { return (r - 0.5) / theta; }
    };

    // Scaled noncentral chi-square with v degrees of freedom, noncentrality
    // lambda and scale alpha.
    struct NcChiSqFit
    {
        double v = 2.0;
        double lambda = 0.0;
        double alpha = 1.0;

        double mean() const { return (v + lambda) / alpha; }
        double variance() const { return 2.0 * (v + 2.0 * lambda) / (alpha * alpha); }
        double third_central_moment() const { return 8.0 * (v + 3.0 * lambda) / (alpha * alpha * alpha); }
    };

    // Moment match of sum I_i |h_i|^2 with unit-mean exponential |h_i|^2:
    // mean sum I_i, variance sum I_i^2.
    GammaFit fit_gamma(std::span<const double> weights);

    // Normalized autocorrelation of the Rayleigh aggregate,
    // sum I_i^2 J0^2(2 pi f_i tau) / sum I_i^2.
    double rayleigh_acf(std::span<const double> weights, std::span<const double> dopplers, double tau);
    double rayleigh_acf(std::span<const double> weights, double f_D, double tau);

    // Second derivative of rayleigh_acf at tau = 0:
    // -4 pi^2 sum I_i^2 f_i^2 / sum I_i^2.
    double rayleigh_acf_second_derivative(std::span<const double> weights, std::span<const double> dopplers);
    double rayleigh_acf_second_derivative(std::span<const double> weights, double f_D);

    // Crossing rate of the fitted gamma process through T [crossings/s]:
    // sqrt(2 |Rdd| / pi) (theta T)^(r - 1/2) e^(-theta T) / (2 Gamma(r)).
    double lcr_rayleigh(const GammaFit &fit, double acf_second_derivative, double T);

    struct ComponentMoments
    {
        double mean = 1.0;
        double variance = 1.0;
        double third_central = 2.0;
    };

    // Moments of a unit-power Rician |h|^2 with linear K-factor K.
    ComponentMoments rician_component_moments(double K);

    // Three-moment fit of sum I_i |h_i|^2 with Rician |h_i|^2. Throws
    // FitFailure when the moment equations have no root with v > 0 and
    // lambda >= 0.
    NcChiSqFit fit_ncx2(std::span<const double> weights, double K);

    // Crossing rate of the scaled noncentral chi-square process through T:
    // sqrt(pi) f_D (alpha T)^(v/4) lambda^(-(v-2)/4) e^(-(lambda + alpha T)/2) I_((v-2)/2)(sqrt(lambda alpha T)).
    // lambda == 0 throws std::domain_error; use lcr_scaled_chi2 for that case.
    double lcr_rician(const NcChiSqFit &fit, double f_D, double T);

    // lcr_rician for lambda > 0 and the equivalent central gamma-process rate
    // for lambda == 0.
    double lcr_scaled_chi2(const NcChiSqFit &fit, double f_D, double T);

    // Average exceedance duration P(I > T) / LCR(T); absent when lcr == 0.
    std::optional<double> aed(double lcr, double survival);

    // Analytic crossing statistics over a threshold sweep.
    struct LcrCurve
    {
        std::vector<double> thresholds; // linear power
        std::vector<double> lcr;        // crossings per second, or per Doppler period when normalized
        std::vector<double> aed;        // seconds, NaN where undefined
        bool normalized = false;        // lcr divided by f_D
    };

    // Thresholds from lo_dB to hi_dB above the noise power in step_dB steps.
    std::vector<double> threshold_grid_db(double lo_dB = -15.0, double hi_dB = 8.0, double step_dB = 0.1);

    LcrCurve rayleigh_curve(std::span<const double> weights, double f_D, std::span<const double> thresholds,
                            bool normalize = true);
    LcrCurve rician_curve(const NcChiSqFit &fit, double f_D, std::span<const double> thresholds,
                          bool normalize = true);
}
