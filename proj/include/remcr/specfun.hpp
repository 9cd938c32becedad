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

#include <cmath>
#include <optional>

namespace remcr::specfun
{
    // A real number stored as sign * exp(log_magnitude); keeps Bessel and
    // density products finite where the plain value would overflow.
    struct LogScaledValue
    {
        double log_magnitude = 0.0;
        int sign = 1;

        double value() const { return sign * std::exp(log_magnitude); }
    };

    // ln Gamma(x) for x > 0.
    double ln_gamma(double x);

    // Bessel function of the first kind, order zero.
    double bessel_j0(double x);

    // Modified Bessel function of the first kind I_nu(x) in log form, for
    // nu > -1 and x >= 0. The ascending series is used for x < 30; above that
    // the large-argument expansion is tried first and the series is the fallback
    // whenever the expansion does not converge (large orders).
    LogScaledValue bessel_i_nu(double nu, double x);

    // Individual branches, exposed for seam validation.
    LogScaledValue bessel_i_nu_series(double nu, double x);
    std::optional<LogScaledValue> bessel_i_nu_asymptotic(double nu, double x);

    inline constexpr double kBesselSwitchover = 30.0;

    // Regularized incomplete gamma functions P(a, z) and Q(a, z) = 1 - P(a, z).
    double gamma_p(double a, double z);
    double gamma_q(double a, double z);

    // Gamma law with shape r and *rate* theta (mean r / theta).
    double gamma_pdf(double x, double r, double theta);
    double gamma_cdf(double x, double r, double theta);
    double gamma_sf(double x, double r, double theta);

    // Scaled noncentral chi-square: (sum_{i<=v} (X_i + delta_i)^2) / alpha with
    // lambda = sum delta_i^2; mean (v + lambda) / alpha. Fractional v is allowed.
    double ncx2_pdf(double x, double v, double lambda, double alpha);
    double ncx2_sf(double x, double v, double lambda, double alpha);
    double ncx2_cdf(double x, double v, double lambda, double alpha);
}
