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

#include "remcr/lcr.hpp"
#include "remcr/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace remcr
{
    namespace
    {
        struct PowerSums
        {
            double s1 = 0.0;
            double s2 = 0.0;
            double s3 = 0.0;
        };

        PowerSums power_sums(std::span<const double> w)
        {
            PowerSums s;
            for (const double x : w)
            {
                if (!(x > 0.0))
                    throw std::invalid_argument("interference weights must be positive");
                s.s1 += x;
                s.s2 += x * x;
                s.s3 += x * x * x;
            }
            return s;
        }

        std::string describe(std::span<const double> w)
        {
            std::ostringstream out;
            out.precision(9);
            out << "[";
            for (std::size_t i = 0; i < w.size(); ++i)
                out << (i ? ", " : "") << w[i];
            out << "]";
            return out.str();
        }
    }

    GammaFit fit_gamma(std::span<const double> weights)
    {
        if (weights.empty())
            throw std::invalid_argument("fit_gamma: empty interference profile");
        const PowerSums s = power_sums(weights);
        return {s.s1 * s.s1 / s.s2, s.s1 / s.s2};
    }

    double rayleigh_acf(std::span<const double> weights, std::span<const double> dopplers, double tau)
    {
        if (weights.empty() || weights.size() != dopplers.size())
            throw std::invalid_argument("rayleigh_acf: weights and Doppler lists must be non-empty and equal length");
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i)
        {
            const double j0 = specfun::bessel_j0(2.0 * std::numbers::pi * dopplers[i] * tau);
            num += weights[i] * weights[i] * j0 * j0;
            den += weights[i] * weights[i];
        }
        return num / den;
    }

    double rayleigh_acf(std::span<const double> weights, double f_D, double tau)
    {
        const std::vector<double> d(weights.size(), f_D);
        return rayleigh_acf(weights, d, tau);
    }

    double rayleigh_acf_second_derivative(std::span<const double> weights, std::span<const double> dopplers)
    {
        if (weights.empty() || weights.size() != dopplers.size())
            throw std::invalid_argument("rayleigh_acf_second_derivative: weights and Doppler lists must be non-empty and equal length");
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i)
        {
            const double w2 = weights[i] * weights[i];
            num += w2 * dopplers[i] * dopplers[i];
            den += w2;
        }
        return -4.0 * std::numbers::pi * std::numbers::pi * num / den;
    }

    double rayleigh_acf_second_derivative(std::span<const double> weights, double f_D)
    {
        const std::vector<double> d(weights.size(), f_D);
        return rayleigh_acf_second_derivative(weights, d);
    }

    double lcr_rayleigh(const GammaFit &fit, double acf_second_derivative, double T)
    {
        if (!(T > 0.0))
            throw std::invalid_argument("lcr_rayleigh: threshold must be positive");
        const double x = fit.theta * T;
        const double log_lcr = -std::log(2.0) - specfun::ln_gamma(fit.r) +
                               0.5 * std::log(2.0 * std::fabs(acf_second_derivative) / std::numbers::pi) +
                               (fit.r - 0.5) * std::log(x) - x;
        return std::exp(log_lcr);
    }

    ComponentMoments rician_component_moments(double K)
    {
        if (!(K >= 0.0))
            throw std::invalid_argument("rician_component_moments: K must be non-negative");
        // |h|^2 = chi'^2(2, 2K) / (2 (K + 1))
        const NcChiSqFit c{2.0, 2.0 * K, 2.0 * (K + 1.0)};
        return {c.mean(), c.variance(), c.third_central_moment()};
    }

    NcChiSqFit fit_ncx2(std::span<const double> weights, double K)
    {
        if (weights.empty())
            throw std::invalid_argument("fit_ncx2: empty interference profile");
        const PowerSums s = power_sums(weights);
        const ComponentMoments c = rician_component_moments(K);
        const double m1 = s.s1;
        const double m2 = c.variance * s.s2;
        const double m3 = c.third_central * s.s3;

        // (v + k lambda) scales as m1 a, m2 a^2 / 2, m3 a^3 / 8 for k = 1, 2, 3;
        // their second difference vanishes: (m3 / 8) a^2 - m2 a + m1 = 0.
        const double qa = m3 / 8.0;
        const double qb = -m2;
        const double qc = m1;
        double disc = qb * qb - 4.0 * qa * qc;
        // a double root shows up as a tiny negative discriminant after rounding
        if (disc < 0.0 && disc > -1e-12 * qb * qb)
            disc = 0.0;
        if (disc < 0.0)
            throw FitFailure("fit_ncx2: moment equations have complex roots for profile " + describe(weights),
                             std::vector<double>(weights.begin(), weights.end()));

        const double sq = std::sqrt(disc);
        // numerically stable pair of roots
        const double q = -0.5 * (qb + (qb < 0.0 ? -sq : sq));
        const double roots[2] = {q / qa, qc / q};

        std::optional<NcChiSqFit> best;
        for (const double a : roots)
        {
            if (!(a > 0.0) || !std::isfinite(a))
                continue;
            double lambda = 0.5 * m2 * a * a - m1 * a;
            const double v = m1 * a - lambda;
            // treat round-off around lambda = 0 as the central case
            if (lambda < 0.0 && lambda > -1e-9 * m1 * a)
                lambda = 0.0;
            if (v > 0.0 && lambda >= 0.0)
            {
                // prefer the larger noncentrality when both roots qualify
                if (!best || lambda > best->lambda)
                    best = NcChiSqFit{v, lambda, a};
            }
        }
        if (!best)
            throw FitFailure("fit_ncx2: no root with v > 0 and lambda >= 0 for profile " + describe(weights),
                             std::vector<double>(weights.begin(), weights.end()));
        return *best;
    }

    double lcr_rician(const NcChiSqFit &fit, double f_D, double T)
    {
        if (!(T > 0.0))
            throw std::invalid_argument("lcr_rician: threshold must be positive");
        if (!(fit.lambda > 0.0))
            throw std::domain_error("lcr_rician: lambda == 0 is the central case; use the gamma-process rate");
        const double aT = fit.alpha * T;
        const double nu = 0.5 * (fit.v - 2.0);
        const auto bessel = specfun::bessel_i_nu(nu, std::sqrt(fit.lambda * aT));
        const double log_lcr = 0.5 * std::log(std::numbers::pi) + std::log(f_D) + 0.25 * fit.v * std::log(aT) -
                               0.25 * (fit.v - 2.0) * std::log(fit.lambda) - 0.5 * (fit.lambda + aT) +
                               bessel.log_magnitude;
        return std::exp(log_lcr);
    }

    double lcr_scaled_chi2(const NcChiSqFit &fit, double f_D, double T)
    {
        if (fit.lambda > 0.0)
            return lcr_rician(fit, f_D, T);
        // v Jakes components: power ACF J0^2, second derivative -4 pi^2 f_D^2
        const GammaFit g{0.5 * fit.v, 0.5 * fit.alpha};
        return lcr_rayleigh(g, -4.0 * std::numbers::pi * std::numbers::pi * f_D * f_D, T);
    }

    std::optional<double> aed(double lcr, double survival)
    {
        if (!(lcr > 0.0))
            return std::nullopt;
        return survival / lcr;
    }

    std::vector<double> threshold_grid_db(double lo_dB, double hi_dB, double step_dB)
    {
        if (!(step_dB > 0.0) || hi_dB < lo_dB)
            throw std::invalid_argument("threshold_grid_db: invalid range");
        const auto n = static_cast<long>(std::llround((hi_dB - lo_dB) / step_dB));
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(n + 1));
        for (long i = 0; i <= n; ++i)
            out.push_back(lo_dB + static_cast<double>(i) * step_dB);
        return out;
    }

    LcrCurve rayleigh_curve(std::span<const double> weights, double f_D, std::span<const double> thresholds,
                            bool normalize)
    {
        const GammaFit fit = fit_gamma(weights);
        const double rdd = rayleigh_acf_second_derivative(weights, f_D);
        LcrCurve c;
        c.normalized = normalize;
        for (const double T : thresholds)
        {
            const double rate = lcr_rayleigh(fit, rdd, T);
            const auto d = aed(rate, specfun::gamma_sf(T, fit.r, fit.theta));
            c.thresholds.push_back(T);
            c.lcr.push_back(normalize ? rate / f_D : rate);
            c.aed.push_back(d.value_or(std::numeric_limits<double>::quiet_NaN()));
        }
        return c;
    }

    LcrCurve rician_curve(const NcChiSqFit &fit, double f_D, std::span<const double> thresholds, bool normalize)
    {
        LcrCurve c;
        c.normalized = normalize;
        for (const double T : thresholds)
        {
            const double rate = lcr_scaled_chi2(fit, f_D, T);
            const auto d = aed(rate, specfun::ncx2_sf(T, fit.v, fit.lambda, fit.alpha));
            c.thresholds.push_back(T);
            c.lcr.push_back(normalize ? rate / f_D : rate);
            c.aed.push_back(d.value_or(std::numeric_limits<double>::quiet_NaN()));
        }
        return c;
    }
}
