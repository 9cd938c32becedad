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

#include "remcr/specfun.hpp"

#include <array>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace remcr::specfun
{
    namespace
    {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        constexpr double kEps = std::numeric_limits<double>::epsilon();

        void require(bool ok, const char *msg)
        {
            if (!ok)
                throw std::domain_error(msg);
        }

        // Lanczos approximation, g = 7, n = 9.
        constexpr std::array<double, 9> kLanczos = {
            0.99999999999980993, 676.5203681218851, -1259.1392167224028,
            771.32342877765313, -176.61502916214059, 12.507343278686905,
            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

        double ln_gamma_lanczos(double x)
        {
            // x >= 0.5
            const double z = x - 1.0;
            double a = kLanczos[0];
            const double t = z + 7.5;
            for (std::size_t i = 1; i < kLanczos.size(); ++i)
                a += kLanczos[i] / (z + static_cast<double>(i));
            return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
        }

        // Stirling series, accurate to machine precision for x >= 10.
        double ln_gamma_stirling(double x)
        {
            const double x2 = x * x;
            const double series = 1.0 / (12.0 * x) - 1.0 / (360.0 * x * x2) + 1.0 / (1260.0 * x * x2 * x2) -
                                  1.0 / (1680.0 * x * x2 * x2 * x2) + 1.0 / (1188.0 * x * x2 * x2 * x2 * x2);
            return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
        }

        // Coefficient a_k(nu) of the Hankel expansions.
        struct HankelTerms
        {
            double mu; // 4 nu^2
            double term = 1.0;
            int k = 0;

            explicit HankelTerms(double nu) : mu(4.0 * nu * nu) {}

            // Advances to a_{k+1}(nu) / x^{k+1}.
            double next(double x)
            {
                ++k;
                const double odd = 2.0 * k - 1.0;
                term *= (mu - odd * odd) / (8.0 * k * x);
                return term;
            }
        };
    }

    double ln_gamma(double x)
    {
        require(x > 0.0, "ln_gamma: argument must be positive");
        if (x < 0.5)
            return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - ln_gamma(1.0 - x);
        if (x >= 10.0)
            return ln_gamma_stirling(x);
        return ln_gamma_lanczos(x);
    }

    double bessel_j0(double x)
    {
        x = std::fabs(x);
        if (x <= 12.0)
        {
            const double q = 0.25 * x * x;
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                term *= -q / (static_cast<double>(k) * k);
                sum += term;
                if (std::fabs(term) < 1e-17 * std::max(1.0, std::fabs(sum)))
                    break;
            }
            return sum;
        }

        // Hankel asymptotic form: sqrt(2 / (pi x)) (P cos chi - Q sin chi)
        HankelTerms h(0.0);
        double P = 1.0;
        double Q = 0.0;
        double last = kInf;
        for (int k = 1; k < 200; ++k)
        {
            const double t = h.next(x);
            if (std::fabs(t) >= last)
                break;
            last = std::fabs(t);
            // k odd feeds Q with sign (-1)^((k-1)/2), k even feeds P with (-1)^(k/2)
            if (k % 2 == 1)
                Q += ((k / 2) % 2 == 0 ? t : -t);
            else
                P += ((k / 2) % 2 == 0 ? t : -t);
            if (last < 1e-17)
                break;
        }
        const double chi = x - 0.25 * std::numbers::pi;
        return std::sqrt(2.0 / (std::numbers::pi * x)) * (P * std::cos(chi) - Q * std::sin(chi));
    }

    LogScaledValue bessel_i_nu_series(double nu, double x)
    {
        require(x >= 0.0, "bessel_i_nu: negative argument");
        require(nu > -1.0, "bessel_i_nu: order must exceed -1");
        if (x == 0.0)
        {
            if (nu == 0.0)
                return {0.0, 1};
            return {nu > 0.0 ? -kInf : kInf, 1};
        }

        // All terms are positive; accumulate relative to the first term and
        // fold the running sum into the log scale whenever it grows large.
        const double q = 0.25 * x * x;
        double log_scale = nu * std::log(0.5 * x) - ln_gamma(nu + 1.0);
        double rel = 1.0;
        double sum = 1.0;
        for (int k = 0; k < 1000000; ++k)
        {
            rel *= q / ((k + 1.0) * (k + 1.0 + nu));
            sum += rel;
            if (sum > 1e250)
            {
                log_scale += std::log(sum);
                rel /= sum;
                sum = 1.0;
            }
            if (rel < 1e-17 * sum && (k + 1.0) * (k + 1.0 + nu) > q)
                break;
        }
        return {log_scale + std::log(sum), 1};
    }

    std::optional<LogScaledValue> bessel_i_nu_asymptotic(double nu, double x)
    {
        require(x > 0.0, "bessel_i_nu: asymptotic branch needs x > 0");
        // I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k
        HankelTerms h(nu);
        double sum = 1.0;
        double last = kInf;
        bool converged = false;
        for (int k = 1; k < 500; ++k)
        {
            const double t = h.next(x);
            const double mag = std::fabs(t);
            if (mag == 0.0)
            {
                converged = true; // half-integer orders terminate
                break;
            }
            if (mag >= last)
                break;
            sum += (k % 2 == 0) ? t : -t;
            last = mag;
            if (mag < 1e-16 * std::fabs(sum))
            {
                converged = true;
                break;
            }
        }
        if (!converged || !(sum > 0.0))
            return std::nullopt;
        return LogScaledValue{x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum), 1};
    }

    LogScaledValue bessel_i_nu(double nu, double x)
    {
        require(x >= 0.0, "bessel_i_nu: negative argument");
        require(nu > -1.0, "bessel_i_nu: order must exceed -1");
        if (x >= kBesselSwitchover)
        {
            if (auto a = bessel_i_nu_asymptotic(nu, x))
                return *a;
        }
        return bessel_i_nu_series(nu, x);
    }

    double gamma_p(double a, double z)
    {
        require(a > 0.0 && z >= 0.0, "gamma_p: requires a > 0 and z >= 0");
        if (z == 0.0)
            return 0.0;
        if (z < a + 1.0)
        {
            double term = 1.0 / a;
            double sum = term;
            for (int n = 1; n < 100000; ++n)
            {
                term *= z / (a + n);
                sum += term;
                if (term < sum * kEps * 0.5)
                    break;
            }
            return std::min(1.0, sum * std::exp(-z + a * std::log(z) - ln_gamma(a)));
        }
        return 1.0 - gamma_q(a, z);
    }

    double gamma_q(double a, double z)
    {
        require(a > 0.0 && z >= 0.0, "gamma_q: requires a > 0 and z >= 0");
        if (z < a + 1.0)
            return 1.0 - gamma_p(a, z);

        // modified Lentz continued fraction
        constexpr double tiny = 1e-300;
        double b = z + 1.0 - a;
        double c = 1.0 / tiny;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i < 100000; ++i)
        {
            const double an = -i * (i - a);
            b += 2.0;
            d = an * d + b;
            if (std::fabs(d) < tiny)
                d = tiny;
            c = b + an / c;
            if (std::fabs(c) < tiny)
                c = tiny;
            d = 1.0 / d;
            const double delta = d * c;
            h *= delta;
            if (std::fabs(delta - 1.0) < kEps)
                break;
        }
        return std::exp(-z + a * std::log(z) - ln_gamma(a)) * h;
    }

    double gamma_pdf(double x, double r, double theta)
    {
        require(r > 0.0 && theta > 0.0 && x >= 0.0, "gamma_pdf: invalid parameters");
        if (x == 0.0)
        {
            if (r == 1.0)
                return theta;
            return r < 1.0 ? kInf : 0.0;
        }
        return std::exp(r * std::log(theta) + (r - 1.0) * std::log(x) - theta * x - ln_gamma(r));
    }

    double gamma_cdf(double x, double r, double theta)
    {
        require(r > 0.0 && theta > 0.0 && x >= 0.0, "gamma_cdf: invalid parameters");
        return gamma_p(r, theta * x);
    }

    double gamma_sf(double x, double r, double theta)
    {
        require(r > 0.0 && theta > 0.0 && x >= 0.0, "gamma_sf: invalid parameters");
        return gamma_q(r, theta * x);
    }

    double ncx2_pdf(double x, double v, double lambda, double alpha)
    {
        require(x >= 0.0 && v > 0.0 && lambda >= 0.0 && alpha > 0.0, "ncx2_pdf: invalid parameters");
        if (lambda == 0.0)
            return gamma_pdf(x, 0.5 * v, 0.5 * alpha);

        const double nu = 0.5 * (v - 2.0);
        if (x == 0.0)
        {
            // (alpha x / lambda)^(nu/2) I_nu(sqrt(lambda alpha x)) -> (alpha x)^nu / (2^nu Gamma(nu + 1))
            if (nu > 0.0)
                return 0.0;
            if (nu < 0.0)
                return kInf;
            return 0.5 * alpha * std::exp(-0.5 * lambda);
        }
        const double ax = alpha * x;
        const LogScaledValue bessel = bessel_i_nu(nu, std::sqrt(lambda * ax));
        const double log_p = std::log(0.5 * alpha) - 0.5 * (lambda + ax) +
                             0.5 * nu * (std::log(ax) - std::log(lambda)) + bessel.log_magnitude;
        return std::exp(log_p);
    }

    double ncx2_sf(double x, double v, double lambda, double alpha)
    {
        require(x >= 0.0 && v > 0.0 && lambda >= 0.0 && alpha > 0.0, "ncx2_sf: invalid parameters");
        const double z = 0.5 * alpha * x;
        if (lambda == 0.0)
            return gamma_q(0.5 * v, z);

        // Poisson(lambda / 2) mixture of central chi-square tails, summed
        // outwards from the mode until the weights are negligible.
        const double mean = 0.5 * lambda;
        const double mode = std::floor(mean);
        auto log_weight = [&](double j)
        { return -mean + j * std::log(mean) - ln_gamma(j + 1.0); };

        double sum = 0.0;
        for (double j = mode;; j += 1.0)
        {
            const double w = std::exp(log_weight(j));
            sum += w * gamma_q(0.5 * v + j, z);
            if (w < 1e-20 && j > mode)
                break;
        }
        for (double j = mode - 1.0; j >= 0.0; j -= 1.0)
        {
            const double w = std::exp(log_weight(j));
            sum += w * gamma_q(0.5 * v + j, z);
            if (w < 1e-20)
                break;
        }
        return std::min(1.0, sum);
    }

    double ncx2_cdf(double x, double v, double lambda, double alpha)
    {
        return 1.0 - ncx2_sf(x, v, lambda, alpha);
    }
}
