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

#include <catch2/catch_amalgamated.hpp>

#include "remcr/specfun.hpp"

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/non_central_chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

// Boost.Math serves as an independent oracle for the in-house special functions.

using Catch::Approx;
namespace sf = remcr::specfun;

namespace
{
    template <class F>
    double integrate(F f, double a, double b)
    {
        double err = 0.0;
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13, &err);
    }

    // Densities with v < 2 are singular at the origin. On [0, a] substitute
    // t = u^10, which turns x^(v/2-1) into a smooth power of u.
    template <class F>
    double integrate_near_zero(F f, double a)
    {
        return integrate([&](double u) { return f(std::pow(u, 10.0)) * 10.0 * std::pow(u, 9.0); }, 0.0,
                         std::pow(a, 0.1));
    }

    template <class F>
    double integrate_density(F f, double split)
    {
        return integrate_near_zero(f, split) + integrate(f, split, std::numeric_limits<double>::infinity());
    }

    double scaled_ncx2_pdf_oracle(double x, double v, double lambda, double alpha)
    {
        const boost::math::non_central_chi_squared_distribution<double> d(v, lambda);
        return alpha * boost::math::pdf(d, alpha * x);
    }
}

TEST_CASE("specfun - ln_gamma")
{
    CHECK(sf::ln_gamma(1.0) == Approx(0.0).margin(1e-15));
    CHECK(sf::ln_gamma(0.5) == Approx(0.5723649429247001).epsilon(1e-13));
    CHECK(sf::ln_gamma(11.0) == Approx(std::log(3628800.0)).epsilon(1e-14));
    double worst = 0.0;
    for (double x = 0.5; x <= 200.0; x += 0.0371)
        worst = std::max(worst, std::fabs(sf::ln_gamma(x) - boost::math::lgamma(x)) /
                                    std::max(1.0, std::fabs(boost::math::lgamma(x))));
    CHECK(worst <= 1e-12);
    // near the zeros of ln Gamma use the absolute error
    CHECK(sf::ln_gamma(2.0) == Approx(0.0).margin(1e-14));
    CHECK(sf::ln_gamma(0.1) == Approx(boost::math::lgamma(0.1)).epsilon(1e-12));
    CHECK_THROWS_AS(sf::ln_gamma(0.0), std::domain_error);
}

TEST_CASE("specfun - Bessel J0")
{
    CHECK(sf::bessel_j0(0.0) == 1.0);
    CHECK(sf::bessel_j0(2.404825557695773) == Approx(0.0).margin(1e-9));
    const double x = 0.01;
    CHECK(sf::bessel_j0(x) == Approx(1.0 - x * x / 4 + x * x * x * x / 64).margin(1e-12));
    double worst = 0.0;
    for (double t = -100.0; t <= 100.0; t += 0.0173)
        worst = std::max(worst, std::fabs(sf::bessel_j0(t) - boost::math::cyl_bessel_j(0, t)));
    CHECK(worst <= 1e-10);
}

TEST_CASE("specfun - Modified Bessel I_nu")
{
    CHECK(sf::bessel_i_nu(0.0, 0.0).log_magnitude == 0.0);
    CHECK(sf::bessel_i_nu(0.5, 1.0).value() ==
          Approx(std::sqrt(2.0 / std::numbers::pi) * std::sinh(1.0)).epsilon(1e-12));
    CHECK(sf::bessel_i_nu(0.5, 1.0).value() == Approx(0.9376748882).epsilon(1e-9));
    CHECK(sf::bessel_i_nu(2.0, 3.0).value() == Approx(2.245212440).epsilon(1e-9));
    CHECK(sf::bessel_i_nu(1.5, 0.0).value() == 0.0);

    double worst = 0.0;
    for (double nu : {-0.5, -0.3, 0.0, 0.25, 1.0, 2.7, 7.5, 19.0, 33.3, 50.0})
        for (double x = 0.01; x <= 700.0; x *= 1.19)
        {
            const double mine = sf::bessel_i_nu(nu, x).log_magnitude;
            const double ref = std::log(boost::math::cyl_bessel_i(nu, x));
            worst = std::max(worst, std::fabs(mine - ref));
        }
    CHECK(worst <= 1e-9); // absolute error in the log is the relative error of the value

    // both branches agree at the switchover
    for (double nu : {0.0, 0.5, 1.3, 4.0, 10.0})
    {
        const auto series = sf::bessel_i_nu_series(nu, sf::kBesselSwitchover);
        const auto asym = sf::bessel_i_nu_asymptotic(nu, sf::kBesselSwitchover);
        REQUIRE(asym.has_value());
        CHECK(std::fabs(series.log_magnitude - asym->log_magnitude) <= 1e-8);
    }
    // large arguments stay finite in log form
    CHECK(std::isfinite(sf::bessel_i_nu(3.0, 5000.0).log_magnitude));
    CHECK_THROWS_AS(sf::bessel_i_nu(0.0, -1.0), std::domain_error);
}

TEST_CASE("specfun - Gamma law")
{
    CHECK(sf::gamma_pdf(0.0, 1.0, 2.0) == Approx(2.0).epsilon(1e-15));
    for (double r : {0.7, 1.0, 3.3, 47.0})
        for (double th : {0.4, 1.0, 25.0})
        {
            const boost::math::gamma_distribution<double> g(r, 1.0 / th);
            for (double q : {0.01, 0.2, 0.5, 0.9, 0.999})
            {
                const double x = boost::math::quantile(g, q);
                CHECK(sf::gamma_pdf(x, r, th) == Approx(boost::math::pdf(g, x)).epsilon(1e-11));
                CHECK(sf::gamma_sf(x, r, th) == Approx(boost::math::cdf(boost::math::complement(g, x))).margin(1e-12));
                CHECK(sf::gamma_cdf(x, r, th) + sf::gamma_sf(x, r, th) == Approx(1.0).epsilon(1e-14));
                const double area = integrate_near_zero([&](double t) { return sf::gamma_pdf(t, r, th); }, x);
                CHECK(sf::gamma_sf(x, r, th) + area == Approx(1.0).margin(1e-8));
            }
            const double total = integrate_density([&](double t) { return sf::gamma_pdf(t, r, th); }, r / th);
            CHECK(total == Approx(1.0).margin(1e-7));
        }
    CHECK_THROWS_AS(sf::gamma_pdf(1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(sf::gamma_sf(-1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("specfun - Scaled noncentral chi-square")
{
    for (double v : {0.6, 2.0, 2.7, 9.5, 40.0})
        for (double lambda : {0.3, 3.1, 20.0, 150.0})
            for (double alpha : {0.8, 22.0})
            {
                const double mean = (v + lambda) / alpha;
                const double sd = std::sqrt(2.0 * (v + 2.0 * lambda)) / alpha;
                for (double z : {-1.5, -0.5, 0.0, 1.0, 3.0})
                {
                    const double x = mean + z * sd;
                    if (x <= 0.0)
                        continue;
                    CHECK(sf::ncx2_pdf(x, v, lambda, alpha) ==
                          Approx(scaled_ncx2_pdf_oracle(x, v, lambda, alpha)).epsilon(1e-9));
                    const boost::math::non_central_chi_squared_distribution<double> d(v, lambda);
                    CHECK(sf::ncx2_sf(x, v, lambda, alpha) ==
                          Approx(boost::math::cdf(boost::math::complement(d, alpha * x))).margin(1e-10));
                }
                auto pdf = [&](double t) { return sf::ncx2_pdf(t, v, lambda, alpha); };
                const double m0 = integrate_density(pdf, mean);
                const double m1 = integrate_density([&](double t) { return t * pdf(t); }, mean);
                const double m2 = integrate_density([&](double t) { return t * t * pdf(t); }, mean);
                CHECK(m0 == Approx(1.0).margin(1e-7));
                CHECK(m1 == Approx(mean).epsilon(1e-6));
                CHECK(m2 - m1 * m1 == Approx(sd * sd).epsilon(1e-6));
            }

    const double area = integrate_density([](double t) { return sf::ncx2_pdf(t, 2.7, 3.1, 0.8); }, 7.25);
    CHECK(area == Approx(1.0).margin(1e-8));

    // central limit of the noncentral law
    for (double x : {0.05, 0.5, 2.0, 7.0})
        CHECK(sf::ncx2_pdf(x, 3.4, 1e-12, 1.7) == Approx(sf::gamma_pdf(x, 1.7, 0.85)).margin(1e-8));
    CHECK(sf::ncx2_pdf(1.3, 3.4, 0.0, 1.7) == Approx(sf::gamma_pdf(1.3, 1.7, 0.85)).epsilon(1e-13));

    // huge noncentrality stays finite thanks to log-space evaluation
    const double big = sf::ncx2_pdf(5000.0 / 3.0, 10.0, 4990.0, 3.0);
    CHECK(std::isfinite(big));
    CHECK(big > 0.0);

    CHECK_THROWS_AS(sf::ncx2_pdf(1.0, 0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(sf::ncx2_pdf(1.0, 1.0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(sf::ncx2_sf(1.0, 1.0, 1.0, 0.0), std::domain_error);
}
