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

#include "remcr/fadingsim.hpp"
#include "remcr/lcr.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using Catch::Approx;

namespace
{
    constexpr double kPi = std::numbers::pi;

    std::vector<double> power_thresholds(double lo_db, double hi_db, double step_db)
    {
        std::vector<double> t;
        for (double db = lo_db; db <= hi_db + 1e-9; db += step_db)
            t.push_back(std::pow(10.0, db / 10.0));
        return t;
    }
}

TEST_CASE("fadingsim - Marginal moments")
{
    const std::vector<double> w{0.3, 0.1, 0.05};
    remcr::FadingOptions opt;
    opt.runs = 40;
    for (double K : {0.0, 10.0})
    {
        const auto est = remcr::empirical_autocorrelation(w, K, 25.0, 1, opt, 3, "moments");
        const auto c = remcr::rician_component_moments(K);
        CHECK(est.mean == Approx(0.45).epsilon(0.02));
        CHECK(est.variance == Approx(c.variance * (0.09 + 0.01 + 0.0025)).epsilon(0.05));
    }
}

TEST_CASE("fadingsim - Autocorrelation matches the model")
{
    const std::vector<double> w{0.3, 0.1, 0.05};
    remcr::FadingOptions opt;
    opt.runs = 40;
    const std::size_t max_lag = 32; // half a Doppler period
    const auto est = remcr::empirical_autocorrelation(w, 0.0, 25.0, max_lag, opt, 5, "acf");
    REQUIRE(est.acf.size() == max_lag + 1);
    double worst = 0.0;
    for (std::size_t k = 0; k <= max_lag; ++k)
        worst = std::max(worst, std::fabs(est.acf[k] - remcr::rayleigh_acf(w, 25.0, k * est.dt)));
    CHECK(worst <= 0.03);
}

TEST_CASE("fadingsim - Single path crossing rates")
{
    const std::vector<double> w{1.0};
    const double f_D = 25.0;
    remcr::FadingOptions opt;
    opt.runs = 25;
    const auto T = power_thresholds(-3.0, 3.0, 0.5);
    const auto mc = remcr::parallel::simulate_crossings(w, 0.0, f_D, T, opt, 7, "single");
    for (std::size_t i = 0; i < T.size(); ++i)
    {
        const double classical = std::sqrt(2.0 * kPi * T[i]) * f_D * std::exp(-T[i]);
        CHECK(mc.rate(i) == Approx(classical).epsilon(0.05));
        CHECK(mc.fraction(i) == Approx(std::exp(-T[i])).epsilon(0.03));
    }

    // Rician single path against the Rice envelope rate
    const double K = 10.0;
    const auto Tr = power_thresholds(-6.0, 3.0, 0.5);
    const auto rice = remcr::parallel::simulate_crossings(w, K, f_D, Tr, opt, 7, "single-rice");
    for (std::size_t i = 0; i < Tr.size(); ++i)
    {
        const double rho = std::sqrt(Tr[i]);
        const double classical = std::sqrt(2.0 * kPi * (K + 1.0)) * f_D * rho * std::exp(-K - (K + 1.0) * Tr[i]) *
                                 boost::math::cyl_bessel_i(0, 2.0 * rho * std::sqrt(K * (K + 1.0)));
        if (classical / f_D >= 0.01)
            CHECK(rice.rate(i) == Approx(classical).epsilon(0.10));
    }
}

TEST_CASE("fadingsim - Sampling resolution")
{
    const std::vector<double> w{0.3, 0.1, 0.05};
    const auto T = power_thresholds(-6.0, 2.0, 1.0);
    remcr::FadingOptions coarse;
    coarse.runs = 5;
    remcr::FadingOptions fine = coarse;
    fine.samples_per_period = 128.0;
    const auto a = remcr::serial::simulate_crossings(w, 0.0, 25.0, T, coarse, 11, "dt");
    const auto b = remcr::serial::simulate_crossings(w, 0.0, 25.0, T, fine, 11, "dt");
    for (std::size_t i = 0; i < T.size(); ++i)
        CHECK(a.rate(i) == Approx(b.rate(i)).epsilon(0.02));
}

TEST_CASE("fadingsim - Crossing counter")
{
    // 50 periods of a sine, 100 samples per period, offset half a tick so no
    // sample lands on zero
    remcr::FadingSeries sine;
    sine.dt = 0.01;
    for (int k = 0; k < 5000; ++k)
        sine.samples.push_back(std::sin(2.0 * kPi * (k + 0.5) / 100.0));
    const std::vector<double> T{-2.0, 0.0, 0.5, 2.0};
    const auto c = remcr::count_crossings(sine, T);
    CHECK(c.upcrossings[0] == 0);
    CHECK(c.upcrossings[1] == 49);
    CHECK(c.upcrossings[2] == 50);
    CHECK(c.upcrossings[3] == 0);
    CHECK(c.exceedances[0] == 5000);
    CHECK(c.fraction(1) == Approx(0.5));
    CHECK(c.fraction(2) == 0.34);
    CHECK(*c.aed(1) == Approx(0.5).epsilon(0.03));
    CHECK_FALSE(c.aed(3).has_value());

    remcr::FadingSeries flat{std::vector<double>(1000, 1.0), 0.01};
    const auto f = remcr::count_crossings(flat, std::vector<double>{0.5, 1.0, 1.5});
    CHECK(f.upcrossings == std::vector<std::uint64_t>{0, 0, 0});
    CHECK(f.fraction(0) == 1.0);
    CHECK(f.fraction(1) == 0.0);
    CHECK(f.fraction(2) == 0.0);

    // threshold equal to the next sample counts as crossed
    remcr::FadingSeries step{{0.0, 1.0, 0.0, 1.0}, 1.0};
    CHECK(remcr::count_crossings(step, std::vector<double>{1.0}).upcrossings[0] == 2);

    CHECK_THROWS_AS(remcr::count_crossings(sine, std::vector<double>{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("fadingsim - Rate, fraction and duration agree")
{
    const std::vector<double> w{0.2, 0.2, 0.1, 0.05};
    const auto T = power_thresholds(-10.0, 5.0, 0.5);
    remcr::FadingOptions opt;
    opt.runs = 3;
    const auto c = remcr::parallel::simulate_crossings(w, 0.0, 25.0, T, opt, 13, "identity");
    for (std::size_t i = 0; i < T.size(); ++i)
        if (auto d = c.aed(i))
            CHECK(c.rate(i) * *d == Approx(c.fraction(i)).epsilon(1e-12));

    opt.runs = 1;
    auto one = remcr::parallel::simulate_crossings(w, 0.0, 25.0, T, opt, 13, "identity");
    opt.runs = 2;
    const auto two = remcr::parallel::simulate_crossings(w, 0.0, 25.0, T, opt, 13, "identity");
    auto rest = two;
    // the second run alone equals two runs minus the first
    for (std::size_t i = 0; i < T.size(); ++i)
    {
        rest.upcrossings[i] -= one.upcrossings[i];
        rest.exceedances[i] -= one.exceedances[i];
    }
    rest.samples -= one.samples;
    rest.duration -= one.duration;
    one.merge(rest);
    CHECK(one.upcrossings == two.upcrossings);
    CHECK(one.exceedances == two.exceedances);
    CHECK(one.samples == two.samples);
    CHECK(one.duration == Approx(two.duration));

    remcr::EmpiricalCurve other = two;
    other.thresholds.pop_back();
    CHECK_THROWS_AS(one.merge(other), std::invalid_argument);
}

TEST_CASE("fadingsim - Generator preconditions")
{
    auto s = remcr::derive_stream(1, 0, "pre");
    const std::vector<double> w{1.0};
    CHECK_THROWS_AS(remcr::generate_fading(s, w, 0.0, 25.0, 1.0 / (16 * 25.0), 10.0), std::invalid_argument);
    CHECK_THROWS_AS(remcr::generate_fading(s, w, 0.0, 25.0, 1.0 / (64 * 25.0), 7.0), std::invalid_argument);
    CHECK_THROWS_AS(remcr::generate_fading(s, w, 0.0, 25.0, 1.0 / (64 * 25.0), 10.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(remcr::generate_fading(s, std::vector<double>{}, 0.0, 25.0, 1.0 / 1600, 10.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(remcr::generate_fading(s, w, -1.0, 25.0, 1.0 / 1600, 10.0), std::invalid_argument);
    const auto series = remcr::generate_fading(s, w, 0.0, 25.0, 1.0 / 1600, 10.0);
    CHECK(series.samples.size() == 16000);
    CHECK(series.duration() == Approx(10.0));
}

TEST_CASE("fadingsim - Degradation CDF")
{
    auto cfg = remcr::ScenarioConfig{};
    cfg.delta_grid = 0.0;
    const auto perfect = remcr::empirical_degradation_cdf(cfg, 1000);
    CHECK(perfect.probability_above(2.0) == 0.0);
    CHECK(perfect.sorted_dB.back() <= 2.0 + 1e-9);
    CHECK(perfect.cdf.back() == 1.0);

    cfg.delta_grid = 1.0;
    const auto fine = remcr::empirical_degradation_cdf(cfg, 1000);
    CHECK(fine.probability_above(3.0) <= 0.02);

    cfg.delta_grid = 50.0;
    const auto coarse = remcr::empirical_degradation_cdf(cfg, 1000);
    CHECK(coarse.quantile(0.5) > fine.quantile(0.5));
    CHECK(coarse.probability_above(3.0) >= fine.probability_above(3.0));

    CHECK_THROWS_AS(remcr::empirical_degradation_cdf(cfg, 999), std::invalid_argument);

    const auto small = remcr::make_degradation_cdf({0.3, 0.0, 0.12, 0.3});
    CHECK(small.sorted_dB == std::vector<double>{0.0, 0.12, 0.3, 0.3});
    CHECK(small.grid_dB.front() == 0.0);
    CHECK(small.cdf.front() == 0.25);
    CHECK(small.cdf.back() == 1.0);
    CHECK(small.probability_above(0.1) == 0.75);
    CHECK(small.probability_above(0.3) == 0.0);
    CHECK(small.quantile(0.5) == Approx(0.12).margin(0.18));
    for (std::size_t i = 1; i < small.cdf.size(); ++i)
        CHECK(small.cdf[i] >= small.cdf[i - 1]);
}
