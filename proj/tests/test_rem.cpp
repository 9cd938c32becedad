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

#include "remcr/rem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using Catch::Approx;

namespace
{
    double correlation(const std::vector<double> &x, const std::vector<double> &y)
    {
        const double n = static_cast<double>(x.size());
        const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
        const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
        double sxy = 0, sxx = 0, syy = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            sxy += (x[i] - mx) * (y[i] - my);
            sxx += (x[i] - mx) * (x[i] - mx);
            syy += (y[i] - my) * (y[i] - my);
        }
        return sxy / std::sqrt(sxx * syy);
    }

    std::vector<double> ranks(const std::vector<double> &v)
    {
        std::vector<std::size_t> idx(v.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
        std::vector<double> r(v.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            r[idx[i]] = static_cast<double>(i);
        return r;
    }

    struct Draws
    {
        std::vector<double> X, Xhat, I, Ihat;
    };

    Draws draw(double d_i, double d_p, double D_d, int n)
    {
        remcr::RemModel model{8.0, 3.5, D_d, 10.0};
        auto s = remcr::derive_stream(21, static_cast<std::uint64_t>(d_i * 1000 + d_p), "rem_test");
        Draws out;
        for (int k = 0; k < n; ++k)
        {
            const remcr::LinkGain link{remcr::sample_shadow(s, 8.0), 300.0, 1.0};
            const remcr::Point pos{300.0, 0.0};
            const auto est = remcr::estimate_link(s, model, link, pos, {300.0 + d_i, 0.0}, {0, 0}, {0.0, d_p});
            out.X.push_back(link.shadow_X);
            out.I.push_back(link.power(3.5));
            out.Ihat.push_back(est.I_hat);
            out.Xhat.push_back(std::log(est.I_hat * std::pow(est.r_hat, 3.5)));
        }
        return out;
    }
}

TEST_CASE("rem - Perfect REM reproduces the truth")
{
    remcr::RemModel model{8.0, 3.5, 100.0, 10.0};
    auto s = remcr::derive_stream(1, 0, "rem");
    for (int i = 0; i < 1000; ++i)
    {
        const remcr::LinkGain link{remcr::sample_shadow(s, 8.0), s.uniform(10, 1000), 3.0};
        const remcr::Point p{link.distance_r, 0.0};
        const auto est = remcr::estimate_link(s, model, link, p, p, {0, 0}, {0, 0});
        REQUIRE(est.rho == 1.0);
        REQUIRE(est.r_hat == Approx(link.distance_r).epsilon(1e-15));
        REQUIRE(est.I_hat == Approx(link.power(3.5)).epsilon(1e-13));
    }
}

TEST_CASE("rem - Correlation model")
{
    const double beta_sigma = std::log(10.0) / 10.0 * 8.0;
    const int n = 100000;

    const auto far = draw(10000.0, 0.0, 100.0, n); // rho = 2^-100
    CHECK(std::fabs(correlation(far.X, far.Xhat)) < 0.01);
    double m = 0, m2 = 0;
    for (double x : far.Xhat)
    {
        m += x;
        m2 += x * x;
    }
    CHECK(std::sqrt(m2 / n - (m / n) * (m / n)) == Approx(beta_sigma).epsilon(0.01));

    const auto quarter = draw(100.0, 100.0, 100.0, n);
    CHECK(correlation(quarter.X, quarter.Xhat) == Approx(0.25).margin(0.01));
    double q = 0, q2 = 0;
    for (double x : quarter.Xhat)
    {
        q += x;
        q2 += x * x;
    }
    CHECK(std::sqrt(q2 / n - (q / n) * (q / n)) == Approx(beta_sigma).epsilon(0.01));

    // rank association grows with rho (rho = 0, 0.5, 1)
    const auto r0 = draw(10000.0, 0.0, 100.0, 20000);
    const auto r5 = draw(100.0, 0.0, 100.0, 20000);
    const auto r1 = draw(0.0, 0.0, 100.0, 20000);
    const double c0 = correlation(ranks(r0.I), ranks(r0.Ihat));
    const double c5 = correlation(ranks(r5.I), ranks(r5.Ihat));
    const double c1 = correlation(ranks(r1.I), ranks(r1.Ihat));
    CHECK(c0 < c5);
    CHECK(c5 < c1);
}

TEST_CASE("rem - Coincident grid cells are clamped")
{
    remcr::RemModel model{8.0, 3.5, 100.0, 10.0};
    const remcr::LinkGain link{0.0, 20.0, 1.0};
    const auto est = remcr::estimate_link_with(0.0, model, link, {20.0, 5.0}, {25.0, 25.0}, {0, 0}, {25.0, 25.0});
    CHECK(est.clamped);
    CHECK(est.r_hat == 10.0);
    CHECK(est.I_hat > 0.0);
    const auto normal = remcr::estimate_link_with(0.0, model, link, {20.0, 0.0}, {20.0, 0.0}, {0, 0}, {0, 0});
    CHECK_FALSE(normal.clamped);
}
