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

#include "remcr/allocation.hpp"
#include "remcr/trials.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using Catch::Approx;

TEST_CASE("allocation - Budget and policies")
{
    const double budget = remcr::interference_threshold(2.0, 1.0);

    const auto none = remcr::allocate({}, 10.0, 10.0, budget);
    CHECK(none.empty());
    CHECK(none.total() == 0.0);
    CHECK(remcr::degradation_dB(none, 1.0) == 0.0);

    const std::vector<remcr::Candidate> big{{0.7, 0.7}};
    CHECK(remcr::allocate(big, 1.0, 1.0, budget).empty());

    // smallest-first admits by prediction and skips misfits
    const std::vector<remcr::Candidate> c{{0.05, 0.30}, {0.9, 0.10}, {0.2, 0.20}, {0.01, 0.10}, {0.4, 0.25}};
    const auto p = remcr::allocate(c, 1.0, 1.0, budget);
    REQUIRE(p.size() == 3);
    CHECK(p.est_weights == std::vector<double>{0.10, 0.10, 0.20});
    CHECK(p.weights == std::vector<double>{0.9, 0.01, 0.2}); // ties kept in index order
    CHECK(p.estimated_total() <= budget);

    const auto &largest = remcr::policy_by_name("largest-first");
    const auto pl = remcr::allocate(c, 1.0, 1.0, budget, largest);
    CHECK(pl.est_weights == std::vector<double>{0.30, 0.25});

    const auto &arrival = remcr::policy_by_name("arrival");
    const auto pa = remcr::allocate(c, 1.0, 1.0, budget, arrival);
    CHECK(pa.est_weights == std::vector<double>{0.30, 0.10, 0.10});

    const std::vector<remcr::Candidate> c2{{0.1, 0.1}, {0.6, 0.6}, {0.1, 0.1}};
    CHECK(remcr::allocate(c2, 1.0, 1.0, budget, remcr::policy_by_name("fcfs")).size() == 1);
    CHECK(remcr::allocate(c2, 1.0, 1.0, budget, arrival).size() == 2);
    CHECK(&remcr::policy_by_name("smallest-first") != nullptr);
    CHECK_THROWS_AS(remcr::policy_by_name("bogus"), std::invalid_argument);
}

TEST_CASE("allocation - Degradation")
{
    remcr::InterferenceProfile p;
    CHECK(remcr::degradation_dB(p, 1.0) == 0.0);
    p.weights = {0.5848931924611136};
    CHECK(remcr::degradation_dB(p, 1.0) == Approx(2.0).epsilon(1e-12));
    p.weights = {0.5, 0.5};
    CHECK(remcr::degradation_dB(p, 1.0) == Approx(3.0103).margin(1e-4));
}

TEST_CASE("allocation - Extreme profiles")
{
    auto make = [](std::vector<double> w)
    {
        remcr::InterferenceProfile p;
        p.weights = std::move(w);
        return p;
    };
    std::vector<remcr::InterferenceProfile> a{make({3}), make({1, 1, 1})};
    auto e = remcr::select_extreme_profiles(a);
    CHECK(e.dominant == 0);
    CHECK(e.no_dominant == 1);

    std::vector<remcr::InterferenceProfile> b{make({1.05, 1.05}), make({}), make({2, 0.1})};
    e = remcr::select_extreme_profiles(b);
    CHECK(e.dominant == 2);
    CHECK(e.no_dominant == 0);

    std::vector<remcr::InterferenceProfile> c{make({1}), make({}), make({})};
    CHECK_THROWS_AS(remcr::select_extreme_profiles(c), std::invalid_argument);
}

TEST_CASE("allocation - Simulated admission invariants")
{
    remcr::ScenarioConfig cfg;
    cfg.delta_grid = 0.0;
    auto ctx = remcr::TrialContext::make(cfg);
    const double budget = remcr::interference_threshold(2.0, 1.0);
    const auto perfect = remcr::parallel::run_trials(ctx, 3, 10000);
    std::size_t ok = 0;
    for (const auto &o : perfect)
        ok += o.profile.total() <= budget * (1 + 1e-12) ? 1 : 0;
    CHECK(ok == perfect.size());

    ctx.config.delta_grid = 50.0;
    const auto coarse = remcr::parallel::run_trials(ctx, 3, 1000);
    std::vector<remcr::InterferenceProfile> profiles;
    for (const auto &o : coarse)
    {
        REQUIRE(o.profile.estimated_total() <= budget * (1 + 1e-12));
        profiles.push_back(o.profile);
    }
    const auto e = remcr::select_extreme_profiles(profiles);
    auto share = [](const remcr::InterferenceProfile &p)
    { return *std::max_element(p.weights.begin(), p.weights.end()) / p.total(); };
    CHECK(share(profiles[e.dominant]) >= share(profiles[e.no_dominant]));
}

TEST_CASE("allocation - Degradation ordering in grid size and decorrelation distance")
{
    remcr::ScenarioConfig cfg;
    const auto base = remcr::TrialContext::make(cfg);
    auto median = [&](double delta, double D_d)
    {
        auto ctx = base;
        ctx.config.delta_grid = delta;
        ctx.config.D_d = D_d;
        auto d = remcr::parallel::degradations(ctx, 5, 2000);
        std::nth_element(d.begin(), d.begin() + 1000, d.end());
        return d[1000];
    };
    const double m1 = median(1, 100), m25 = median(25, 100), m50 = median(50, 100);
    CHECK(m1 < m25);
    CHECK(m25 < m50);
    const double d50 = median(50, 50), d500 = median(50, 500);
    CHECK(d50 > m50);
    CHECK(m50 > d500);
}
