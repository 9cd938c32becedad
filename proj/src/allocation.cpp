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

#include "remcr/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace remcr
{
    double InterferenceProfile::total() const
    {
        return std::accumulate(weights.begin(), weights.end(), 0.0);
    }

    double InterferenceProfile::sum_squares() const
    {
        return std::inner_product(weights.begin(), weights.end(), weights.begin(), 0.0);
    }

    double InterferenceProfile::estimated_total() const
    {
        return std::accumulate(est_weights.begin(), est_weights.end(), 0.0);
    }

    namespace
    {
        std::vector<std::size_t> iota_of(std::size_t n)
        {
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            return idx;
        }
    }

    std::vector<std::size_t> SmallestFirst::order(std::span<const Candidate> c) const
    {
        auto idx = iota_of(c.size());
        // ties broken by candidate index
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b)
                         { return c[a].I_hat < c[b].I_hat; });
        return idx;
    }

    std::vector<std::size_t> LargestFirst::order(std::span<const Candidate> c) const
    {
        auto idx = iota_of(c.size());
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b)
                         { return c[a].I_hat > c[b].I_hat; });
        return idx;
    }

    std::vector<std::size_t> ArrivalOrder::order(std::span<const Candidate> c) const
    {
        return iota_of(c.size());
    }

    const AdmissionPolicy &default_policy()
    {
        static const SmallestFirst policy;
        return policy;
    }

    const AdmissionPolicy &policy_by_name(std::string_view name)
    {
        static const SmallestFirst smallest;
        static const LargestFirst largest;
        static const ArrivalOrder arrival(false);
        static const ArrivalOrder fcfs(true);
        if (name == "smallest-first")
            return smallest;
        if (name == "largest-first")
            return largest;
        if (name == "arrival")
            return arrival;
        if (name == "fcfs")
            return fcfs;
        throw std::invalid_argument("unknown admission policy '" + std::string(name) + "'");
    }

    InterferenceProfile allocate(std::span<const Candidate> candidates, double S_true, double S_est,
                                 double budget, const AdmissionPolicy &policy)
    {
        InterferenceProfile out;
        out.S_true = S_true;
        out.S_est = S_est;
        double used = 0.0;
        for (const std::size_t i : policy.order(candidates))
        {
            const Candidate &c = candidates[i];
            if (used + c.I_hat <= budget)
            {
                used += c.I_hat;
                out.weights.push_back(c.I_true);
                out.est_weights.push_back(c.I_hat);
            }
            else if (policy.stops_at_rejection())
                break;
        }
        return out;
    }

    double degradation_dB(const InterferenceProfile &profile, double noise_power)
    {
        return 10.0 * std::log10((profile.total() + noise_power) / noise_power);
    }

    ExtremeProfiles select_extreme_profiles(std::span<const InterferenceProfile> profiles)
    {
        ExtremeProfiles out;
        std::size_t non_empty = 0;
        double best = -1.0;
        double worst = 0.0;
        for (std::size_t i = 0; i < profiles.size(); ++i)
        {
            if (profiles[i].empty())
                continue;
            const double v = profiles[i].sum_squares();
            if (non_empty == 0 || v > best)
            {
                best = v;
                out.dominant = i;
            }
            if (non_empty == 0 || v < worst)
            {
                worst = v;
                out.no_dominant = i;
            }
            ++non_empty;
        }
        if (non_empty < 2)
            throw std::invalid_argument("select_extreme_profiles: need at least two non-empty profiles");
        return out;
    }
}
