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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace remcr
{
    // One CR asking for admission: its true mean interference at the PU and the
    // REM prediction the controller sees.
    struct Candidate
    {
        double I_true = 0.0;
        double I_hat = 0.0;
    };

    // Admitted CRs of one trial. weights are the true mean powers I_1..I_N that
    // drive the fading aggregate; est_weights are the matching predictions.
    struct InterferenceProfile
    {
        std::vector<double> weights;
        std::vector<double> est_weights;
        double S_true = 0.0;
        double S_est = 0.0;

        std::size_t size() const { return weights.size(); }
        bool empty() const { return weights.empty(); }
        double total() const;        // sum I_i
        double sum_squares() const;  // sum I_i^2, the Rayleigh aggregate variance
        double estimated_total() const;
    };

    // Order in which the controller offers candidates to the budget. The
    // default admits the smallest predictions first.
    class AdmissionPolicy
    {
    public:
        virtual ~AdmissionPolicy() = default;
        virtual std::vector<std::size_t> order(std::span<const Candidate> candidates) const = 0;
        // When true the controller closes admission at the first candidate that
        // does not fit instead of skipping it.
        virtual bool stops_at_rejection() const { return false; }
    };

    class SmallestFirst final : public AdmissionPolicy
    {
    public:
        std::vector<std::size_t> order(std::span<const Candidate> candidates) const override;
    };

    class LargestFirst final : public AdmissionPolicy
    {
    public:
        std::vector<std::size_t> order(std::span<const Candidate> candidates) const override;
    };

    // Candidates in request (index) order. Placements are exchangeable, so this
    // is a uniformly random order with respect to the link gains.
    class ArrivalOrder final : public AdmissionPolicy
    {
    public:
        explicit ArrivalOrder(bool stop_at_rejection = false) : stop_(stop_at_rejection) {}
        std::vector<std::size_t> order(std::span<const Candidate> candidates) const override;
        bool stops_at_rejection() const override { return stop_; }

    private:
        bool stop_;
    };

    const AdmissionPolicy &default_policy();

    // Shared policy instances by name: "smallest-first", "largest-first",
    // "arrival" (request order, skip misfits) and "fcfs" (request order, stop
    // at the first misfit). Throws std::invalid_argument for other names.
    const AdmissionPolicy &policy_by_name(std::string_view name);

    // Admits candidates in policy order whenever the predicted aggregate stays
    // within `budget` (linear power). Candidates that would overflow the budget
    // are skipped.
    InterferenceProfile allocate(std::span<const Candidate> candidates, double S_true, double S_est,
                                 double budget, const AdmissionPolicy &policy = default_policy());

    // Realised PU SNR loss 10 log10((sum I + noise) / noise).
    double degradation_dB(const InterferenceProfile &profile, double noise_power);

    struct ExtremeProfiles
    {
        std::size_t dominant = 0;    // index of the largest sum I_i^2
        std::size_t no_dominant = 0; // index of the smallest sum I_i^2
    };

    // Ranks the non-empty profiles by aggregate variance. Throws
    // std::invalid_argument when fewer than two profiles are non-empty.
    ExtremeProfiles select_extreme_profiles(std::span<const InterferenceProfile> profiles);
}
