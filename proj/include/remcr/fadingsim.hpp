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

#include "remcr/random.hpp"
#include "remcr/scenario.hpp"
#include "remcr/trials.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace remcr
{
    // Aggregate interference sampled every dt seconds.
    struct FadingSeries
    {
        std::vector<double> samples;
        double dt = 0.0;

        double duration() const { return static_cast<double>(samples.size()) * dt; }
    };

    inline constexpr std::size_t kDefaultOscillators = 64;

    // Sum-of-sinusoids synthesis of sum_i I_i |h_i(t)|^2. Each h_i has unit
    // power, a scattered part with autocorrelation J0(2 pi f_D tau) built from
    // `oscillators` complex sinusoids with stratified random arrival angles and
    // random phases, and a fixed line-of-sight phasor carrying K/(K+1) of the
    // power. K is linear; 0 gives Rayleigh fading.
    // Requires dt * f_D <= 1/32 and duration * f_D >= 200.
    FadingSeries generate_fading(RandomStream &stream, std::span<const double> weights, double K, double f_D,
                                 double dt, double duration, std::size_t oscillators = kDefaultOscillators);

    // Empirical crossing statistics. Counts are kept as integers so curves from
    // independent runs merge exactly.
    struct EmpiricalCurve
    {
        std::vector<double> thresholds;
        std::vector<std::uint64_t> upcrossings;
        std::vector<std::uint64_t> exceedances; // samples strictly above the threshold
        std::uint64_t samples = 0;
        double duration = 0.0;

        double rate(std::size_t i) const;     // upcrossings per second
        double fraction(std::size_t i) const; // share of samples above the threshold
        // fraction / rate; absent when no upcrossing was seen.
        std::optional<double> aed(std::size_t i) const;

        // Adds the counts of a curve over the same thresholds.
        void merge(const EmpiricalCurve &other);
    };

    // Upcrossing at tick k iff samples[k] < T <= samples[k+1]. Thresholds must
    // be sorted ascending.
    EmpiricalCurve count_crossings(const FadingSeries &series, std::span<const double> thresholds);

    struct FadingOptions
    {
        double samples_per_period = 64.0; // dt = 1 / (samples_per_period f_D)
        double run_periods = 400.0;       // run length in Doppler periods
        std::size_t runs = 10;
        std::size_t oscillators = kDefaultOscillators;
    };

    // Runs `options.runs` independent realisations, run j drawing from
    // derive_stream(seed, j, tag), and merges their crossing counts.
    namespace parallel
    {
        EmpiricalCurve simulate_crossings(std::span<const double> weights, double K, double f_D,
                                          std::span<const double> thresholds, const FadingOptions &options,
                                          std::uint64_t seed, const std::string &tag);
    }
    namespace serial
    {
        EmpiricalCurve simulate_crossings(std::span<const double> weights, double K, double f_D,
                                          std::span<const double> thresholds, const FadingOptions &options,
                                          std::uint64_t seed, const std::string &tag);
    }

    // Pooled sample mean, variance and normalised autocovariance at lags
    // 0..max_lag (in ticks) over all runs.
    struct AutocorrelationEstimate
    {
        double mean = 0.0;
        double variance = 0.0;
        double dt = 0.0;
        std::vector<double> acf;
    };

    AutocorrelationEstimate empirical_autocorrelation(std::span<const double> weights, double K, double f_D,
                                                      std::size_t max_lag, const FadingOptions &options,
                                                      std::uint64_t seed, const std::string &tag);

    // Realised PU degradation over admission trials.
    struct DegradationCdf
    {
        std::vector<double> sorted_dB;    // one entry per trial, ascending
        std::vector<double> grid_dB;      // 0, 0.05, 0.10, ... up to the largest sample
        std::vector<double> cdf;          // P(degradation <= grid_dB[i])

        // P(degradation > level_dB + tolerance).
        double probability_above(double level_dB, double tolerance_dB = kExceedanceTolerance_dB) const;
        double quantile(double q) const;

        // Degradations within this margin of a limit count as meeting it.
        static constexpr double kExceedanceTolerance_dB = 1e-9;
    };

    DegradationCdf make_degradation_cdf(std::vector<double> degradations_dB, double step_dB = 0.05);

    // Runs n_trials admission trials for ctx (seeded by its config's master
    // seed) and tabulates the realised degradation.
    DegradationCdf empirical_degradation_cdf(const TrialContext &ctx, std::size_t n_trials);
    DegradationCdf empirical_degradation_cdf(const ScenarioConfig &config, std::size_t n_trials);
}
