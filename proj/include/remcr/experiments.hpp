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

#include "remcr/fadingsim.hpp"
#include "remcr/lcr.hpp"
#include "remcr/table.hpp"
#include "remcr/trials.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace remcr
{
    // Every study draws its trials from derive_stream(ctx.config.master_seed, ...)
    // so a (config, seed) pair fully determines the output.

    inline const std::vector<double> kDefaultGridSizes{1.0, 25.0, 50.0, 100.0};

    struct CdfStudy
    {
        std::vector<double> grid_sizes;
        std::vector<DegradationCdf> cdfs;
        std::vector<double> p_above_3dB;

        // delta_m, degradation_db, cdf on a shared 0.05 dB grid.
        Table table() const;
    };

    CdfStudy study_cdf(const TrialContext &ctx, std::span<const double> grid_sizes, std::size_t n_trials);

    inline const std::vector<double> kDefaultTradeoffDd{50.0, 100.0, 200.0, 300.0, 500.0};
    inline const std::vector<double> kDefaultExtraBuffers{1.0, 2.0, 3.0};

    struct GridTradeoffPoint
    {
        double D_d = 0.0;
        double extra_dB = 0.0;
        double delta_star = 0.0; // metres, 1 m resolution
        bool at_search_limit = false;
    };

    struct GridTradeoffStudy
    {
        double search_limit = 0.0;
        std::vector<GridTradeoffPoint> points;

        Table table() const; // dd_m, extra_db, delta_star_m
    };

    // For every (D_d, extra) the largest grid size whose realised degradation
    // exceeds buffer + extra in at most 5% of trials. Grid sizes are searched on
    // whole metres in [1, search_limit]; 0 means even 1 m fails.
    GridTradeoffStudy study_grid_tradeoff(const TrialContext &ctx, std::span<const double> D_d_list,
                                          std::span<const double> extra_list, std::size_t n_trials,
                                          double search_limit = 500.0);

    inline const std::vector<double> kDefaultBackoffDd{50.0, 100.0, 200.0, 500.0};
    inline const std::vector<double> kDefaultBackoffGrid{0.0, 10.0, 25.0, 50.0, 75.0, 100.0};

    struct BackoffPoint
    {
        double D_d = 0.0;
        double delta = 0.0;
        double buffer_star_dB = 0.0; // 0.01 dB resolution
    };

    struct BackoffStudy
    {
        std::vector<BackoffPoint> points;

        Table table() const; // dd_m, delta_m, buffer_star_db
    };

    // For every (D_d, delta) the largest target buffer <= config.buffer_dB for
    // which the realised degradation exceeds config.buffer_dB in at most 1% of
    // trials.
    BackoffStudy study_backoff(const TrialContext &ctx, std::span<const double> D_d_list,
                               std::span<const double> delta_list, std::size_t n_trials);

    // Probability that the realised degradation exceeds level_dB when admitting
    // against target_buffer_dB on a (delta, D_d) grid.
    double exceedance_probability(const TrialContext &ctx, double delta, double D_d, double target_buffer_dB,
                                  double level_dB, std::size_t n_trials);

    struct FadingCase
    {
        std::string fading; // "rayleigh" or "rician"
        std::string profile; // "dominant" or "no_dominant"
        std::vector<double> weights;
        double K = 0.0; // linear
        std::optional<GammaFit> gamma;
        std::optional<NcChiSqFit> ncx2;
        LcrCurve analytic;        // normalised by f_D
        EmpiricalCurve empirical; // raw counts

        double mean() const;
        double mc_lcr_norm(std::size_t i, double f_D) const { return empirical.rate(i) / f_D; }
    };

    struct LcrStudyOptions
    {
        std::size_t n_profile_trials = 1000;
        FadingOptions fading;
        std::vector<double> thresholds_dB = threshold_grid_db();
        double rician_K_dB = 10.0; // used when the config has no K_dB
    };

    struct LcrStudy
    {
        double f_D = 0.0;
        double noise_power = 1.0;
        std::vector<double> thresholds_dB;
        std::size_t non_empty_profiles = 0;
        std::size_t rician_admissible_profiles = 0;
        std::vector<FadingCase> cases;

        // fading, profile, threshold_db, lcr_analytic_norm, lcr_mc_norm
        Table lcr_table() const;
        // fading, profile, threshold_db, aed_analytic_s, aed_mc_s
        Table aed_table() const;

        const FadingCase &find(const std::string &fading, const std::string &profile) const;
    };

    // Admission trials at the config's grid size, extreme-profile selection per
    // fading type (Rician extremes among the profiles whose ncx2 fit is
    // admissible), analytic curves and Monte Carlo crossing counts. Throws
    // FitFailure when fewer than two profiles admit the Rician fit.
    LcrStudy study_lcr(const TrialContext &ctx, const LcrStudyOptions &options);
    LcrStudy study_aed(const TrialContext &ctx, const LcrStudyOptions &options);

    struct CheckResult
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    // Fast self-checks of the invariants every module promises.
    std::vector<CheckResult> run_invariant_checks(const TrialContext &ctx);
}
