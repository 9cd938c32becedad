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

#include "remcr/experiments.hpp"
#include "remcr/geometry.hpp"
#include "remcr/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace remcr
{
    namespace
    {
        TrialContext with_grid(const TrialContext &ctx, double delta, double D_d, double target_buffer_dB)
        {
            TrialContext c = ctx;
            c.config.delta_grid = delta;
            c.config.D_d = D_d;
            c.target_buffer_dB = target_buffer_dB;
            return c;
        }

        double share_above(std::span<const double> degradations, double level_dB)
        {
            const double limit = level_dB + DegradationCdf::kExceedanceTolerance_dB;
            const auto n = std::count_if(degradations.begin(), degradations.end(),
                                         [limit](double d) { return d > limit; });
            return static_cast<double>(n) / static_cast<double>(degradations.size());
        }

        std::string fmt(double v)
        {
            std::ostringstream s;
            s.precision(6);
            s << v;
            return s.str();
        }
    }

    Table CdfStudy::table() const
    {
        Table t;
        t.columns = {"delta_m", "degradation_db", "cdf"};
        double top = 0.0;
        for (const auto &c : cdfs)
            if (!c.grid_dB.empty())
                top = std::max(top, c.grid_dB.back());
        const double step = 0.05;
        const auto n_grid = static_cast<std::size_t>(std::llround(top / step)) + 1;
        for (std::size_t k = 0; k < cdfs.size(); ++k)
        {
            const auto &s = cdfs[k].sorted_dB;
            for (std::size_t i = 0; i < n_grid; ++i)
            {
                const double g = static_cast<double>(i) * step;
                const auto it = std::upper_bound(s.begin(), s.end(), g + DegradationCdf::kExceedanceTolerance_dB);
                const double cdf = s.empty() ? 1.0 : static_cast<double>(it - s.begin()) / static_cast<double>(s.size());
                t.add_row({grid_sizes[k], g, cdf});
            }
        }
        return t;
    }

    CdfStudy study_cdf(const TrialContext &ctx, std::span<const double> grid_sizes, std::size_t n_trials)
    {
        if (grid_sizes.empty())
            throw std::invalid_argument("study_cdf: no grid sizes");
        CdfStudy out;
        for (const double delta : grid_sizes)
        {
            const TrialContext c = with_grid(ctx, delta, ctx.config.D_d, ctx.target_buffer_dB);
            out.grid_sizes.push_back(delta);
            out.cdfs.push_back(empirical_degradation_cdf(c, n_trials));
            out.p_above_3dB.push_back(out.cdfs.back().probability_above(3.0));
        }
        return out;
    }

    double exceedance_probability(const TrialContext &ctx, double delta, double D_d, double target_buffer_dB,
                                  double level_dB, std::size_t n_trials)
    {
        const TrialContext c = with_grid(ctx, delta, D_d, target_buffer_dB);
        const auto d = parallel::degradations(c, c.config.master_seed, n_trials);
        return share_above(d, level_dB);
    }

    Table GridTradeoffStudy::table() const
    {
        Table t;
        t.columns = {"dd_m", "extra_db", "delta_star_m"};
        for (const auto &p : points)
            t.add_row({p.D_d, p.extra_dB, p.delta_star});
        return t;
    }

    GridTradeoffStudy study_grid_tradeoff(const TrialContext &ctx, std::span<const double> D_d_list,
                                          std::span<const double> extra_list, std::size_t n_trials,
                                          double search_limit)
    {
        if (!(search_limit >= 2.0))
            throw std::invalid_argument("study_grid_tradeoff: search limit must be at least 2 m");
        GridTradeoffStudy out;
        out.search_limit = std::floor(search_limit);
        const double buffer = ctx.config.buffer_dB;
        for (const double D_d : D_d_list)
        {
            for (const double extra : extra_list)
            {
                auto ok = [&](double delta)
                {
                    return exceedance_probability(ctx, delta, D_d, buffer, buffer + extra, n_trials) <= 0.05;
                };
                GridTradeoffPoint p{D_d, extra, 0.0, false};
                if (ok(out.search_limit))
                {
                    p.delta_star = out.search_limit;
                    p.at_search_limit = true;
                }
                else if (ok(1.0))
                {
                    long lo = 1;
                    auto hi = static_cast<long>(out.search_limit);
                    while (hi - lo > 1)
                    {
                        const long mid = lo + (hi - lo) / 2;
                        (ok(static_cast<double>(mid)) ? lo : hi) = mid;
                    }
                    p.delta_star = static_cast<double>(lo);
                }
                out.points.push_back(p);
            }
        }
        return out;
    }

    Table BackoffStudy::table() const
    {
        Table t;
        t.columns = {"dd_m", "delta_m", "buffer_star_db"};
        for (const auto &p : points)
            t.add_row({p.D_d, p.delta, p.buffer_star_dB});
        return t;
    }

    BackoffStudy study_backoff(const TrialContext &ctx, std::span<const double> D_d_list,
                               std::span<const double> delta_list, std::size_t n_trials)
    {
        BackoffStudy out;
        const double buffer = ctx.config.buffer_dB;
        const auto top = static_cast<long>(std::llround(buffer * 100.0));
        for (const double D_d : D_d_list)
        {
            for (const double delta : delta_list)
            {
                // target buffers on a 0.01 dB lattice; a zero target admits nobody
                auto ok = [&](long k)
                {
                    if (k == 0)
                        return true;
                    const double target = std::min(buffer, static_cast<double>(k) / 100.0);
                    return exceedance_probability(ctx, delta, D_d, target, buffer, n_trials) <= 0.01;
                };
                BackoffPoint p{D_d, delta, buffer};
                if (!ok(top))
                {
                    long lo = 0;
                    long hi = top;
                    while (hi - lo > 1)
                    {
                        const long mid = lo + (hi - lo) / 2;
                        (ok(mid) ? lo : hi) = mid;
                    }
                    p.buffer_star_dB = static_cast<double>(lo) / 100.0;
                }
                out.points.push_back(p);
            }
        }
        return out;
    }

    double FadingCase::mean() const
    {
        return std::accumulate(weights.begin(), weights.end(), 0.0);
    }

    const FadingCase &LcrStudy::find(const std::string &fading, const std::string &profile) const
    {
        for (const auto &c : cases)
            if (c.fading == fading && c.profile == profile)
                return c;
        throw std::out_of_range("LcrStudy::find: no case " + fading + "/" + profile);
    }

    Table LcrStudy::lcr_table() const
    {
        Table t;
        t.columns = {"fading", "profile", "threshold_db", "lcr_analytic_norm", "lcr_mc_norm"};
        for (const auto &c : cases)
            for (std::size_t i = 0; i < thresholds_dB.size(); ++i)
                t.add_row({c.fading, c.profile, thresholds_dB[i], c.analytic.lcr[i], c.mc_lcr_norm(i, f_D)});
        return t;
    }

    Table LcrStudy::aed_table() const
    {
        Table t;
        t.columns = {"fading", "profile", "threshold_db", "aed_analytic_s", "aed_mc_s"};
        for (const auto &c : cases)
            for (std::size_t i = 0; i < thresholds_dB.size(); ++i)
            {
                const auto mc = c.empirical.aed(i);
                t.add_row({c.fading, c.profile, thresholds_dB[i], c.analytic.aed[i],
                           mc ? Table::Cell{*mc} : Table::Cell{}});
            }
        return t;
    }

    LcrStudy study_lcr(const TrialContext &ctx, const LcrStudyOptions &options)
    {
        const ScenarioConfig &cfg = ctx.config;
        const auto outcomes = parallel::run_trials(ctx, cfg.master_seed, options.n_profile_trials);
        std::vector<InterferenceProfile> profiles;
        profiles.reserve(outcomes.size());
        for (const auto &o : outcomes)
            profiles.push_back(o.profile);

        LcrStudy out;
        out.f_D = cfg.f_D;
        out.noise_power = cfg.noise_power;
        out.thresholds_dB = options.thresholds_dB;
        out.non_empty_profiles = static_cast<std::size_t>(
            std::count_if(profiles.begin(), profiles.end(), [](const auto &p) { return !p.empty(); }));

        std::vector<double> T;
        for (const double db : options.thresholds_dB)
            T.push_back(cfg.noise_power * db_to_linear(db));

        const ExtremeProfiles ray = select_extreme_profiles(profiles);

        const double K = db_to_linear(cfg.K_dB.value_or(options.rician_K_dB));
        std::vector<InterferenceProfile> admissible;
        std::vector<NcChiSqFit> admissible_fits;
        for (const auto &p : profiles)
        {
            if (p.empty())
                continue;
            try
            {
                admissible_fits.push_back(fit_ncx2(p.weights, K));
                admissible.push_back(p);
            }
            catch (const FitFailure &)
            {
            }
        }
        out.rician_admissible_profiles = admissible.size();
        if (admissible.size() < 2)
        {
            const auto &worst = profiles[ray.dominant].weights;
            std::ostringstream msg;
            msg << "study_lcr: only " << admissible.size() << " of " << out.non_empty_profiles
                << " profiles admit the Rician moment fit at K = " << fmt(K)
                << "; highest-variance profile rejected";
            throw FitFailure(msg.str(), worst);
        }
        const ExtremeProfiles ric = select_extreme_profiles(admissible);

        auto add_case = [&](const std::string &fading, const std::string &which, const std::vector<double> &w,
                            double k, std::optional<NcChiSqFit> fit)
        {
            FadingCase c;
            c.fading = fading;
            c.profile = which;
            c.weights = w;
            c.K = k;
            if (fit)
            {
                c.ncx2 = fit;
                c.analytic = rician_curve(*fit, cfg.f_D, T, true);
            }
            else
            {
                c.gamma = fit_gamma(w);
                c.analytic = rayleigh_curve(w, cfg.f_D, T, true);
            }
            c.empirical = parallel::simulate_crossings(w, k, cfg.f_D, T, options.fading, cfg.master_seed,
                                                       "fading/" + fading + "/" + which);
            out.cases.push_back(std::move(c));
        };
        add_case("rayleigh", "dominant", profiles[ray.dominant].weights, 0.0, std::nullopt);
        add_case("rayleigh", "no_dominant", profiles[ray.no_dominant].weights, 0.0, std::nullopt);
        add_case("rician", "dominant", admissible[ric.dominant].weights, K, admissible_fits[ric.dominant]);
        add_case("rician", "no_dominant", admissible[ric.no_dominant].weights, K, admissible_fits[ric.no_dominant]);
        return out;
    }

    LcrStudy study_aed(const TrialContext &ctx, const LcrStudyOptions &options)
    {
        return study_lcr(ctx, options);
    }

    std::vector<CheckResult> run_invariant_checks(const TrialContext &ctx)
    {
        std::vector<CheckResult> out;
        auto check = [&](std::string name, bool ok, std::string detail)
        { out.push_back({std::move(name), ok, std::move(detail)}); };
        const ScenarioConfig &cfg = ctx.config;
        const std::uint64_t seed = cfg.master_seed;

        {
            const double db = linear_to_db(interference_threshold(2.0, 1.0));
            check("threshold identity", std::fabs(db + 2.33) <= 0.005, "I_max = " + fmt(db) + " dB");
        }
        {
            const TrialContext c = with_grid(ctx, 0.0, cfg.D_d, ctx.target_buffer_dB);
            const auto d = parallel::degradations(c, seed, 500);
            const double worst = *std::max_element(d.begin(), d.end());
            check("perfect REM keeps the buffer", worst <= ctx.target_buffer_dB + 1e-9,
                  "max degradation " + fmt(worst) + " dB");
        }
        const auto outcomes = parallel::run_trials(ctx, seed, 256);
        {
            const double budget = interference_threshold(ctx.target_buffer_dB, cfg.noise_power);
            bool ok = true;
            for (const auto &o : outcomes)
                ok = ok && o.profile.estimated_total() <= budget * (1.0 + 1e-12);
            check("admission respects the estimated budget", ok, "256 trials");
        }
        {
            const auto s = serial::run_trials(ctx, seed, 256);
            bool same = true;
            for (std::size_t i = 0; i < s.size(); ++i)
                same = same && s[i].profile.weights == outcomes[i].profile.weights &&
                       s[i].degradation_dB == outcomes[i].degradation_dB;
            check("parallel trials equal serial trials", same, "256 trials");
        }
        {
            double worst = 0.0;
            std::size_t tried = 0;
            const double K = 10.0;
            for (const auto &o : outcomes)
            {
                const auto &w = o.profile.weights;
                if (w.empty())
                    continue;
                double s1 = 0, s2 = 0, s3 = 0;
                for (double x : w)
                {
                    s1 += x;
                    s2 += x * x;
                    s3 += x * x * x;
                }
                const GammaFit g = fit_gamma(w);
                worst = std::max({worst, std::fabs(g.mean() / s1 - 1.0), std::fabs(g.variance() / s2 - 1.0)});
                try
                {
                    const NcChiSqFit f = fit_ncx2(w, K);
                    const ComponentMoments c = rician_component_moments(K);
                    worst = std::max({worst, std::fabs(f.mean() / s1 - 1.0),
                                      std::fabs(f.variance() / (c.variance * s2) - 1.0),
                                      std::fabs(f.third_central_moment() / (c.third_central * s3) - 1.0)});
                    ++tried;
                }
                catch (const FitFailure &)
                {
                }
            }
            check("moment fits reproduce their moments", worst <= 1e-9,
                  "max relative error " + fmt(worst) + " over " + std::to_string(tried) + " ncx2 fits");
        }
        {
            const NcChiSqFit f{2.7, 3.1, 0.8};
            double worst = 0.0;
            for (double T : {0.5, 2.0, 5.0, 9.0})
            {
                const double a = lcr_rician(f, cfg.f_D, T);
                const double b = specfun::ncx2_pdf(T, f.v, f.lambda, f.alpha) *
                                 std::sqrt(4.0 * std::numbers::pi * cfg.f_D * cfg.f_D * T / f.alpha);
                worst = std::max(worst, std::fabs(a / b - 1.0));
            }
            check("Rician LCR equals its density form", worst <= 1e-10, "max relative gap " + fmt(worst));
        }
        {
            FadingSeries s;
            s.dt = 1e-4;
            s.samples.resize(1000000);
            for (std::size_t k = 0; k < s.samples.size(); ++k)
                s.samples[k] = std::sin(2.0 * std::numbers::pi * static_cast<double>(k) * s.dt);
            const std::vector<double> th{0.5};
            const EmpiricalCurve c = count_crossings(s, th);
            const bool ok = std::fabs(c.rate(0) - 1.0) <= 0.011 && std::fabs(c.fraction(0) - 1.0 / 3.0) <= 1e-3;
            check("crossing counter on a sine", ok, "rate " + fmt(c.rate(0)) + "/s, fraction " + fmt(c.fraction(0)));
        }
        {
            auto a = derive_stream(seed, 7, "check");
            auto b = derive_stream(seed, 7, "check");
            bool same = true;
            for (int i = 0; i < 1000; ++i)
                same = same && a.bits() == b.bits();
            check("derived streams are reproducible", same, "1000 draws");
        }
        {
            auto st = derive_stream(seed ^ 0x5eedULL, 0, "check_calibration");
            const std::size_t n = 100000;
            std::size_t good = 0;
            for (std::size_t i = 0; i < n; ++i)
            {
                const Point p = sample_annulus_point(st, cfg.R0, cfg.R);
                const LinkGain g{sample_shadow(st, cfg.sigma_dB), norm(p), ctx.calibration.A};
                good += g.power(cfg.gamma_pl) / cfg.noise_power >= std::sqrt(10.0) ? 1 : 0;
            }
            const double share = static_cast<double>(good) / static_cast<double>(n);
            check("PU SNR >= 5 dB 95% of the time", std::fabs(share - 0.95) <= 0.005, "share " + fmt(share));
        }
        {
            const std::vector<double> w{0.3, 0.1, 0.1, 0.05};
            const auto curve = rayleigh_curve(w, cfg.f_D, std::vector<double>{0.2, 0.4, 0.8, 1.6, 3.2}, true);
            bool ok = true;
            for (std::size_t i = 1; i < curve.aed.size(); ++i)
                ok = ok && curve.aed[i] < curve.aed[i - 1];
            check("analytic AED decreases with the threshold", ok, "5 thresholds");
        }
        return out;
    }
}
