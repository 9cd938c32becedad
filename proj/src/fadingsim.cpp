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

#include "remcr/fadingsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace remcr
{
    namespace
    {
        // Phasors are recomputed exactly every kResync ticks so the rotation
        // recurrence never accumulates visible drift.
        constexpr std::size_t kResync = 1024;

        struct PathOscillators
        {
            std::vector<double> omega; // rad/s
            std::vector<double> phase;
            double los_re = 0.0;
            double los_im = 0.0;
            double scatter_amp = 1.0; // sqrt(1/(K+1)) / sqrt(M)
        };

        PathOscillators draw_path(RandomStream &s, double K, double f_D, std::size_t M)
        {
            PathOscillators p;
            p.omega.resize(M);
            p.phase.resize(M);
            const double two_pi = 2.0 * std::numbers::pi;
            for (std::size_t m = 0; m < M; ++m)
            {
                const double angle = two_pi * (static_cast<double>(m) + s.uniform()) / static_cast<double>(M);
                p.omega[m] = two_pi * f_D * std::cos(angle);
                p.phase[m] = two_pi * s.uniform();
            }
            const double los_phase = two_pi * s.uniform();
            const double los_amp = std::sqrt(K / (K + 1.0));
            p.los_re = los_amp * std::cos(los_phase);
            p.los_im = los_amp * std::sin(los_phase);
            p.scatter_amp = std::sqrt(1.0 / (K + 1.0)) / std::sqrt(static_cast<double>(M));
            return p;
        }

        // Adds weight * |h(t_k)|^2 to out[k] for every tick.
        void accumulate_path(const PathOscillators &p, double weight, double dt, std::vector<double> &out)
        {
            const std::size_t M = p.omega.size();
            std::vector<double> cr(M), ci(M), wr(M), wi(M);
            for (std::size_t m = 0; m < M; ++m)
            {
                wr[m] = std::cos(p.omega[m] * dt);
                wi[m] = std::sin(p.omega[m] * dt);
            }
            const std::size_t n = out.size();
            for (std::size_t start = 0; start < n; start += kResync)
            {
                const double t0 = static_cast<double>(start) * dt;
                for (std::size_t m = 0; m < M; ++m)
                {
                    const double a = p.omega[m] * t0 + p.phase[m];
                    cr[m] = std::cos(a);
                    ci[m] = std::sin(a);
                }
                const std::size_t stop = std::min(n, start + kResync);
                for (std::size_t k = start; k < stop; ++k)
                {
                    double sr = 0.0;
                    double si = 0.0;
#pragma omp simd reduction(+ : sr, si)
                    for (std::size_t m = 0; m < M; ++m)
                    {
                        sr += cr[m];
                        si += ci[m];
                        const double r = cr[m] * wr[m] - ci[m] * wi[m];
                        ci[m] = cr[m] * wi[m] + ci[m] * wr[m];
                        cr[m] = r;
                    }
                    const double hr = p.los_re + p.scatter_amp * sr;
                    const double hi = p.los_im + p.scatter_amp * si;
                    out[k] += weight * (hr * hr + hi * hi);
                }
            }
        }

        void check_series_request(std::span<const double> weights, double K, double f_D, double dt,
                                  double duration, std::size_t oscillators)
        {
            if (weights.empty())
                throw std::invalid_argument("generate_fading: empty interference profile");
            for (const double w : weights)
                if (!(w > 0.0))
                    throw std::invalid_argument("generate_fading: weights must be positive");
            if (!(K >= 0.0))
                throw std::invalid_argument("generate_fading: K must be non-negative");
            if (!(f_D > 0.0) || !(dt > 0.0))
                throw std::invalid_argument("generate_fading: f_D and dt must be positive");
            if (dt * f_D > 1.0 / 32.0 * (1.0 + 1e-12))
                throw std::invalid_argument("generate_fading: dt * f_D must not exceed 1/32");
            if (duration * f_D < 200.0 * (1.0 - 1e-12))
                throw std::invalid_argument("generate_fading: duration * f_D must be at least 200");
            if (oscillators < 32)
                throw std::invalid_argument("generate_fading: at least 32 oscillators per path");
        }

        EmpiricalCurve empty_curve(std::span<const double> thresholds)
        {
            if (!std::is_sorted(thresholds.begin(), thresholds.end()))
                throw std::invalid_argument("count_crossings: thresholds must be sorted ascending");
            EmpiricalCurve c;
            c.thresholds.assign(thresholds.begin(), thresholds.end());
            c.upcrossings.assign(thresholds.size(), 0);
            c.exceedances.assign(thresholds.size(), 0);
            return c;
        }

        EmpiricalCurve simulate_run(std::span<const double> weights, double K, double f_D,
                                    std::span<const double> thresholds, const FadingOptions &o,
                                    std::uint64_t seed, std::size_t run, const std::string &tag)
        {
            auto stream = derive_stream(seed, run, tag);
            const double dt = 1.0 / (o.samples_per_period * f_D);
            const FadingSeries s = generate_fading(stream, weights, K, f_D, dt, o.run_periods / f_D, o.oscillators);
            return count_crossings(s, thresholds);
        }

        void check_options(const FadingOptions &o)
        {
            if (o.runs == 0)
                throw std::invalid_argument("simulate_crossings: at least one run");
        }
    }

    FadingSeries generate_fading(RandomStream &stream, std::span<const double> weights, double K, double f_D,
                                 double dt, double duration, std::size_t oscillators)
    {
        check_series_request(weights, K, f_D, dt, duration, oscillators);
        FadingSeries out;
        out.dt = dt;
        out.samples.assign(static_cast<std::size_t>(std::llround(duration / dt)), 0.0);
        for (const double w : weights)
        {
            const PathOscillators p = draw_path(stream, K, f_D, oscillators);
            accumulate_path(p, w, dt, out.samples);
        }
        return out;
    }

    double EmpiricalCurve::rate(std::size_t i) const
    {
        return static_cast<double>(upcrossings.at(i)) / duration;
    }

    double EmpiricalCurve::fraction(std::size_t i) const
    {
        return static_cast<double>(exceedances.at(i)) / static_cast<double>(samples);
    }

    std::optional<double> EmpiricalCurve::aed(std::size_t i) const
    {
        if (upcrossings.at(i) == 0)
            return std::nullopt;
        return fraction(i) / rate(i);
    }

    void EmpiricalCurve::merge(const EmpiricalCurve &other)
    {
        if (other.thresholds != thresholds)
            throw std::invalid_argument("EmpiricalCurve::merge: threshold grids differ");
        for (std::size_t i = 0; i < thresholds.size(); ++i)
        {
            upcrossings[i] += other.upcrossings[i];
            exceedances[i] += other.exceedances[i];
        }
        samples += other.samples;
        duration += other.duration;
    }

    EmpiricalCurve count_crossings(const FadingSeries &series, std::span<const double> thresholds)
    {
        EmpiricalCurve c = empty_curve(thresholds);
        const auto &s = series.samples;
        if (s.size() < 2)
            throw std::invalid_argument("count_crossings: need at least two samples");
        const std::size_t nt = thresholds.size();
        // difference array over threshold indices for upcrossings, histogram
        // of "number of thresholds below the sample" for exceedances
        std::vector<std::int64_t> diff(nt + 1, 0);
        std::vector<std::uint64_t> below(nt + 1, 0);
        auto first_above = [&](double v)
        { return static_cast<std::size_t>(std::upper_bound(thresholds.begin(), thresholds.end(), v) - thresholds.begin()); };
        auto first_not_below = [&](double v)
        { return static_cast<std::size_t>(std::lower_bound(thresholds.begin(), thresholds.end(), v) - thresholds.begin()); };

        for (std::size_t k = 0; k < s.size(); ++k)
        {
            ++below[first_not_below(s[k])];
            if (k + 1 < s.size() && s[k] < s[k + 1])
            {
                // thresholds with s[k] < T <= s[k+1]
                ++diff[first_above(s[k])];
                --diff[first_above(s[k + 1])];
            }
        }
        std::int64_t run = 0;
        for (std::size_t j = 0; j < nt; ++j)
        {
            run += diff[j];
            c.upcrossings[j] = static_cast<std::uint64_t>(run);
        }
        // samples above threshold j are those with more than j thresholds below them
        std::uint64_t tail = 0;
        for (std::size_t j = nt; j-- > 0;)
        {
            tail += below[j + 1];
            c.exceedances[j] = tail;
        }
        c.samples = s.size();
        c.duration = series.duration();
        return c;
    }

    namespace parallel
    {
        EmpiricalCurve simulate_crossings(std::span<const double> weights, double K, double f_D,
                                          std::span<const double> thresholds, const FadingOptions &options,
                                          std::uint64_t seed, const std::string &tag)
        {
            check_options(options);
            std::vector<EmpiricalCurve> per_run(options.runs);
            const auto n = static_cast<std::ptrdiff_t>(options.runs);
#pragma omp parallel for schedule(dynamic, 1)
            for (std::ptrdiff_t j = 0; j < n; ++j)
                per_run[static_cast<std::size_t>(j)] =
                    simulate_run(weights, K, f_D, thresholds, options, seed, static_cast<std::size_t>(j), tag);
            EmpiricalCurve out = per_run.front();
            for (std::size_t j = 1; j < per_run.size(); ++j)
                out.merge(per_run[j]);
            return out;
        }
    }

    namespace serial
    {
        EmpiricalCurve simulate_crossings(std::span<const double> weights, double K, double f_D,
                                          std::span<const double> thresholds, const FadingOptions &options,
                                          std::uint64_t seed, const std::string &tag)
        {
            check_options(options);
            EmpiricalCurve out = simulate_run(weights, K, f_D, thresholds, options, seed, 0, tag);
            for (std::size_t j = 1; j < options.runs; ++j)
                out.merge(simulate_run(weights, K, f_D, thresholds, options, seed, j, tag));
            return out;
        }
    }

    AutocorrelationEstimate empirical_autocorrelation(std::span<const double> weights, double K, double f_D,
                                                      std::size_t max_lag, const FadingOptions &options,
                                                      std::uint64_t seed, const std::string &tag)
    {
        check_options(options);
        const double dt = 1.0 / (options.samples_per_period * f_D);
        struct Sums
        {
            double s1 = 0.0;
            double s2 = 0.0;
            std::size_t n = 0;
            std::vector<double> cross;
            std::vector<std::size_t> pairs;
        };
        std::vector<Sums> per_run(options.runs);
        const auto n_runs = static_cast<std::ptrdiff_t>(options.runs);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t j = 0; j < n_runs; ++j)
        {
            auto stream = derive_stream(seed, static_cast<std::uint64_t>(j), tag);
            const FadingSeries fs = generate_fading(stream, weights, K, f_D, dt, options.run_periods / f_D,
                                                    options.oscillators);
            Sums &S = per_run[static_cast<std::size_t>(j)];
            const auto &x = fs.samples;
            if (max_lag >= x.size())
                throw std::invalid_argument("empirical_autocorrelation: lag exceeds run length");
            S.cross.assign(max_lag + 1, 0.0);
            S.pairs.assign(max_lag + 1, 0);
            for (const double v : x)
            {
                S.s1 += v;
                S.s2 += v * v;
            }
            S.n = x.size();
            for (std::size_t l = 0; l <= max_lag; ++l)
            {
                double acc = 0.0;
                for (std::size_t k = 0; k + l < x.size(); ++k)
                    acc += x[k] * x[k + l];
                S.cross[l] = acc;
                S.pairs[l] = x.size() - l;
            }
        }
        double s1 = 0.0, s2 = 0.0;
        std::size_t n = 0;
        std::vector<double> cross(max_lag + 1, 0.0);
        std::vector<std::size_t> pairs(max_lag + 1, 0);
        for (const Sums &S : per_run)
        {
            s1 += S.s1;
            s2 += S.s2;
            n += S.n;
            for (std::size_t l = 0; l <= max_lag; ++l)
            {
                cross[l] += S.cross[l];
                pairs[l] += S.pairs[l];
            }
        }
        AutocorrelationEstimate out;
        out.dt = dt;
        out.mean = s1 / static_cast<double>(n);
        out.variance = s2 / static_cast<double>(n) - out.mean * out.mean;
        out.acf.resize(max_lag + 1);
        for (std::size_t l = 0; l <= max_lag; ++l)
            out.acf[l] = (cross[l] / static_cast<double>(pairs[l]) - out.mean * out.mean) / out.variance;
        return out;
    }

    double DegradationCdf::probability_above(double level_dB, double tolerance_dB) const
    {
        if (sorted_dB.empty())
            return 0.0;
        const auto it = std::upper_bound(sorted_dB.begin(), sorted_dB.end(), level_dB + tolerance_dB);
        return static_cast<double>(sorted_dB.end() - it) / static_cast<double>(sorted_dB.size());
    }

    double DegradationCdf::quantile(double q) const
    {
        if (sorted_dB.empty())
            throw std::invalid_argument("DegradationCdf::quantile: no samples");
        const auto n = sorted_dB.size();
        const auto k = static_cast<std::size_t>(std::clamp(std::ceil(q * static_cast<double>(n)) - 1.0, 0.0,
                                                           static_cast<double>(n - 1)));
        return sorted_dB[k];
    }

    DegradationCdf make_degradation_cdf(std::vector<double> degradations_dB, double step_dB)
    {
        if (!(step_dB > 0.0))
            throw std::invalid_argument("make_degradation_cdf: step must be positive");
        DegradationCdf out;
        out.sorted_dB = std::move(degradations_dB);
        std::sort(out.sorted_dB.begin(), out.sorted_dB.end());
        const double top = out.sorted_dB.empty() ? 0.0 : out.sorted_dB.back();
        const auto n_grid = static_cast<std::size_t>(std::ceil(top / step_dB - 1e-9)) + 1;
        out.grid_dB.resize(n_grid);
        out.cdf.resize(n_grid);
        const double n = static_cast<double>(std::max<std::size_t>(out.sorted_dB.size(), 1));
        for (std::size_t i = 0; i < n_grid; ++i)
        {
            const double g = static_cast<double>(i) * step_dB;
            out.grid_dB[i] = g;
            const auto it = std::upper_bound(out.sorted_dB.begin(), out.sorted_dB.end(),
                                             g + DegradationCdf::kExceedanceTolerance_dB);
            out.cdf[i] = static_cast<double>(it - out.sorted_dB.begin()) / n;
        }
        return out;
    }

    DegradationCdf empirical_degradation_cdf(const TrialContext &ctx, std::size_t n_trials)
    {
        if (n_trials < 1000)
            throw std::invalid_argument("empirical_degradation_cdf: at least 1000 trials");
        return make_degradation_cdf(parallel::degradations(ctx, ctx.config.master_seed, n_trials));
    }

    DegradationCdf empirical_degradation_cdf(const ScenarioConfig &config, std::size_t n_trials)
    {
        return empirical_degradation_cdf(TrialContext::make(config), n_trials);
    }
}
