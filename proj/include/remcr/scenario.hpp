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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace remcr
{
    // Raised for malformed or out-of-range scenario files. Carries the offending
    // line number when the error comes from the parser (0 otherwise).
    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(const std::string &what, std::size_t line = 0)
            : std::runtime_error(what), line_(line) {}
        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
    };

    // All physical and simulation parameters of one scenario. Distances are in
    // meters, powers are linear and relative to the noise power.
    struct ScenarioConfig
    {
        double R = 1000.0;           // PU coverage radius
        double R0 = 10.0;            // annulus inner radius
        double Rc = 100.0;           // CR cell radius
        double sigma_dB = 8.0;       // shadowing standard deviation
        double gamma_pl = 3.5;       // path-loss exponent
        double cr_density = 1000.0;  // CRs per km^2
        double activity_p = 0.1;     // probability that a CR seeks a connection
        double f_D = 25.0;           // Doppler frequency [Hz]
        double buffer_dB = 2.0;      // tolerated PU SNR reduction
        double delta_grid = 1.0;     // REM grid size, 0 = perfect REM
        double D_d = 100.0;          // shadowing decorrelation distance
        double noise_power = 1.0;
        std::optional<double> K_dB;  // Rician K-factor, absent = Rayleigh
        std::uint64_t master_seed = 1;

        // Throws ConfigError when an invariant is violated.
        void validate() const;

        // Soft warnings (e.g. a path-loss exponent outside [2, 4]).
        std::vector<std::string> warnings() const;
    };

    // Parses "key = value" lines. Blank lines and lines starting with '#' are
    // skipped. Unknown keys, duplicate keys and malformed values throw ConfigError.
    ScenarioConfig parse_scenario(std::string_view text);
    ScenarioConfig load_scenario(const std::filesystem::path &path);

    // Renders a config in the same key = value format accepted by parse_scenario.
    std::string format_scenario(const ScenarioConfig &config);

    // Aggregate interference at which the PU SNR drops by exactly buffer_dB:
    // noise_power * (10^(buffer_dB/10) - 1).
    double interference_threshold(double buffer_dB, double noise_power);

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    double linear_to_db(double x);
}
