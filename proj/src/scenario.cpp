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

#include "remcr/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace remcr
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        double parse_double(std::string_view value, std::string_view key, std::size_t line)
        {
            const std::string buf(value);
            char *end = nullptr;
            const double d = std::strtod(buf.c_str(), &end);
            if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(d))
                throw ConfigError("line " + std::to_string(line) + ": invalid number for '" +
                                      std::string(key) + "': '" + buf + "'",
                                  line);
            return d;
        }

        std::uint64_t parse_u64(std::string_view value, std::string_view key, std::size_t line)
        {
            std::uint64_t out = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw ConfigError("line " + std::to_string(line) + ": invalid integer for '" +
                                      std::string(key) + "': '" + std::string(value) + "'",
                                  line);
            return out;
        }

        std::string format_number(double x)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            return buf;
        }
    }

    void ScenarioConfig::validate() const
    {
        auto require = [](bool ok, const std::string &msg)
        {
            if (!ok)
                throw ConfigError(msg);
        };
        require(R0 > 0.0, "R0 must be positive");
        require(R0 < Rc, "R0 must be smaller than Rc");
        require(Rc <= R, "Rc must not exceed R");
        require(sigma_dB > 0.0, "sigma_dB must be positive");
        require(gamma_pl > 0.0, "gamma_pl must be positive");
        require(cr_density >= 0.0, "cr_density must be non-negative");
        require(activity_p >= 0.0 && activity_p <= 1.0, "activity_p must lie in [0, 1]");
        require(f_D > 0.0, "f_D must be positive");
        require(buffer_dB > 0.0, "buffer_dB must be positive");
        require(delta_grid >= 0.0, "delta_grid must be non-negative");
        require(D_d > 0.0, "D_d must be positive");
        require(noise_power > 0.0, "noise_power must be positive");
    }

    std::vector<std::string> ScenarioConfig::warnings() const
    {
        std::vector<std::string> out;
        if (gamma_pl < 2.0 || gamma_pl > 4.0)
            out.push_back("gamma_pl = " + format_number(gamma_pl) + " is outside the usual range [2, 4]");
        return out;
    }

    ScenarioConfig parse_scenario(std::string_view text)
    {
        ScenarioConfig cfg;
        using Setter = std::function<void(std::string_view, std::size_t)>;
        auto real = [](double &field, std::string_view key)
        {
            return Setter([&field, key](std::string_view v, std::size_t line)
                          { field = parse_double(v, key, line); });
        };
        const std::map<std::string, Setter, std::less<>> setters = {
            {"R", real(cfg.R, "R")},
            {"R0", real(cfg.R0, "R0")},
            {"Rc", real(cfg.Rc, "Rc")},
            {"sigma_dB", real(cfg.sigma_dB, "sigma_dB")},
            {"gamma_pl", real(cfg.gamma_pl, "gamma_pl")},
            {"cr_density", real(cfg.cr_density, "cr_density")},
            {"activity_p", real(cfg.activity_p, "activity_p")},
            {"f_D", real(cfg.f_D, "f_D")},
            {"buffer_dB", real(cfg.buffer_dB, "buffer_dB")},
            {"delta_grid", real(cfg.delta_grid, "delta_grid")},
            {"D_d", real(cfg.D_d, "D_d")},
            {"noise_power", real(cfg.noise_power, "noise_power")},
            {"K_dB", Setter([&cfg](std::string_view v, std::size_t line)
                            { cfg.K_dB = parse_double(v, "K_dB", line); })},
            {"master_seed", Setter([&cfg](std::string_view v, std::size_t line)
                                   { cfg.master_seed = parse_u64(v, "master_seed", line); })},
        };

        std::set<std::string, std::less<>> seen;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            auto eol = text.find('\n', pos);
            if (eol == std::string_view::npos)
                eol = text.size();
            const auto line = trim(text.substr(pos, eol - pos));
            pos = eol + 1;
            ++line_no;
            if (line.empty() || line.front() == '#')
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
            const auto key = trim(line.substr(0, eq));
            const auto value = trim(line.substr(eq + 1));
            const auto it = setters.find(key);
            if (it == setters.end())
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'", line_no);
            if (!seen.insert(std::string(key)).second)
                throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'", line_no);
            it->second(value, line_no);
        }
        cfg.validate();
        return cfg;
    }

    ScenarioConfig load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError("cannot open scenario file '" + path.string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_scenario(ss.str());
    }

    std::string format_scenario(const ScenarioConfig &c)
    {
        std::ostringstream out;
        out << "R = " << format_number(c.R) << '\n'
            << "R0 = " << format_number(c.R0) << '\n'
            << "Rc = " << format_number(c.Rc) << '\n'
            << "sigma_dB = " << format_number(c.sigma_dB) << '\n'
            << "gamma_pl = " << format_number(c.gamma_pl) << '\n'
            << "cr_density = " << format_number(c.cr_density) << '\n'
            << "activity_p = " << format_number(c.activity_p) << '\n'
            << "f_D = " << format_number(c.f_D) << '\n'
            << "buffer_dB = " << format_number(c.buffer_dB) << '\n'
            << "delta_grid = " << format_number(c.delta_grid) << '\n'
            << "D_d = " << format_number(c.D_d) << '\n'
            << "noise_power = " << format_number(c.noise_power) << '\n';
        if (c.K_dB)
            out << "K_dB = " << format_number(*c.K_dB) << '\n';
        out << "master_seed = " << c.master_seed << '\n';
        return out.str();
    }

    double interference_threshold(double buffer_dB, double noise_power)
    {
        if (!(buffer_dB > 0.0) || !(noise_power > 0.0))
            throw std::invalid_argument("interference_threshold: buffer and noise power must be positive");
        return noise_power * std::expm1(buffer_dB * std::log(10.0) / 10.0);
    }

    double linear_to_db(double x) { return 10.0 * std::log10(x); }
}
