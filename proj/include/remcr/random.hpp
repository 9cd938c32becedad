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

#include <cstdint>
#include <random>
#include <string_view>

namespace remcr
{
    // One independent pseudo-random sequence. Obtain instances only through
    // derive_stream so that every draw is a pure function of
    // (master seed, trial index, purpose tag).
    class RandomStream
    {
    public:
        explicit RandomStream(std::seed_seq &seq) : engine_(seq) {}

        double uniform() { return uniform_(engine_); }                 // [0, 1)
        double uniform(double a, double b) { return a + (b - a) * uniform(); }
        double normal() { return normal_(engine_); }                   // N(0, 1)
        std::uint64_t binomial(std::uint64_t n, double p)
        {
            return std::binomial_distribution<std::uint64_t>(n, p)(engine_);
        }
        std::uint64_t bits() { return engine_(); }

        std::mt19937_64 &engine() { return engine_; }

    private:
        std::mt19937_64 engine_;
        std::uniform_real_distribution<double> uniform_{0.0, 1.0};
        std::normal_distribution<double> normal_{0.0, 1.0};
    };

    // Counter-based sub-stream derivation. The tag is hashed (FNV-1a) and the
    // three words are mixed through std::seed_seq, so streams for different
    // indices or tags share no state.
    RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t trial_index, std::string_view purpose_tag);
}
