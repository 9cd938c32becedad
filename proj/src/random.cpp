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

#include "remcr/random.hpp"

namespace remcr
{
    namespace
    {
        std::uint64_t fnv1a(std::string_view s)
        {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : s)
            {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            return h;
        }
    }

    RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t trial_index, std::string_view purpose_tag)
    {
        const std::uint64_t tag = fnv1a(purpose_tag);
        auto lo = [](std::uint64_t x)
        { return static_cast<std::uint32_t>(x & 0xffffffffULL); };
        auto hi = [](std::uint64_t x)
        { return static_cast<std::uint32_t>(x >> 32); };
        std::seed_seq seq{lo(master_seed), hi(master_seed), lo(trial_index), hi(trial_index), lo(tag), hi(tag)};
        return RandomStream(seq);
    }
}
