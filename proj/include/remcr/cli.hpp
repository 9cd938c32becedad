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

#include <iosfwd>

namespace remcr::cli
{
    inline constexpr int kExitOk = 0;
    inline constexpr int kExitFailure = 1;
    inline constexpr int kExitUsage = 2;
    inline constexpr int kExitFitFailure = 3;

    // Environment variable that, when set to a positive integer, fixes the
    // number of OpenMP workers.
    inline constexpr const char *kWorkersEnv = "REMCR_WORKERS";

    // Entry point behind the remcr executable. Tables go to --out or `out`;
    // summaries and diagnostics go to `err`.
    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}
