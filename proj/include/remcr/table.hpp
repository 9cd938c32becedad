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
#include <string>
#include <variant>
#include <vector>

namespace remcr
{
    inline constexpr const char *kVersion = "0.1.0";

    // A study result: named columns and rows of text, numbers or absent cells.
    struct Table
    {
        using Cell = std::variant<std::monostate, std::string, double>;

        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;

        void add_row(std::vector<Cell> row);
    };

    // 9 significant digits; NaN and infinities are rendered as absent.
    std::string format_number(double v);

    // Header row then one line per row; absent cells are empty.
    void write_csv(std::ostream &out, const Table &table);

    // {"meta": {...}, "rows": [{column: value, ...}, ...]} with absent cells as
    // null. meta_json must be a serialised JSON object.
    void write_json(std::ostream &out, const Table &table, const std::string &meta_json);
}
