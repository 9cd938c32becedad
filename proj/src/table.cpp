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

#include "remcr/table.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace remcr
{
    void Table::add_row(std::vector<Cell> row)
    {
        if (row.size() != columns.size())
            throw std::invalid_argument("Table::add_row: row width does not match the header");
        rows.push_back(std::move(row));
    }

    std::string format_number(double v)
    {
        if (!std::isfinite(v))
            return {};
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return buf;
    }

    namespace
    {
        std::string cell_text(const Table::Cell &c)
        {
            if (const auto *s = std::get_if<std::string>(&c))
            {
                if (s->find_first_of(",\"\n\r") == std::string::npos)
                    return *s;
                std::string q = "\"";
                for (const char ch : *s)
                {
                    if (ch == '"')
                        q += '"';
                    q += ch;
                }
                return q + '"';
            }
            if (const auto *d = std::get_if<double>(&c))
                return format_number(*d);
            return {};
        }
    }

    void write_csv(std::ostream &out, const Table &table)
    {
        for (std::size_t j = 0; j < table.columns.size(); ++j)
            out << (j ? "," : "") << table.columns[j];
        out << '\n';
        for (const auto &row : table.rows)
        {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? "," : "") << cell_text(row[j]);
            out << '\n';
        }
    }

    void write_json(std::ostream &out, const Table &table, const std::string &meta_json)
    {
        nlohmann::ordered_json doc;
        doc["meta"] = nlohmann::ordered_json::parse(meta_json);
        auto rows = nlohmann::ordered_json::array();
        for (const auto &row : table.rows)
        {
            nlohmann::ordered_json rec = nlohmann::ordered_json::object();
            for (std::size_t j = 0; j < row.size(); ++j)
            {
                const auto &c = row[j];
                if (const auto *s = std::get_if<std::string>(&c))
                    rec[table.columns[j]] = *s;
                else if (const auto *d = std::get_if<double>(&c); d && std::isfinite(*d))
                    // keep the 9-digit rendering used by the CSV writer
                    rec[table.columns[j]] = std::stod(format_number(*d));
                else
                    rec[table.columns[j]] = nullptr;
            }
            rows.push_back(std::move(rec));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
    }
}
