/* Copyright 2026 The aka-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <fstream>
#include <map>

#include <fmt/format.h>

#include "aka/errors.hpp"
#include "aka/runner.hpp"

namespace aka::runner {

namespace {

std::vector<std::string> canonical_labels()
{
    std::vector<std::string> out;
    for (auto id : kMatrixScenarios)
    {
        if (id == ScenarioId::ReplaySuciSame)
        {
            out.emplace_back(std::string(to_string(id)) + "/in-window");
            out.emplace_back(std::string(to_string(id)) + "/out-of-window");
        }
        else
        {
            out.emplace_back(to_string(id));
        }
    }
    return out;
}

std::string cell_text(const OutcomeRow &row)
{
    std::string out = outcome_text(row.outcome);
    if (row.auts_present)
        out += " +auts";
    if (row.nonce_reuse_logged)
        out += " +nonce-reuse";
    return out;
}

template <typename T>
void push_unique(std::vector<T> &v, const T &x)
{
    if (std::find(v.begin(), v.end(), x) == v.end())
        v.push_back(x);
}

void write_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << content;
    if (!out)
        throw Error("write failed for " + path.string());
}

} // namespace

MatrixReport emit_outcome_matrix(const std::vector<OutcomeRow> &rows, const std::optional<std::filesystem::path> &out_dir)
{
    MatrixReport report;
    const auto canonical = canonical_labels();

    std::vector<VariantMode> variants;
    std::vector<std::string> present;
    std::map<std::pair<std::string, VariantMode>, const OutcomeRow *> cells;
    for (const auto &row : rows)
    {
        push_unique(variants, row.variant);
        push_unique(present, row.label());
        if (!cells.emplace(std::pair{row.label(), row.variant}, &row).second)
            report.warnings.push_back(
                fmt::format("duplicate cell {} / {}; keeping the first", row.label(), to_string(row.variant)));
        if (!matches_expected(row))
        {
            const auto cell = expected_cell(row.scenario, row.subcase, row.variant);
            report.mismatches.push_back(fmt::format("{} / {}: got {}, expected {}", row.label(),
                                                    to_string(row.variant), cell_text(row),
                                                    to_string(cell->outcome)));
        }
    }

    if (rows.empty())
        report.warnings.emplace_back("partial matrix: no outcome rows");
    for (auto mode : variants)
        for (const auto &label : canonical)
            if (!cells.contains({label, mode}))
                report.warnings.push_back(fmt::format("partial matrix: missing cell {} / {}", label, to_string(mode)));

    // Canonical rows first, then anything else in input order.
    std::vector<std::string> labels;
    for (const auto &label : canonical)
        if (std::find(present.begin(), present.end(), label) != present.end())
            labels.push_back(label);
    for (const auto &label : present)
        push_unique(labels, label);

    if (!rows.empty())
    {
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string> header{"scenario"};
        for (auto mode : variants)
            header.emplace_back(to_string(mode));
        grid.push_back(header);
        for (const auto &label : labels)
        {
            std::vector<std::string> line{label};
            for (auto mode : variants)
            {
                auto it = cells.find({label, mode});
                line.push_back(it == cells.end() ? "-" : cell_text(*it->second));
            }
            grid.push_back(std::move(line));
        }

        std::vector<std::size_t> widths(header.size(), 0);
        for (const auto &line : grid)
            for (std::size_t c = 0; c < line.size(); ++c)
                widths[c] = std::max(widths[c], line[c].size());
        for (const auto &line : grid)
        {
            std::string text;
            for (std::size_t c = 0; c < line.size(); ++c)
                text += fmt::format("{:<{}}", line[c], c + 1 == line.size() ? 0 : widths[c] + 2);
            report.table += text + "\n";
        }
    }

    report.csv = "scenario,variant,outcome,verdict\n";
    for (const auto &row : rows)
        report.csv += fmt::format("{},{},{},{}\n", row.label(), to_string(row.variant), outcome_text(row.outcome),
                                  row.verdict ? to_string(*row.verdict) : std::string_view{});

    if (out_dir)
    {
        std::filesystem::create_directories(*out_dir);
        write_file(*out_dir / "matrix.txt", report.table);
        write_file(*out_dir / "matrix.csv", report.csv);
    }
    return report;
}

} // namespace aka::runner
