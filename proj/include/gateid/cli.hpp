// Copyright 2026 The gateid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Command-line front end: report documents, their renderers, and one entry
 * point per subcommand.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gateid/gatesets.hpp"
#include "gateid/numerics.hpp"

namespace gateid::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Markdown, Csv };

[[nodiscard]] Format parse_format(std::string_view name);

/// Exit codes for scripting.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCap = 3;

struct AnalysisConfig {
    std::optional<std::string> input;
    std::optional<std::string> family;
    gatesets::FamilyParams params;
    NumericConfig numeric;
    std::uint64_t seed = 1;
    std::optional<std::size_t> n_max; ///< unset: up to the linear bound within the cap
    std::size_t shots = 10000;
    Format format = Format::Markdown;
    std::size_t restarts = 4;
    std::size_t trials = 16;
    std::optional<std::string> character_table;

    std::optional<std::size_t> queries;    ///< N for single-N subcommands
    std::string strategy = "design";       ///< design | unambiguous
    std::string reference = "haar";        ///< design-check: haar | self | path
    std::size_t t = 1;                     ///< design-check order
    std::optional<std::size_t> d_a_max;    ///< ancilla probe range
    std::optional<std::string> write_path; ///< catalog: save the gate set here

    /// Throws InvalidArgument on inconsistent settings.
    void check() const;
};

/**
 * Report document:
 * {"command": str, "exit_code": int, "sections": [section...]} where a
 * section is {"title", "items": {...}} or {"title", "columns", "rows",
 * "highlight"} or {"title", "notes": [...]}.
 */
class Report {
  public:
    explicit Report(std::string command);

    void add_items(std::string title, Json items);
    void add_table(std::string title, std::vector<std::string> columns,
                   std::vector<Json> rows, std::vector<std::size_t> highlight = {});
    void add_notes(std::string title, std::vector<std::string> notes);
    void set_exit_code(int code);

    [[nodiscard]] int exit_code() const;
    [[nodiscard]] const Json &doc() const { return doc_; }

  private:
    Json doc_;
};

/// JSON is doc.dump(2); markdown renders headings and pipe tables; csv
/// emits one row per table row with the section title first.
[[nodiscard]] std::string render(const Json &doc, Format format);

/// Gate set from --input or --family; validation failures raise ValidationError.
[[nodiscard]] GateSet load_configured_set(const AnalysisConfig &cfg);

[[nodiscard]] Report catalog_command(const AnalysisConfig &cfg);
[[nodiscard]] Report analyze_command(const AnalysisConfig &cfg);
[[nodiscard]] Report pmax_command(const AnalysisConfig &cfg);
[[nodiscard]] Report povm_command(const AnalysisConfig &cfg);
[[nodiscard]] Report simulate_command(const AnalysisConfig &cfg);
[[nodiscard]] Report design_check_command(const AnalysisConfig &cfg);
[[nodiscard]] Report ancilla_command(const AnalysisConfig &cfg);
[[nodiscard]] Report group_command(const AnalysisConfig &cfg);

/// Parses argv, runs one subcommand, writes the rendered report; returns the exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace gateid::cli
