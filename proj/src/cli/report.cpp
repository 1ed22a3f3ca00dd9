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

#include <utility>

#include "gateid/cli.hpp"
#include "gateid/errors.hpp"

namespace gateid::cli {

Format parse_format(std::string_view name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "markdown" || name == "md") {
        return Format::Markdown;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw InvalidArgument("unknown format '" + std::string(name) + "' (json|markdown|csv)");
}

void AnalysisConfig::check() const {
    numeric.check();
    if (n_max && *n_max < 1) {
        throw InvalidArgument("--n-max must be at least 1");
    }
    if (shots < 1) {
        throw InvalidArgument("--shots must be at least 1");
    }
    if (restarts < 1 || trials < 1) {
        throw InvalidArgument("--restarts and --trials must be at least 1");
    }
    if (queries && *queries < 1) {
        throw InvalidArgument("--queries must be at least 1");
    }
    if (strategy != "design" && strategy != "unambiguous") {
        throw InvalidArgument("--strategy must be design or unambiguous");
    }
    if (t < 1) {
        throw InvalidArgument("--t must be at least 1");
    }
}

Report::Report(std::string command) {
    doc_["command"] = std::move(command);
    doc_["exit_code"] = kExitOk;
    doc_["sections"] = Json::array();
}

void Report::add_items(std::string title, Json items) {
    doc_["sections"].push_back({{"title", std::move(title)}, {"items", std::move(items)}});
}

void Report::add_table(std::string title, std::vector<std::string> columns,
                       std::vector<Json> rows, std::vector<std::size_t> highlight) {
    Json section;
    section["title"] = std::move(title);
    section["columns"] = std::move(columns);
    section["rows"] = Json::array();
    for (auto &r : rows) {
        section["rows"].push_back(std::move(r));
    }
    section["highlight"] = std::move(highlight);
    doc_["sections"].push_back(std::move(section));
}

void Report::add_notes(std::string title, std::vector<std::string> notes) {
    doc_["sections"].push_back({{"title", std::move(title)}, {"notes", std::move(notes)}});
}

void Report::set_exit_code(int code) { doc_["exit_code"] = code; }

int Report::exit_code() const { return doc_["exit_code"].get<int>(); }

} // namespace gateid::cli
