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

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "gateid/cli.hpp"

namespace gateid::cli {

namespace {

std::string number(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string cell(const Json &j, int digits) {
    switch (j.type()) {
    case Json::value_t::null:
        return "n/a";
    case Json::value_t::boolean:
        return j.get<bool>() ? "yes" : "no";
    case Json::value_t::number_integer:
        return std::to_string(j.get<long long>());
    case Json::value_t::number_unsigned:
        return std::to_string(j.get<unsigned long long>());
    case Json::value_t::number_float:
        return number(j.get<double>(), digits);
    case Json::value_t::string:
        return j.get<std::string>();
    case Json::value_t::array: {
        std::string out;
        for (const auto &e : j) {
            out += (out.empty() ? "" : " ") + cell(e, digits);
        }
        return out;
    }
    default:
        return j.dump();
    }
}

std::string md_escape(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else if (c == '\n') {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out.empty() ? " " : out;
}

void md_row(std::ostringstream &os, const std::vector<std::string> &cells, bool bold) {
    os << '|';
    for (const auto &c : cells) {
        os << ' ' << (bold ? "**" + md_escape(c) + "**" : md_escape(c)) << " |";
    }
    os << '\n';
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

void csv_row(std::ostringstream &os, const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? "," : "") << csv_field(cells[i]);
    }
    os << '\n';
}

std::string render_markdown(const Json &doc) {
    std::ostringstream os;
    os << "# gateid " << doc.value("command", std::string()) << "\n";
    for (const auto &s : doc["sections"]) {
        os << "\n## " << s.value("title", std::string()) << "\n\n";
        if (s.contains("items")) {
            md_row(os, {"key", "value"}, false);
            md_row(os, {"---", "---"}, false);
            for (const auto &[k, v] : s["items"].items()) {
                md_row(os, {k, cell(v, 10)}, false);
            }
        } else if (s.contains("columns")) {
            std::vector<std::string> cols;
            for (const auto &c : s["columns"]) {
                cols.push_back(c.get<std::string>());
            }
            md_row(os, cols, false);
            md_row(os, std::vector<std::string>(cols.size(), "---"), false);
            const auto &hl = s["highlight"];
            std::size_t idx = 0;
            for (const auto &r : s["rows"]) {
                std::vector<std::string> cells;
                for (const auto &v : r) {
                    cells.push_back(cell(v, 10));
                }
                const bool bold = std::find(hl.begin(), hl.end(), Json(idx)) != hl.end();
                md_row(os, cells, bold);
                ++idx;
            }
        } else if (s.contains("notes")) {
            if (s["notes"].empty()) {
                os << "none\n";
            }
            for (const auto &n : s["notes"]) {
                os << "- " << n.get<std::string>() << '\n';
            }
        }
    }
    const int code = doc.value("exit_code", 0);
    if (code != 0) {
        os << "\nexit code " << code << '\n';
    }
    return os.str();
}

std::string render_csv(const Json &doc) {
    std::ostringstream os;
    bool first = true;
    for (const auto &s : doc["sections"]) {
        const std::string title = s.value("title", std::string());
        std::vector<std::string> header{"section"};
        std::vector<std::vector<std::string>> rows;
        if (s.contains("items")) {
            header.insert(header.end(), {"key", "value"});
            for (const auto &[k, v] : s["items"].items()) {
                rows.push_back({title, k, cell(v, 17)});
            }
        } else if (s.contains("columns")) {
            for (const auto &c : s["columns"]) {
                header.push_back(c.get<std::string>());
            }
            for (const auto &r : s["rows"]) {
                std::vector<std::string> row{title};
                for (const auto &v : r) {
                    row.push_back(cell(v, 17));
                }
                rows.push_back(std::move(row));
            }
        } else if (s.contains("notes")) {
            header.push_back("note");
            for (const auto &n : s["notes"]) {
                rows.push_back({title, n.get<std::string>()});
            }
        }
        if (!first) {
            os << '\n';
        }
        first = false;
        csv_row(os, header);
        for (const auto &r : rows) {
            csv_row(os, r);
        }
    }
    return os.str();
}

} // namespace

std::string render(const Json &doc, Format format) {
    switch (format) {
    case Format::Json:
        return doc.dump(2) + "\n";
    case Format::Markdown:
        return render_markdown(doc);
    case Format::Csv:
        return render_csv(doc);
    }
    return {};
}

} // namespace gateid::cli
