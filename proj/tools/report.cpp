// Copyright 2026 The ucqnn Authors
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
#include "report.hpp"

#include "ucqnn/version.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ucqnn::cli {

namespace {

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void render_text(std::ostream &out, const Report::Table &t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
        for (const auto &row : t.rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto emit = [&](const std::vector<std::string> &cells) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) {
                line += "  ";
            }
            line += cells[c];
            if (c + 1 < cells.size()) {
                line.append(width[c] - cells[c].size(), ' ');
            }
        }
        out << line << '\n';
    };
    emit(t.columns);
    std::vector<std::string> rule;
    for (std::size_t w : width) {
        rule.emplace_back(w, '-');
    }
    emit(rule);
    for (const auto &row : t.rows) {
        emit(row);
    }
}

void render_markdown(std::ostream &out, const Report::Table &t) {
    auto emit = [&](const std::vector<std::string> &cells) {
        out << '|';
        for (const auto &c : cells) {
            out << ' ' << c << " |";
        }
        out << '\n';
    };
    emit(t.columns);
    out << '|';
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        out << "---|";
    }
    out << '\n';
    for (const auto &row : t.rows) {
        emit(row);
    }
}

} // namespace

Format parse_format(const std::string &name) {
    if (name == "text") {
        return Format::Text;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "md") {
        return Format::Markdown;
    }
    throw std::invalid_argument("unknown format '" + name + "'");
}

const char *format_name(Format f) {
    switch (f) {
    case Format::Text:
        return "text";
    case Format::Csv:
        return "csv";
    case Format::Markdown:
        return "md";
    }
    return "?";
}

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::meta(const std::string &key, const std::string &value) {
    meta_.emplace_back(key, value);
}

void Report::line(const std::string &text) { lines_.push_back(text); }

Report::Table &Report::table(std::string title,
                             std::vector<std::string> columns) {
    tables_.push_back(Table{std::move(title), std::move(columns), {}});
    return tables_.back();
}

void Report::render(std::ostream &out, Format format) const {
    switch (format) {
    case Format::Text:
    case Format::Csv:
        out << "# " << kName << ' ' << kVersion << ' ' << command_ << '\n';
        for (const auto &[k, v] : meta_) {
            out << "# " << k << ": " << v << '\n';
        }
        break;
    case Format::Markdown:
        out << "<!-- " << kName << ' ' << kVersion << ' ' << command_ << '\n';
        for (const auto &[k, v] : meta_) {
            out << k << ": " << v << '\n';
        }
        out << "-->\n";
        break;
    }
    for (const auto &l : lines_) {
        out << (format == Format::Csv ? "# " : "") << l << '\n';
    }
    for (const auto &t : tables_) {
        out << '\n';
        switch (format) {
        case Format::Text:
            if (!t.title.empty()) {
                out << t.title << '\n';
            }
            render_text(out, t);
            break;
        case Format::Csv:
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                out << (c ? "," : "") << csv_escape(t.columns[c]);
            }
            out << '\n';
            for (const auto &row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << (c ? "," : "") << csv_escape(row[c]);
                }
                out << '\n';
            }
            break;
        case Format::Markdown:
            if (!t.title.empty()) {
                out << "**" << t.title << "**\n\n";
            }
            render_markdown(out, t);
            break;
        }
    }
}

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

std::string exact(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

} // namespace ucqnn::cli
