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
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ucqnn::cli {

enum class Format { Text, Csv, Markdown };

/// "text", "csv" or "md"; throws std::invalid_argument otherwise.
Format parse_format(const std::string &name);
const char *format_name(Format f);

/// Key/value header describing a run, followed by zero or more tables.
class Report {
  public:
    explicit Report(std::string command);

    void meta(const std::string &key, const std::string &value);
    void line(const std::string &text);

    struct Table {
        std::string title;
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;
    };
    Table &table(std::string title, std::vector<std::string> columns);

    void render(std::ostream &out, Format format) const;

  private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> lines_;
    std::vector<Table> tables_;
};

/// Fixed-notation number with `digits` decimals.
std::string fixed(double v, int digits);
/// Shortest round-trip text for a double.
std::string exact(double v);

} // namespace ucqnn::cli
