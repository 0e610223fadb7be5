// Copyright 2026 The Liouville Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tabular command output in three formats:
//   text  rows only, comma separated, then summary lines key=value
//   csv   a header row, the rows, then summary lines key=value
//   json  an object with "config", "rows" and "summary"

#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace liouville::cli {

enum class Format { kText, kCsv, kJson };

Format parse_format(const std::string& name);

// Shortest decimal that reads back to the same double; "inf", "-inf", "nan".
std::string format_number(double x);
// "re" when the imaginary part is zero, otherwise "re+imi" or "re-imi".
std::string format_complex(std::complex<double> z);

// Complex cells print as format_complex in text and csv, and as an object
// {"re", "im"} in json.
using Cell = std::variant<double, long long, std::string, std::complex<double>>;

class Report {
 public:
  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  void set_summary(const std::string& key, const Cell& value);
  nlohmann::ordered_json& config() { return config_; }

  void write(std::ostream& out, Format format) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, Cell>> summary_;
  nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
};

}  // namespace liouville::cli
