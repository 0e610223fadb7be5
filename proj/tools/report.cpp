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

#include "report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace liouville::cli {
namespace {

std::string cell_text(const Cell& cell) {
  if (const double* x = std::get_if<double>(&cell)) return format_number(*x);
  if (const long long* n = std::get_if<long long>(&cell)) return std::to_string(*n);
  if (const auto* z = std::get_if<std::complex<double>>(&cell)) return format_complex(*z);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const double* x = std::get_if<double>(&cell)) {
    if (std::isfinite(*x)) return *x;
    return format_number(*x);
  }
  if (const long long* n = std::get_if<long long>(&cell)) return *n;
  if (const auto* z = std::get_if<std::complex<double>>(&cell)) {
    return {{"re", cell_json(z->real())}, {"im", cell_json(z->imag())}};
  }
  return std::get<std::string>(cell);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0.0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_number(z.real());
  const std::string sign = std::signbit(z.imag()) ? "" : "+";
  return format_number(z.real()) + sign + format_number(z.imag()) + "i";
}

void Report::set_summary(const std::string& key, const Cell& value) {
  for (auto& entry : summary_) {
    if (entry.first == key) {
      entry.second = value;
      return;
    }
  }
  summary_.emplace_back(key, value);
}

void Report::write(std::ostream& out, Format format) const {
  if (format == Format::kJson) {
    nlohmann::ordered_json doc;
    doc["config"] = config_;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json object = nlohmann::ordered_json::object();
      for (std::size_t k = 0; k < columns_.size() && k < row.size(); ++k) {
        object[columns_[k]] = cell_json(row[k]);
      }
      doc["rows"].push_back(std::move(object));
    }
    doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : summary_) doc["summary"][key] = cell_json(value);
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == Format::kCsv) {
    for (std::size_t k = 0; k < columns_.size(); ++k) {
      out << (k ? "," : "") << columns_[k];
    }
    out << '\n';
  }
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << cell_text(row[k]);
    out << '\n';
  }
  for (const auto& [key, value] : summary_) out << key << '=' << cell_text(value) << '\n';
}

}  // namespace liouville::cli
