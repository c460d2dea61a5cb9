// Copyright 2026 The epipriv Authors
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

#include "epipriv/csv.h"

#include <charconv>

#include "epipriv/error.h"
#include "epipriv/io.h"

namespace epipriv {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) {
      return i;
    }
  }
  throw ParseError(source, 1, "missing required column '" + name + "'");
}

namespace {

std::vector<std::string> split_record(const std::string& line,
                                      const std::string& source,
                                      int line_number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      if (!field.empty()) {
        throw ParseError(source, line_number, "unexpected quote mid-field");
      }
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) {
    throw ParseError(source, line_number, "unterminated quoted field");
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

CsvTable parse_csv(const std::string& content, const std::string& source) {
  CsvTable table;
  table.source = source;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string::npos) {
      end = content.size();
    }
    std::string line = content.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    ++line_number;
    const bool last = end == content.size();
    pos = end + 1;
    if (line.empty()) {
      if (last) break;
      continue;
    }
    std::vector<std::string> fields = split_record(line, source, line_number);
    if (table.header.empty()) {
      table.header = std::move(fields);
    } else {
      if (fields.size() != table.header.size()) {
        throw ParseError(source, line_number,
                         "expected " + std::to_string(table.header.size()) +
                             " fields, got " + std::to_string(fields.size()));
      }
      table.rows.push_back(std::move(fields));
      table.line_numbers.push_back(line_number);
    }
    if (last) break;
  }
  if (table.header.empty()) {
    throw ParseError(source, 1, "empty CSV: missing header row");
  }
  return table;
}

CsvTable read_csv(const std::string& path) {
  return parse_csv(read_file(path), path);
}

double csv_double(const CsvTable& table, std::size_t row, std::size_t col) {
  const std::string& field = table.rows[row][col];
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(table.source, table.line_numbers[row],
                     "'" + field + "' is not a number");
  }
  return value;
}

std::int64_t csv_int(const CsvTable& table, std::size_t row, std::size_t col) {
  const std::string& field = table.rows[row][col];
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(table.source, table.line_numbers[row],
                     "'" + field + "' is not an integer");
  }
  return value;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += "\"\"";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace epipriv
