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

#ifndef EPIPRIV_CSV_H_
#define EPIPRIV_CSV_H_

#include <cstdint>
#include <string>
#include <vector>

namespace epipriv {

// Comma-separated, one header row, UTF-8, "." decimal point. Fields may be
// double-quoted; quotes escape by doubling.
struct CsvTable {
  std::string source;  // file name for error messages
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based source line of each row, for error reporting.
  std::vector<int> line_numbers;

  // Index of a required column; throws ParseError if missing.
  std::size_t column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& content, const std::string& source);
CsvTable read_csv(const std::string& path);

// Strict numeric field parsers; throw ParseError with the row's source line.
double csv_double(const CsvTable& table, std::size_t row, std::size_t col);
std::int64_t csv_int(const CsvTable& table, std::size_t row, std::size_t col);

// Quotes a field only when it needs quoting.
std::string csv_escape(const std::string& field);

}  // namespace epipriv

#endif  // EPIPRIV_CSV_H_
