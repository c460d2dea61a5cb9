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

#ifndef EPIPRIV_IO_H_
#define EPIPRIV_IO_H_

#include <cstdint>
#include <string>

namespace epipriv {

// Whole-file read; throws IoError.
std::string read_file(const std::string& path);

// Writes through a temp file in the target directory followed by a rename,
// so a failed run never leaves a partial output behind. Throws IoError.
void atomic_write_file(const std::string& path, const std::string& content);

// Shortest decimal form that round-trips the exact value ("1876.42", "0.5").
std::string format_double(double value);

std::string format_int(std::int64_t value);

}  // namespace epipriv

#endif  // EPIPRIV_IO_H_
