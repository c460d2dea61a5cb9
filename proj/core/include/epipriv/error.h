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

#ifndef EPIPRIV_ERROR_H_
#define EPIPRIV_ERROR_H_

#include <stdexcept>
#include <string>

namespace epipriv {

// Bad parameter values, contract violations, malformed input data.
// The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Operation called out of order (e.g. a consistency pass before noise
// was injected).
class StateError : public std::logic_error {
 public:
  explicit StateError(const std::string& what) : std::logic_error(what) {}
};

// Malformed CSV/JSON input; carries a 1-based line number when known.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : ValidationError(file + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Filesystem failures. The CLI maps these to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace epipriv

#endif  // EPIPRIV_ERROR_H_
