/*
 * Copyright 2026 The bookbias Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bookbias {

inline constexpr const char* kVersion = "0.1.0";

enum class GenderLabel { Male, Female, Unknown };

inline const char* to_string(GenderLabel g) {
  switch (g) {
    case GenderLabel::Male: return "male";
    case GenderLabel::Female: return "female";
    default: return "unknown";
  }
}

// Error for line-oriented input files; the message always carries
// "<file>:<line>:" so callers (and users) can locate the offending row.
struct ParseError : std::runtime_error {
  ParseError(const std::string& file_in, std::size_t line_in, const std::string& what_in)
      : std::runtime_error(file_in + ":" + std::to_string(line_in) + ": " + what_in),
        file(file_in),
        line(line_in) {}

  std::string file;
  std::size_t line;
};

}  // namespace bookbias
