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

#include <string>
#include <string_view>

namespace bookbias {

// Porter suffix-stripping stemmer (classic variant, matching the reference
// implementation's behaviour, including its two documented departures from
// the original article). Input is expected to be a lowercase alphabetic
// word; uppercase ASCII is folded defensively. Words of length <= 2 are
// returned unchanged.
std::string porter_stem(std::string_view word);

inline std::string stem(std::string_view word) { return porter_stem(word); }

}  // namespace bookbias
