/*
 * Copyright 2026 The directrank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DIRECTRANK_TEXT_HPP
#define DIRECTRANK_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace directrank {

/// Shortest decimal form that round-trips the exact double. All file formats
/// in the project use this, which is what makes repeated runs byte-identical.
std::string format_double(double value);

/// Strict full-token parse (std::from_chars). Throws InvalidInput otherwise.
double parse_double(std::string_view token);

/// Strict full-token integer parse. Throws InvalidInput otherwise.
long long parse_int(std::string_view token);

std::vector<std::string_view> split(std::string_view line, char sep);

}  // namespace directrank

#endif  // DIRECTRANK_TEXT_HPP
