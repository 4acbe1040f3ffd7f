// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The cogmac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Locale-independent number formatting for reports and CSV files.

#ifndef COGMAC_CLI_FORMAT_HPP
#define COGMAC_CLI_FORMAT_HPP

#include <string>

namespace cogmac::cli {

inline constexpr int kSignificantDigits = 12;

/// Shortest "%.12g"-style text; "-0" is printed as "0".
std::string format_number(double value);

/// value rounded to 12 significant digits, for JSON emission.
double round_significant(double value);

}  // namespace cogmac::cli

#endif  // COGMAC_CLI_FORMAT_HPP
