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

#ifndef COGMAC_ERRORS_HPP
#define COGMAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cogmac {

/// Bad argument: dimension mismatch, out-of-range value, broken invariant.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation is not available for this number of users.
class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coordinate that does not enter the feasibility constraint was asked to be solved for.
class UndefinedCoordinate : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The closed-form multiplier expressions hit a pole; the active set is stale.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cogmac

#endif  // COGMAC_ERRORS_HPP
