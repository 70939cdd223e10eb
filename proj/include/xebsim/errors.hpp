// Copyright 2026 The xebsim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace xebsim {

/// Requested size exceeds what the simulator is willing to allocate.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Qubit or basis index outside the valid range.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Malformed input: non-unitary matrix, unnormalized table, bad config.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace xebsim
