// Copyright 2026 The polcap Authors
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

#ifndef POLCAP_ERRORS_HPP
#define POLCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polcap {

/// A matrix failed the density-operator checks (Hermiticity, unit trace, positivity).
struct InvalidState : std::invalid_argument {
    explicit InvalidState(const std::string &msg) : std::invalid_argument("invalid state: " + msg) {}
};

/// A precondition on arguments was violated (dimension mismatch, out-of-range parameter).
struct ContractError : std::logic_error {
    explicit ContractError(const std::string &msg) : std::logic_error("contract violation: " + msg) {}
};

/// An iterative routine did not converge.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string &msg) : std::runtime_error("numeric error: " + msg) {}
};

}  // namespace polcap

#endif  // POLCAP_ERRORS_HPP
