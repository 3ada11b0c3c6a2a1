// Copyright 2026 The coopgame Authors
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

#ifndef COOPGAME_ERRORS_HPP_
#define COOPGAME_ERRORS_HPP_

#include <stdexcept>

namespace coopgame {

// Malformed input data: bad shapes, empty containers, non-finite entries.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Arguments outside an operation's domain (nonpositive lambda, bad brackets,
// threat points outside the feasible set).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Model parameters violating the game family's defining inequalities.
struct ConstraintError : std::domain_error {
  using std::domain_error::domain_error;
};

// An iterative solver failed to locate a solution.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coopgame

#endif  // COOPGAME_ERRORS_HPP_
