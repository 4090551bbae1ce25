/*
 * Copyright 2026 The specfact Authors
 *
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

#ifndef SPECFACT_ERRORS_HPP
#define SPECFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specfact {

// Coarse failure classes; the CLI maps them onto its exit-code contract
// (0 pass, 1 input, 2 numerical, 3 precondition, 4 resource).
enum class ErrorCategory { input, numerical, precondition, resource };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what),
        category_(cat),
        name_(std::move(name)) {}

  ErrorCategory category() const noexcept { return category_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorCategory category_;
  std::string name_;
};

#define SPECFACT_DEFINE_ERROR(Name, Category)                   \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what)                      \
        : Error(ErrorCategory::Category, #Name, what) {}        \
  }

// Malformed or inconsistent data handed to the library.
SPECFACT_DEFINE_ERROR(ParseError, input);
SPECFACT_DEFINE_ERROR(DimensionMismatch, input);
SPECFACT_DEFINE_ERROR(InvalidArgument, input);
SPECFACT_DEFINE_ERROR(NotParaHermitian, input);

// The computation itself broke down.
SPECFACT_DEFINE_ERROR(NoConvergence, numerical);
SPECFACT_DEFINE_ERROR(RemainderTooLarge, numerical);
SPECFACT_DEFINE_ERROR(AllSamplesSingular, numerical);
SPECFACT_DEFINE_ERROR(UnpairedRoot, numerical);
SPECFACT_DEFINE_ERROR(ResidualCheckFailed, numerical);

// The input is well-formed but outside an operation's stated regime.
SPECFACT_DEFINE_ERROR(NotPositiveDefinite, precondition);
SPECFACT_DEFINE_ERROR(NotNonnegativeOnCircle, precondition);
SPECFACT_DEFINE_ERROR(RootOnCircle, precondition);
SPECFACT_DEFINE_ERROR(SimpleRootsRequired, precondition);
SPECFACT_DEFINE_ERROR(RankDeficiencyMismatch, precondition);
SPECFACT_DEFINE_ERROR(NotARoot, precondition);
SPECFACT_DEFINE_ERROR(DeterminantMismatch, precondition);

SPECFACT_DEFINE_ERROR(ResourceLimit, resource);

#undef SPECFACT_DEFINE_ERROR

}  // namespace specfact

#endif  // SPECFACT_ERRORS_HPP
