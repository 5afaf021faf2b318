// Copyright 2026 The ellex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ellex {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input-validation failures (bad geometry, bad arguments).
struct InputError : Error {
    using Error::Error;
};

/// Numeric failures (tolerance not met, divergence).
struct NumericError : Error {
    using Error::Error;
};

struct InvalidConic : InputError {
    using InputError::InputError;
};
struct InvalidFrame : InputError {
    using InputError::InputError;
};
struct NotAnEllipse : InputError {
    using InputError::InputError;
};
struct EmptyConic : InputError {
    using InputError::InputError;
};
struct NotAHyperbola : InputError {
    using InputError::InputError;
};
struct SingularTransform : InputError {
    using InputError::InputError;
};
struct LimitingConic : InputError {
    using InputError::InputError;
};
struct DuplicatePoints : InputError {
    using InputError::InputError;
};
struct NotConelliptic : InputError {
    using InputError::InputError;
};
struct DegenerateTriangle : InputError {
    using InputError::InputError;
};
struct InvalidArgument : InputError {
    using InputError::InputError;
};

struct NoBracket : NumericError {
    using NumericError::NumericError;
};
struct ToleranceNotMet : NumericError {
    using NumericError::NumericError;
};
struct StepOverflow : NumericError {
    using NumericError::NumericError;
};

}  // namespace ellex
