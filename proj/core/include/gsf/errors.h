// Copyright 2026 The gsf Authors
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

#ifndef GSF_ERRORS_H
#define GSF_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsf {

/// Bad argument to a library call (vertex out of range, size mismatch, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `offset` is the byte offset of the offending character.
struct ParseError : std::runtime_error {
    ParseError(const std::string &message, size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"), offset(offset) {
    }
    size_t offset;
};

/// The request is valid but outside what this build can do (e.g. generator size limits).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource budget was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Stored or supplied data is inconsistent (checksum, census, missing class).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gsf

#endif
