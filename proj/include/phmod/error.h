// Copyright 2026 The Photonic Module Authors
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

#ifndef PHMOD_ERROR_H
#define PHMOD_ERROR_H

#include <stdexcept>
#include <string>

namespace phmod {

/// Malformed literal, file or preset.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Generator sets that are non-commuting, dependent or otherwise inconsistent.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numeric argument outside its allowed range.
struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A check or schedule exceeds what the module hardware can do (Parity-weight or coherence budget).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Device lifecycle misuse, e.g. starting a check on a busy module.
struct SchedulingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The prepared state does not match the target. Indicates an engine bug.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace phmod

#endif
