// Copyright 2026 The tdepth Authors
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

#ifndef TDEPTH_ERROR_H
#define TDEPTH_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdepth {

enum class ErrorKind {
    MismatchedQubits,
    DependentSet,
    NonCommutingSet,
    NonHermitianInput,
    InvalidSet,
    BadToken,
    IndexOutOfRange,
    IdentityPauli,
    NonPositivePauli,
    SpectrumMismatch,
    WidthMismatch,
    ParseError,
    FeasibilityRefusal,
    SizeRefusal,
    NonRealEntry,
    InvalidArgument,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::invalid_argument {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::invalid_argument(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
    }
    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// A text-format error. `position` is a 0-based character offset into the parsed input.
class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string &message)
        : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + message),
          position_(position),
          detail_(message) {
    }
    std::size_t position() const {
        return position_;
    }
    /// The message without the kind and position prefix.
    const std::string &detail() const {
        return detail_;
    }

   private:
    std::size_t position_;
    std::string detail_;
};

}  // namespace tdepth

#endif
