// Copyright 2026 The lulc Authors
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

#ifndef LULC_ERROR_H
#define LULC_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace lulc {

/// Domain failure categories. The names double as the machine-readable
/// `error` field emitted by the CLI.
enum class ErrorCode {
    InvalidArgument,
    SizeMismatch,
    ParseError,
    NonCommuting,
    DependentGenerators,
    NonHermitianSign,
    TooLarge,
    NotMaximal,
    NotNormalized,
    SupportNotAffine,
    AmplitudeNotFourthRootTimesConstant,
    InconsistentQuadraticFit,
    InvalidGroup,
    NotUnitary,
    NotSemiClifford,
    NotStabilizerState,
    NotQuadratic,
    InternalInconsistency,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }

    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Raised by `validate` when generators i and j anticommute (0-based).
class NonCommutingError : public Error {
   public:
    NonCommutingError(size_t i, size_t j)
        : Error(
              ErrorCode::NonCommuting,
              "generators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute"),
          first(i),
          second(j) {
    }
    size_t first;
    size_t second;
};

}  // namespace lulc

#endif
