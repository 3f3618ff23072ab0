// ctbn/error.h

// Copyright 2026  The ctbn-aurec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CTBN_ERROR_H_
#define CTBN_ERROR_H_

#include <stdexcept>
#include <string>

namespace ctbn {

enum class ErrorCode {
  kNonSquare,
  kNegativeOffDiagonal,
  kRowSumViolation,
  kOutOfRange,
  kStateSpaceTooLarge,
  kAbsorbingState,
  kUnknownVariable,
  kIncompleteData,
  kMalformedTrajectory,
  kEmptyData,
  kEvidenceGap,
  kZeroLikelihoodEvidence,
  kNoCodec,
  kUnknownPhoneme,
  kOverlappingSegments,
  kNegativeDuration,
  kUnknownAuName,
  kLengthMismatch,
  kParseError,
  kIoError,
  kInvalidArgument,
};

const char *error_code_name(ErrorCode code);

// All library failures surface as CtbnError; the code is stable and intended
// for machine consumption (the CLI prints it in its single-line error record).
class CtbnError : public std::runtime_error {
 public:
  CtbnError(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string &msg) {
  throw CtbnError(code, msg);
}

}  // namespace ctbn

#endif  // CTBN_ERROR_H_
