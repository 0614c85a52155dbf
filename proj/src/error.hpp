/*
  Copyright 2026 The mckay Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef MCKAY_ERROR_HPP
#define MCKAY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mckay {

enum class ErrorCode {
  ConductorMismatch,
  DivisionByZero,
  NotAMultiple,
  UnsupportedRadicand,
  SingularMatrix,
  OrderBoundExceeded,
  InvalidParameter,
  NotAvailable,
  OrthogonalityFailure,
  NoSuitablePrime,
  DimensionMismatch,
  NonIntegralMultiplicity,
  NotSymmetric,
  InvalidSpec,
  Internal,
};

const char* errorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the C
// API maps them onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(errorCodeName(code)) + ": " + what);
}

}  // namespace mckay

#endif
