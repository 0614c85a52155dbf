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

#include "error.hpp"

namespace mckay {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAMultiple: return "NotAMultiple";
    case ErrorCode::UnsupportedRadicand: return "UnsupportedRadicand";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotAvailable: return "NotAvailable";
    case ErrorCode::OrthogonalityFailure: return "OrthogonalityFailure";
    case ErrorCode::NoSuitablePrime: return "NoSuitablePrime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace mckay
