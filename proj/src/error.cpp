// Copyright 2026 The slocc4 Authors
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

#include "slocc/error.hpp"

namespace slocc {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::SingularOperator:
            return "SingularOperator";
        case ErrorCode::ZeroState:
            return "ZeroState";
        case ErrorCode::AmbiguousClassification:
            return "AmbiguousClassification";
        case ErrorCode::IdenticallyZero:
            return "IdenticallyZero";
        case ErrorCode::DegenerateSpan:
            return "DegenerateSpan";
        case ErrorCode::GenericTypeUnstable:
            return "GenericTypeUnstable";
        case ErrorCode::NumericalBreakdown:
            return "NumericalBreakdown";
        case ErrorCode::InternalContradiction:
            return "InternalContradiction";
        case ErrorCode::ConstraintViolation:
            return "ConstraintViolation";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

}  // namespace slocc
