// Copyright 2026 The triqubit Authors
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

#include <string_view>

#include "triqubit/error.h"
#include "triqubit/labels.h"

namespace triqubit {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::NotDensityLike: return "NotDensityLike";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::BadRank: return "BadRank";
        case ErrorCode::SizeTooSmall: return "SizeTooSmall";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::BadN: return "BadN";
        case ErrorCode::BadCurveId: return "BadCurveId";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadConfig: return "BadConfig";
        case ErrorCode::SinkFailure: return "SinkFailure";
    }
    return "Unknown";
}

std::optional<Qubit> parse_qubit(std::string_view s) {
    for (Qubit q : kQubits) {
        if (name_of(q) == s) return q;
    }
    return std::nullopt;
}

std::optional<Pair> parse_pair(std::string_view s) {
    for (Pair p : kPairs) {
        if (name_of(p) == s) return p;
    }
    return std::nullopt;
}

}  // namespace triqubit
