// Copyright 2026 The Meissner Authors.
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

#include "meissner/error.hpp"

namespace meissner {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::CollinearInput: return "CollinearInput";
    case ErrorCode::BadDualArc: return "BadDualArc";
    case ErrorCode::EvenOrTooSmallN: return "EvenOrTooSmallN";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::LiftImaginary: return "LiftImaginary";
    case ErrorCode::NotStandard: return "NotStandard";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::MetricEmbeddingViolation: return "MetricEmbeddingViolation";
    case ErrorCode::SelfDualEdge: return "SelfDualEdge";
    case ErrorCode::AmbiguousBottom: return "AmbiguousBottom";
    case ErrorCode::BadMask: return "BadMask";
    case ErrorCode::NotWatertight: return "NotWatertight";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace meissner
