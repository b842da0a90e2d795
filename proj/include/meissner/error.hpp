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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace meissner {

enum class ErrorCode {
  CollinearInput,
  BadDualArc,
  EvenOrTooSmallN,
  GenerationFailed,
  DegenerateInput,
  NotATree,
  LiftImaginary,
  NotStandard,
  NotInvolutive,
  MetricEmbeddingViolation,
  SelfDualEdge,
  AmbiguousBottom,
  BadMask,
  NotWatertight,
  IoError,
  ParseError,
};

std::string_view errorName(ErrorCode code);

/// Every failure raised by the library. The message names the witness
/// (indices, residuals) whenever one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(errorName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace meissner
