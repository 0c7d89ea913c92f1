/*
 * Copyright 2026 The topolab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TOPOLAB_ERROR_HPP
#define TOPOLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topolab/subset.hpp"

namespace topolab {

enum class ErrorCode {
  kBadPointCount,
  kBadSubset,
  kMissingEmptyOrFull,
  kNotUnionClosed,
  kNotIntersectionClosed,
  kEmptyCarrier,
  kDuplicatePoint,
  kUnknownLabel,
  kMissingAssignment,
  kUnknownCodomainPoint,
  kSpaceMismatch,
  kBoundExceeded,
  kUnknownTheorem,
  kUnknownTag,
  kMalformedDocument,
};

std::string_view error_code_name(ErrorCode code);

/// Input error raised by every validating entry point. `witness()` holds the
/// offending subsets when the violated invariant has one (for example the
/// pair whose union is missing from a candidate topology).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Subset> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<Subset>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<Subset> witness_;
};

}  // namespace topolab

#endif  // TOPOLAB_ERROR_HPP
