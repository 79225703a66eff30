//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#include "molga/error.h"

namespace molga {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kValenceViolation:
      return "ValenceViolation";
    case ErrorCode::kUnsupportedFeature:
      return "UnsupportedFeature";
    case ErrorCode::kKekulizationFailure:
      return "KekulizationFailure";
    case ErrorCode::kInvalidMolecule:
      return "InvalidMolecule";
    case ErrorCode::kNoFreeValence:
      return "NoFreeValence";
    case ErrorCode::kEmptyPopulation:
      return "EmptyPopulation";
    case ErrorCode::kEmptyReference:
      return "EmptyReference";
    case ErrorCode::kBudgetExhausted:
      return "BudgetExhausted";
    case ErrorCode::kEmptyHistory:
      return "EmptyHistory";
    case ErrorCode::kEmptyFingerprint:
      return "EmptyFingerprint";
    case ErrorCode::kOracleFailure:
      return "OracleFailure";
    case ErrorCode::kConfigError:
      return "ConfigError";
  }
  return "Unknown";
}

}  // namespace molga
