//
// molga - genetic algorithms for molecular graphs
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGA_ERROR_H_
#define MOLGA_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace molga {

enum class ErrorCode {
  kSyntaxError,
  kValenceViolation,
  kUnsupportedFeature,
  kKekulizationFailure,
  kInvalidMolecule,
  kNoFreeValence,
  kEmptyPopulation,
  kEmptyReference,
  kBudgetExhausted,
  kEmptyHistory,
  kEmptyFingerprint,
  kOracleFailure,
  kConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parser failures carry the byte offset of the offending character.
class SmilesError : public Error {
 public:
  SmilesError(ErrorCode code, std::size_t offset, const std::string &what)
      : Error(code, what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace molga

#endif  // MOLGA_ERROR_H_
