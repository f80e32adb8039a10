#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace condense {

enum class ErrorCode {
  kSegmentationEmpty,
  kLexiconEmpty,
  kLexiconTooSmall,
  kEmptyCorpus,
  kVoteOutOfRange,
  kIndexOutOfRange,
  kInvalidConfig,
  kResourceFormat,
  kReportFormat,
};

std::string_view ToString(ErrorCode code);

// All library failures are reported through this exception; the code lets
// callers (the CLI in particular) map conditions to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

  // Degenerate-text conditions: the input is valid but too small to condense.
  bool IsDegenerateText() const {
    return code_ == ErrorCode::kSegmentationEmpty ||
           code_ == ErrorCode::kLexiconEmpty;
  }

 private:
  ErrorCode code_;
};

}  // namespace condense
