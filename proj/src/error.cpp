#include "condense/error.hpp"

namespace condense {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSegmentationEmpty:
      return "segmentation empty";
    case ErrorCode::kLexiconEmpty:
      return "lexicon empty";
    case ErrorCode::kLexiconTooSmall:
      return "lexicon too small";
    case ErrorCode::kEmptyCorpus:
      return "empty corpus";
    case ErrorCode::kVoteOutOfRange:
      return "vote out of range";
    case ErrorCode::kIndexOutOfRange:
      return "index out of range";
    case ErrorCode::kInvalidConfig:
      return "invalid configuration";
    case ErrorCode::kResourceFormat:
      return "malformed resource file";
    case ErrorCode::kReportFormat:
      return "malformed report";
  }
  return "unknown error";
}

}  // namespace condense
