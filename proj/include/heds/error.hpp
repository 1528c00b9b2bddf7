#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heds {

enum class ErrorCode {
  kUnknownQuestion,
  kNotAChoiceQuestion,
  kKindMismatch,
  kCriterionOutOfRange,
  kCriterionLimitExceeded,
  kSyntaxError,
  kUnsupportedSchemaVersion,
  kMalformedTemplate,
  kIncompleteCriterion,
  kVersionMismatch,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Line/column of a syntax error in the input text, 1-based.
struct SourcePosition {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePosition&) const = default;
};

/// Compute the position of a byte offset inside `text`.
SourcePosition position_of(std::string_view text, std::size_t offset);

/// The single exception type thrown by the library. `paths` carries the
/// question paths the failure is about (e.g. the missing paths of an
/// incomplete criterion block).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::string> paths = {},
        std::optional<SourcePosition> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& paths() const noexcept { return paths_; }
  const std::optional<SourcePosition>& position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::vector<std::string> paths_;
  std::optional<SourcePosition> position_;
};

}  // namespace heds
