#include "heds/error.hpp"

namespace heds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownQuestion:
      return "unknown-question";
    case ErrorCode::kNotAChoiceQuestion:
      return "not-a-choice-question";
    case ErrorCode::kKindMismatch:
      return "kind-mismatch";
    case ErrorCode::kCriterionOutOfRange:
      return "criterion-out-of-range";
    case ErrorCode::kCriterionLimitExceeded:
      return "criterion-limit-exceeded";
    case ErrorCode::kSyntaxError:
      return "syntax-error";
    case ErrorCode::kUnsupportedSchemaVersion:
      return "unsupported-schema-version";
    case ErrorCode::kMalformedTemplate:
      return "malformed-template";
    case ErrorCode::kIncompleteCriterion:
      return "incomplete-criterion";
    case ErrorCode::kVersionMismatch:
      return "version-mismatch";
    case ErrorCode::kIo:
      return "io-error";
  }
  return "unknown";
}

SourcePosition position_of(std::string_view text, std::size_t offset) {
  SourcePosition pos;
  pos.offset = offset;
  const std::size_t end = offset < text.size() ? offset : text.size();
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     const std::optional<SourcePosition>& position) {
  std::string out(to_string(code));
  if (position) {
    out += " at line " + std::to_string(position->line) + ", column " +
           std::to_string(position->column);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::vector<std::string> paths,
             std::optional<SourcePosition> position)
    : std::runtime_error(decorate(code, message, position)),
      code_(code),
      paths_(std::move(paths)),
      position_(position) {}

}  // namespace heds
