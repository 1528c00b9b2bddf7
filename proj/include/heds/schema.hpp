#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heds/question_id.hpp"

namespace heds {

enum class QuestionKind { kFreeText, kIntegerText, kSingleChoice, kMultiChoice };

std::string_view to_string(QuestionKind kind);

/// Literal answers the form asks for in place of real content.
enum class Sentinel { kNotApplicable, kContinuous, kForPreregistration, kNone };

/// Exact, case-sensitive token: "N/A", "continuous", "for preregistration", "None".
std::string_view token_of(Sentinel sentinel);
std::optional<Sentinel> sentinel_from_token(std::string_view token);

struct OptionDef {
  std::string key;
  std::string label;
  bool requires_text = false;

  bool operator==(const OptionDef&) const = default;
};

struct Question {
  std::string id;
  std::string prompt;
  QuestionKind kind = QuestionKind::kFreeText;
  std::vector<OptionDef> options;
  /// Tokens accepted in place of text/integer content, in display order.
  std::vector<Sentinel> sentinels;
  std::string help;

  bool is_choice() const {
    return kind == QuestionKind::kSingleChoice || kind == QuestionKind::kMultiChoice;
  }
  bool allows_na() const { return accepts(Sentinel::kNotApplicable); }
  bool accepts(Sentinel sentinel) const;
  const OptionDef* find_option(std::string_view key) const;
  const OptionDef* find_option_by_label(std::string_view label) const;
  /// Index of `key` in `options`, or -1.
  int option_index(std::string_view key) const;

  bool operator==(const Question&) const = default;
};

struct Part {
  int id = 0;
  std::string title;
  std::vector<Question> questions;

  bool operator==(const Part&) const = default;
};

class Schema {
 public:
  Schema(std::string version, std::vector<Part> parts, Part criterion_block, int max_criteria);

  const std::string& version() const noexcept { return version_; }
  /// Fixed parts in display order (1, 2, 3, 5).
  const std::vector<Part>& parts() const noexcept { return parts_; }
  const Part& criterion_block() const noexcept { return criterion_block_; }
  int max_criteria() const noexcept { return max_criteria_; }

  /// Parts 1-3 (before the criterion blocks).
  std::span<const Part> parts_before_criteria() const;
  /// Part 5 (after the criterion blocks).
  std::span<const Part> parts_after_criteria() const;

  /// nullptr when the path does not exist.
  const Question* find(std::string_view path) const;

  std::size_t fixed_question_count() const;
  std::size_t criterion_question_count() const { return criterion_block_.questions.size(); }

  bool operator==(const Schema&) const = default;

 private:
  std::string version_;
  std::vector<Part> parts_;
  Part criterion_block_;
  int max_criteria_;
};

inline constexpr std::string_view kSchemaVersion = "1.0";
inline constexpr int kMaxCriteria = 10;

/// The HEDS 1.0 question tree. Built once; every call returns the same object.
const Schema& builtin_schema();

/// Throws kUnknownQuestion carrying the requested path.
const Question& question(const Schema& schema, std::string_view path);
const Question& question(const Schema& schema, const QuestionId& id);

/// Throws kUnknownQuestion or kNotAChoiceQuestion.
const std::vector<OptionDef>& options_of(const Schema& schema, std::string_view path);

/// JSON export used by the HTTP API (`GET /schema`).
std::string schema_to_json(const Schema& schema);

}  // namespace heds
