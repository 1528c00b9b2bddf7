#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "heds/question_id.hpp"
#include "heds/schema.hpp"

namespace heds {

struct TextAnswer {
  std::string content;
  bool operator==(const TextAnswer&) const = default;
};

struct IntegerAnswer {
  std::uint64_t value = 0;
  bool operator==(const IntegerAnswer&) const = default;
};

struct SingleChoiceAnswer {
  std::string option;
  std::optional<std::string> other_text;
  bool operator==(const SingleChoiceAnswer&) const = default;
};

struct MultiChoiceAnswer {
  /// Option keys in schema order once stored in a datasheet.
  std::vector<std::string> options;
  std::optional<std::string> other_text;

  bool contains(std::string_view key) const;
  bool operator==(const MultiChoiceAnswer&) const = default;
};

struct SentinelAnswer {
  Sentinel token = Sentinel::kNotApplicable;
  bool operator==(const SentinelAnswer&) const = default;
};

using AnswerValue =
    std::variant<TextAnswer, IntegerAnswer, SingleChoiceAnswer, MultiChoiceAnswer, SentinelAnswer>;

bool is_sentinel(const AnswerValue& value, Sentinel token);

using AnswerMap = std::map<std::string, AnswerValue, PathLess>;

struct CriterionBlock {
  int index = 1;
  AnswerMap answers;

  const AnswerValue* find(std::string_view path) const;
  bool operator==(const CriterionBlock&) const = default;
};

/// One datasheet: the answers for a single evaluation experiment. Values are
/// immutable; the free functions below return modified copies.
class Datasheet {
 public:
  const std::string& schema_version() const noexcept { return schema_version_; }
  const AnswerMap& fixed_answers() const noexcept { return fixed_answers_; }
  const std::vector<CriterionBlock>& criteria() const noexcept { return criteria_; }
  const std::optional<std::string>& provenance() const noexcept { return provenance_; }

  /// nullptr when unanswered or when the criterion block does not exist.
  const AnswerValue* find(const QuestionId& id) const;

  bool operator==(const Datasheet&) const = default;

 private:
  Datasheet() = default;

  std::string schema_version_{kSchemaVersion};
  AnswerMap fixed_answers_;
  std::vector<CriterionBlock> criteria_;
  std::optional<std::string> provenance_;

  friend Datasheet new_empty(const Schema& schema);
  friend Datasheet set_answer(Datasheet d, const Schema& schema, const QuestionId& id,
                              AnswerValue value);
  friend Datasheet clear_answer(Datasheet d, const Schema& schema, const QuestionId& id);
  friend Datasheet add_criterion(Datasheet d, const Schema& schema);
  friend Datasheet remove_criterion(Datasheet d, int index);
  friend Datasheet set_provenance(Datasheet d, std::optional<std::string> note);
  friend Datasheet parse_canonical(std::string_view input, const Schema& schema);
};

/// No answers and one empty criterion block.
Datasheet new_empty(const Schema& schema);

/// Checks the value against the question kind and stores it in normal form:
/// text equal to a sentinel the question accepts becomes that sentinel,
/// digit-only text on an integer question becomes an integer, multi-choice
/// keys are put in schema order, and an empty other_text is dropped.
/// Throws kUnknownQuestion, kKindMismatch or kCriterionOutOfRange.
Datasheet set_answer(Datasheet d, const Schema& schema, const QuestionId& id, AnswerValue value);

Datasheet clear_answer(Datasheet d, const Schema& schema, const QuestionId& id);

/// Throws kCriterionLimitExceeded at the schema's maximum.
Datasheet add_criterion(Datasheet d, const Schema& schema);

/// Removes block `index` and renumbers the remaining blocks contiguously.
Datasheet remove_criterion(Datasheet d, int index);

Datasheet set_provenance(Datasheet d, std::optional<std::string> note);

/// Normal form of `value` for `q`; throws kKindMismatch if it does not fit.
AnswerValue normalize_answer(const Question& q, AnswerValue value);

/// Interprets raw answer text typed by a person (Markdown import, wizard
/// input) for a text or integer question.
AnswerValue answer_from_text(const Question& q, std::string_view text);

/// Canonical `.heds.json` reader. Applies the structural checks of
/// set_answer; semantic rules are left to validate().
/// Throws kSyntaxError (with position), kUnknownQuestion, kKindMismatch,
/// kCriterionLimitExceeded or kUnsupportedSchemaVersion.
Datasheet parse_canonical(std::string_view input, const Schema& schema);

/// Deterministic canonical encoding, newline-terminated UTF-8.
std::string serialize_canonical(const Datasheet& d);

/// The canonical JSON encoding of a single answer (as a JSON text).
std::string answer_to_json(const AnswerValue& value);

/// Reads only the "schema_version" member; nullopt when the input is not a
/// JSON object carrying one.
std::optional<std::string> peek_schema_version(std::string_view input);

}  // namespace heds
