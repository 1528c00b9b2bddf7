#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heds/document.hpp"
#include "heds/question_id.hpp"
#include "heds/schema.hpp"

namespace heds {

enum class Severity { kError, kWarning, kInfo };

std::string_view to_string(Severity severity);

/// Rule identifiers.
namespace rules {
inline constexpr std::string_view kRequired = "R-REQ";
inline constexpr std::string_view kInteger = "R-INT";
inline constexpr std::string_view kScaleSize = "R-SCALE-SIZE";
inline constexpr std::string_view kScaleValues = "R-SCALE-VALUES";
inline constexpr std::string_view kInstrumentGate = "R-INSTRUMENT-GATE";
inline constexpr std::string_view kEvaluatorPairs = "R-EVAL-PAIRS";
inline constexpr std::string_view kCriterionCount = "R-CRIT-COUNT";
inline constexpr std::string_view kLanguage = "R-LANG";
inline constexpr std::string_view kTaskInputOutput = "R-TASK-IO";
inline constexpr std::string_view kOtherText = "R-OTHER-TEXT";
inline constexpr std::string_view kLink = "R-LINK";
inline constexpr std::string_view kPreregistration = "R-PREREG";
}  // namespace rules

struct RuleInfo {
  std::string_view id;
  std::string_view description;
  Severity severity;
};

/// The fixed rule catalogue, in documentation order.
const std::vector<RuleInfo>& rule_catalogue();

struct Diagnostic {
  std::string rule;
  Severity severity = Severity::kError;
  /// In path order; never empty.
  std::vector<QuestionId> at;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

struct ValidationReport {
  /// Sorted by first path, then rule id.
  std::vector<Diagnostic> diagnostics;
  int error_count = 0;
  int warning_count = 0;
  int info_count = 0;

  bool ok() const { return error_count == 0; }
  bool operator==(const ValidationReport&) const = default;
};

/// Runs every rule of the catalogue. Pure; findings are data.
ValidationReport validate(const Datasheet& d, const Schema& schema);

/// `{"diagnostics":[{"rule","severity","at","message"}],"errors":n,"warnings":n}`
std::string report_to_json(const ValidationReport& report);

/// One line per diagnostic: `<severity> <rule> <paths>: <message>`.
std::string report_to_text(const ValidationReport& report);

/// Number of values described by a 4.3.4 answer: a dash range "a-b"/"a--b"
/// counts b-a+1, otherwise the comma-separated non-empty items are counted.
std::size_t scale_value_count(std::string_view values);

/// Case-insensitive lookup in the ISO 639-1 English name table.
bool is_iso639_language_name(std::string_view name);

/// Splits "English, Hindi and Herero" into names; returns the ones that are
/// not ISO 639-1 language names.
std::vector<std::string> unknown_language_names(std::string_view answer);

}  // namespace heds
