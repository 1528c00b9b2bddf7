#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heds/document.hpp"
#include "heds/question_id.hpp"
#include "heds/schema.hpp"

namespace heds {

enum class QualityType { kCorrectness, kGoodness, kFeatures };
enum class OutputAspect { kForm, kContent, kBoth };
enum class FrameOfReference { kOwnRight, kRelativeToInput, kExternalFrame };
enum class Judgment { kObjective, kSubjective };
enum class Presentation { kAbsolute, kRelative };
enum class Scope { kIntrinsic, kExtrinsic };

/// Criterion properties (4.1.1-4.1.3) followed by evaluation-mode properties
/// (4.2.1-4.2.3) of one quality criterion.
struct ComparabilityKey {
  QualityType quality_type = QualityType::kCorrectness;
  OutputAspect aspect = OutputAspect::kForm;
  FrameOfReference frame = FrameOfReference::kOwnRight;
  Judgment judgment = Judgment::kObjective;
  Presentation presentation = Presentation::kAbsolute;
  Scope scope = Scope::kIntrinsic;

  auto operator<=>(const ComparabilityKey&) const = default;
};

/// Option keys of the six answers, e.g.
/// "(correctness, form, own-right, subjective, absolute, intrinsic)".
std::string to_string(const ComparabilityKey& key);

/// Field names accepted by key_field: quality-type, aspect, frame,
/// judgment, presentation, scope.
const std::vector<std::string_view>& key_field_names();

/// Option key of one field, e.g. key_field(k, "scope") == "extrinsic";
/// nullopt for an unknown field name.
std::optional<std::string_view> key_field(const ComparabilityKey& key, std::string_view field);

/// Every one of the 3*3*3*2*2*2 = 216 keys, in lexicographic enum order.
std::vector<ComparabilityKey> all_comparability_keys();

/// Throws kIncompleteCriterion listing the unanswered paths among
/// 4.1.1-4.2.3.
ComparabilityKey criterion_key(const CriterionBlock& block);

enum class ComparabilityLevel { kSameCriterion, kSameAspect, kModeMatchOnly, kUnrelated };

std::string_view to_string(ComparabilityLevel level);

/// All six fields equal -> same-criterion; else first three -> same-aspect;
/// else last three -> mode-match-only; else unrelated.
ComparabilityLevel classify(const ComparabilityKey& a, const ComparabilityKey& b);

/// True when the criterion properties (first three fields) agree.
bool same_aspect_of_quality(const ComparabilityKey& a, const ComparabilityKey& b);

/// Case-insensitive, whitespace-trimmed exact comparison of two 4.3.1 names.
bool names_match(std::string_view a, std::string_view b);

struct CriterionPair {
  int index_a = 0;
  int index_b = 0;
  ComparabilityLevel level = ComparabilityLevel::kUnrelated;
  bool name_match = false;

  bool operator==(const CriterionPair&) const = default;
};

struct ComparabilityReport {
  /// Row-major over (criteria of a) x (criteria of b).
  std::vector<CriterionPair> pairs;

  bool operator==(const ComparabilityReport&) const = default;
};

ComparabilityReport comparability(const Datasheet& a, const Datasheet& b);

std::string comparability_to_text(const ComparabilityReport& report);
std::string comparability_to_json(const ComparabilityReport& report);

struct DiffEntry {
  QuestionId id;
  std::optional<AnswerValue> in_a;
  std::optional<AnswerValue> in_b;

  bool operator==(const DiffEntry&) const = default;
};

/// Paths whose answers differ, in path order; blocks aligned by index.
/// Throws kVersionMismatch when schema versions differ.
std::vector<DiffEntry> diff(const Datasheet& a, const Datasheet& b, const Schema& schema);

/// One line per entry: `<id>: <a> -> <b>` with answers in canonical JSON and
/// `(absent)` for unanswered.
std::string diff_to_text(const std::vector<DiffEntry>& entries);
std::string diff_to_json(const std::vector<DiffEntry>& entries);

// ---------------------------------------------------------------------------
// Registry: a directory of `.heds.json` files.

inline constexpr std::string_view kCanonicalExtension = ".heds.json";

struct RegistryEntry {
  std::string file;  // file name relative to the registry directory
  std::string paper_link;
  std::vector<std::string> criterion_names;
  /// One per criterion block; nullopt for blocks missing key answers.
  std::vector<std::optional<ComparabilityKey>> keys;
  int error_count = 0;

  bool operator==(const RegistryEntry&) const = default;
};

struct RegistryFailure {
  std::string file;
  std::string error;

  bool operator==(const RegistryFailure&) const = default;
};

struct RegistryIndex {
  std::vector<RegistryEntry> entries;  // sorted by file
  std::vector<RegistryFailure> failures;  // sorted by file

  bool operator==(const RegistryIndex&) const = default;
};

/// Scans `directory` (non-recursively) for `.heds.json` files. Per-file
/// errors are recorded as failures; a missing directory throws kIo.
RegistryIndex build_index(const std::filesystem::path& directory, const Schema& schema);

/// Entries having at least one criterion whose key satisfies `pred`.
template <typename Pred>
std::vector<RegistryEntry> query_index(const RegistryIndex& index, Pred pred) {
  std::vector<RegistryEntry> out;
  for (const auto& e : index.entries) {
    for (const auto& k : e.keys) {
      if (k && pred(*k)) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

std::string index_to_json(const RegistryIndex& index);
std::string index_to_markdown(const RegistryIndex& index);

}  // namespace heds
