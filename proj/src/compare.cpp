#include "heds/compare.hpp"

#include <array>

#include <json.hpp>

#include "answer_json.hpp"
#include "heds/error.hpp"
#include "text_util.hpp"

namespace heds {

namespace {

constexpr std::array<std::string_view, 3> kQualityTypeKeys = {"correctness", "goodness",
                                                               "features"};
constexpr std::array<std::string_view, 3> kAspectKeys = {"form", "content", "both"};
constexpr std::array<std::string_view, 3> kFrameKeys = {"own-right", "relative-to-input",
                                                        "external-frame"};
constexpr std::array<std::string_view, 2> kJudgmentKeys = {"objective", "subjective"};
constexpr std::array<std::string_view, 2> kPresentationKeys = {"absolute", "relative"};
constexpr std::array<std::string_view, 2> kScopeKeys = {"intrinsic", "extrinsic"};

template <std::size_t N>
std::optional<int> index_in(const std::array<std::string_view, N>& keys, std::string_view key) {
  for (std::size_t i = 0; i < N; ++i) {
    if (keys[i] == key) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(const ComparabilityKey& key) {
  return "(" + std::string(kQualityTypeKeys[static_cast<int>(key.quality_type)]) + ", " +
         std::string(kAspectKeys[static_cast<int>(key.aspect)]) + ", " +
         std::string(kFrameKeys[static_cast<int>(key.frame)]) + ", " +
         std::string(kJudgmentKeys[static_cast<int>(key.judgment)]) + ", " +
         std::string(kPresentationKeys[static_cast<int>(key.presentation)]) + ", " +
         std::string(kScopeKeys[static_cast<int>(key.scope)]) + ")";
}

const std::vector<std::string_view>& key_field_names() {
  static const std::vector<std::string_view> names = {"quality-type", "aspect",       "frame",
                                                      "judgment",     "presentation", "scope"};
  return names;
}

std::optional<std::string_view> key_field(const ComparabilityKey& key, std::string_view field) {
  if (field == "quality-type") return kQualityTypeKeys[static_cast<int>(key.quality_type)];
  if (field == "aspect") return kAspectKeys[static_cast<int>(key.aspect)];
  if (field == "frame") return kFrameKeys[static_cast<int>(key.frame)];
  if (field == "judgment") return kJudgmentKeys[static_cast<int>(key.judgment)];
  if (field == "presentation") return kPresentationKeys[static_cast<int>(key.presentation)];
  if (field == "scope") return kScopeKeys[static_cast<int>(key.scope)];
  return std::nullopt;
}

std::vector<ComparabilityKey> all_comparability_keys() {
  std::vector<ComparabilityKey> out;
  for (int q = 0; q < 3; ++q)
    for (int a = 0; a < 3; ++a)
      for (int f = 0; f < 3; ++f)
        for (int j = 0; j < 2; ++j)
          for (int p = 0; p < 2; ++p)
            for (int s = 0; s < 2; ++s)
              out.push_back({static_cast<QualityType>(q), static_cast<OutputAspect>(a),
                             static_cast<FrameOfReference>(f), static_cast<Judgment>(j),
                             static_cast<Presentation>(p), static_cast<Scope>(s)});
  return out;
}

ComparabilityKey criterion_key(const CriterionBlock& block) {
  std::vector<std::string> missing;
  const auto choice = [&](std::string_view path) -> std::string {
    const auto* v = block.find(path);
    const auto* s = v ? std::get_if<SingleChoiceAnswer>(v) : nullptr;
    if (s == nullptr) {
      missing.emplace_back(path);
      return {};
    }
    return s->option;
  };
  const auto q = index_in(kQualityTypeKeys, choice("4.1.1"));
  const auto a = index_in(kAspectKeys, choice("4.1.2"));
  const auto f = index_in(kFrameKeys, choice("4.1.3"));
  const auto j = index_in(kJudgmentKeys, choice("4.2.1"));
  const auto p = index_in(kPresentationKeys, choice("4.2.2"));
  const auto s = index_in(kScopeKeys, choice("4.2.3"));
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) {
      list += (list.empty() ? "" : ", ") + m;
    }
    throw Error(ErrorCode::kIncompleteCriterion,
                "quality criterion " + std::to_string(block.index) + " is missing " + list,
                missing);
  }
  return ComparabilityKey{static_cast<QualityType>(*q), static_cast<OutputAspect>(*a),
                          static_cast<FrameOfReference>(*f), static_cast<Judgment>(*j),
                          static_cast<Presentation>(*p), static_cast<Scope>(*s)};
}

std::string_view to_string(ComparabilityLevel level) {
  switch (level) {
    case ComparabilityLevel::kSameCriterion:
      return "same-criterion";
    case ComparabilityLevel::kSameAspect:
      return "same-aspect";
    case ComparabilityLevel::kModeMatchOnly:
      return "mode-match-only";
    case ComparabilityLevel::kUnrelated:
      return "unrelated";
  }
  return "unrelated";
}

bool same_aspect_of_quality(const ComparabilityKey& a, const ComparabilityKey& b) {
  return a.quality_type == b.quality_type && a.aspect == b.aspect && a.frame == b.frame;
}

ComparabilityLevel classify(const ComparabilityKey& a, const ComparabilityKey& b) {
  const bool criterion = same_aspect_of_quality(a, b);
  const bool mode =
      a.judgment == b.judgment && a.presentation == b.presentation && a.scope == b.scope;
  if (criterion && mode) {
    return ComparabilityLevel::kSameCriterion;
  }
  if (criterion) {
    return ComparabilityLevel::kSameAspect;
  }
  if (mode) {
    return ComparabilityLevel::kModeMatchOnly;
  }
  return ComparabilityLevel::kUnrelated;
}

bool names_match(std::string_view a, std::string_view b) {
  return detail::to_lower(detail::trim(a)) == detail::to_lower(detail::trim(b));
}

namespace {

std::optional<std::string> criterion_name(const CriterionBlock& block) {
  const auto* v = block.find("4.3.1");
  if (v == nullptr) {
    return std::nullopt;
  }
  if (const auto* t = std::get_if<TextAnswer>(v)) {
    return t->content;
  }
  return std::nullopt;
}

}  // namespace

ComparabilityReport comparability(const Datasheet& a, const Datasheet& b) {
  std::vector<ComparabilityKey> keys_b;
  for (const auto& block : b.criteria()) {
    keys_b.push_back(criterion_key(block));
  }
  ComparabilityReport report;
  for (const auto& block_a : a.criteria()) {
    const auto key_a = criterion_key(block_a);
    const auto name_a = criterion_name(block_a);
    for (std::size_t j = 0; j < b.criteria().size(); ++j) {
      const auto& block_b = b.criteria()[j];
      const auto name_b = criterion_name(block_b);
      report.pairs.push_back(CriterionPair{block_a.index, block_b.index,
                                           classify(key_a, keys_b[j]),
                                           name_a && name_b && names_match(*name_a, *name_b)});
    }
  }
  return report;
}

std::string comparability_to_text(const ComparabilityReport& report) {
  std::string out;
  for (const auto& p : report.pairs) {
    out += "a." + std::to_string(p.index_a) + " b." + std::to_string(p.index_b) + " " +
           std::string(to_string(p.level)) + (p.name_match ? " name-match" : "") + "\n";
  }
  return out;
}

std::string comparability_to_json(const ComparabilityReport& report) {
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({{"criterion_a", p.index_a},
                     {"criterion_b", p.index_b},
                     {"level", std::string(to_string(p.level))},
                     {"name_match", p.name_match}});
  }
  nlohmann::ordered_json out;
  out["pairs"] = std::move(pairs);
  return out.dump(2) + "\n";
}

std::vector<DiffEntry> diff(const Datasheet& a, const Datasheet& b, const Schema& schema) {
  if (a.schema_version() != b.schema_version()) {
    throw Error(ErrorCode::kVersionMismatch, "cannot diff schema version '" + a.schema_version() +
                                                 "' against '" + b.schema_version() + "'");
  }
  std::vector<DiffEntry> out;
  const auto compare = [&](const QuestionId& id, const AnswerValue* va, const AnswerValue* vb) {
    if ((va == nullptr) != (vb == nullptr) || (va && *va != *vb)) {
      out.push_back(DiffEntry{id, va ? std::optional(*va) : std::nullopt,
                              vb ? std::optional(*vb) : std::nullopt});
    }
  };
  const auto fixed = [&](const Part& part) {
    for (const auto& q : part.questions) {
      const QuestionId id(q.id);
      compare(id, a.find(id), b.find(id));
    }
  };
  for (const auto& part : schema.parts_before_criteria()) {
    fixed(part);
  }
  const std::size_t blocks = std::max(a.criteria().size(), b.criteria().size());
  for (std::size_t i = 0; i < blocks; ++i) {
    for (const auto& q : schema.criterion_block().questions) {
      const QuestionId id(q.id, static_cast<int>(i) + 1);
      compare(id, a.find(id), b.find(id));
    }
  }
  for (const auto& part : schema.parts_after_criteria()) {
    fixed(part);
  }
  return out;
}

namespace {

std::string side_text(const std::optional<AnswerValue>& v) {
  return v ? answer_to_json(*v) : std::string("(absent)");
}

}  // namespace

std::string diff_to_text(const std::vector<DiffEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.id.to_string() + ": " + side_text(e.in_a) + " -> " + side_text(e.in_b) + "\n";
  }
  return out;
}

std::string diff_to_json(const std::vector<DiffEntry>& entries) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    arr.push_back({{"at", e.id.to_string()},
                   {"a", e.in_a ? detail::answer_json(*e.in_a) : nlohmann::ordered_json(nullptr)},
                   {"b", e.in_b ? detail::answer_json(*e.in_b) : nlohmann::ordered_json(nullptr)}});
  }
  nlohmann::ordered_json out;
  out["differences"] = std::move(arr);
  return out.dump(2) + "\n";
}

}  // namespace heds
