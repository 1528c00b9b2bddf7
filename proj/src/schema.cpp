#include "heds/schema.hpp"

#include <algorithm>
#include <set>

#include "heds/error.hpp"

namespace heds {

std::string_view to_string(QuestionKind kind) {
  switch (kind) {
    case QuestionKind::kFreeText:
      return "free-text";
    case QuestionKind::kIntegerText:
      return "integer-text";
    case QuestionKind::kSingleChoice:
      return "single-choice";
    case QuestionKind::kMultiChoice:
      return "multi-choice";
  }
  return "free-text";
}

std::string_view token_of(Sentinel sentinel) {
  switch (sentinel) {
    case Sentinel::kNotApplicable:
      return "N/A";
    case Sentinel::kContinuous:
      return "continuous";
    case Sentinel::kForPreregistration:
      return "for preregistration";
    case Sentinel::kNone:
      return "None";
  }
  return "N/A";
}

std::optional<Sentinel> sentinel_from_token(std::string_view token) {
  for (auto s : {Sentinel::kNotApplicable, Sentinel::kContinuous, Sentinel::kForPreregistration,
                 Sentinel::kNone}) {
    if (token_of(s) == token) {
      return s;
    }
  }
  return std::nullopt;
}

bool Question::accepts(Sentinel sentinel) const {
  return std::find(sentinels.begin(), sentinels.end(), sentinel) != sentinels.end();
}

const OptionDef* Question::find_option(std::string_view key) const {
  for (const auto& o : options) {
    if (o.key == key) {
      return &o;
    }
  }
  return nullptr;
}

const OptionDef* Question::find_option_by_label(std::string_view label) const {
  for (const auto& o : options) {
    if (o.label == label) {
      return &o;
    }
  }
  return nullptr;
}

int Question::option_index(std::string_view key) const {
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (options[i].key == key) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

namespace {

void check_part(const Part& part, std::set<std::string>& seen) {
  for (const auto& q : part.questions) {
    if (!is_well_formed_path(q.id) || part_of(q.id) != part.id) {
      throw std::logic_error("question " + q.id + " does not belong to part " +
                             std::to_string(part.id));
    }
    if (!seen.insert(q.id).second) {
      throw std::logic_error("duplicate question id " + q.id);
    }
    if (q.is_choice() ? q.options.size() < 2 : !q.options.empty()) {
      throw std::logic_error("question " + q.id + " has an option list inconsistent with its kind");
    }
    std::set<std::string> keys;
    for (const auto& o : q.options) {
      if (!keys.insert(o.key).second) {
        throw std::logic_error("duplicate option key " + o.key + " in " + q.id);
      }
    }
  }
}

}  // namespace

Schema::Schema(std::string version, std::vector<Part> parts, Part criterion_block,
               int max_criteria)
    : version_(std::move(version)),
      parts_(std::move(parts)),
      criterion_block_(std::move(criterion_block)),
      max_criteria_(max_criteria) {
  std::set<std::string> seen;
  for (const auto& p : parts_) {
    if (p.id == kCriterionPart) {
      throw std::logic_error("part 4 is reserved for the criterion block");
    }
    check_part(p, seen);
  }
  if (criterion_block_.id != kCriterionPart) {
    throw std::logic_error("criterion block must be part 4");
  }
  check_part(criterion_block_, seen);
  if (!std::is_sorted(parts_.begin(), parts_.end(),
                      [](const Part& a, const Part& b) { return a.id < b.id; })) {
    throw std::logic_error("parts must be in ascending order");
  }
}

std::span<const Part> Schema::parts_before_criteria() const {
  const auto it = std::find_if(parts_.begin(), parts_.end(),
                               [](const Part& p) { return p.id > kCriterionPart; });
  return {parts_.data(), static_cast<std::size_t>(it - parts_.begin())};
}

std::span<const Part> Schema::parts_after_criteria() const {
  const auto before = parts_before_criteria().size();
  return {parts_.data() + before, parts_.size() - before};
}

const Question* Schema::find(std::string_view path) const {
  if (!is_well_formed_path(path)) {
    return nullptr;
  }
  const int part = part_of(path);
  const auto lookup = [&](const Part& p) -> const Question* {
    for (const auto& q : p.questions) {
      if (q.id == path) {
        return &q;
      }
    }
    return nullptr;
  };
  if (part == kCriterionPart) {
    return lookup(criterion_block_);
  }
  for (const auto& p : parts_) {
    if (p.id == part) {
      return lookup(p);
    }
  }
  return nullptr;
}

std::size_t Schema::fixed_question_count() const {
  std::size_t n = 0;
  for (const auto& p : parts_) {
    n += p.questions.size();
  }
  return n;
}

const Question& question(const Schema& schema, std::string_view path) {
  if (const auto* q = schema.find(path)) {
    return *q;
  }
  throw Error(ErrorCode::kUnknownQuestion, "no question " + std::string(path) + " in the schema",
              {std::string(path)});
}

const Question& question(const Schema& schema, const QuestionId& id) {
  return question(schema, id.path());
}

const std::vector<OptionDef>& options_of(const Schema& schema, std::string_view path) {
  const auto& q = question(schema, path);
  if (!q.is_choice()) {
    throw Error(ErrorCode::kNotAChoiceQuestion,
                "question " + q.id + " is " + std::string(to_string(q.kind)) +
                    ", not a choice question",
                {q.id});
  }
  return q.options;
}

}  // namespace heds
