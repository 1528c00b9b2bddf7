#include "heds/document.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include <json.hpp>

#include "answer_json.hpp"
#include "heds/error.hpp"
#include "text_util.hpp"

namespace heds {

using nlohmann::ordered_json;

bool MultiChoiceAnswer::contains(std::string_view key) const {
  return std::find(options.begin(), options.end(), key) != options.end();
}

bool is_sentinel(const AnswerValue& value, Sentinel token) {
  const auto* s = std::get_if<SentinelAnswer>(&value);
  return s != nullptr && s->token == token;
}

const AnswerValue* CriterionBlock::find(std::string_view path) const {
  const auto it = answers.find(path);
  return it == answers.end() ? nullptr : &it->second;
}

const AnswerValue* Datasheet::find(const QuestionId& id) const {
  if (const auto& index = id.criterion_index()) {
    if (*index < 1 || *index > static_cast<int>(criteria_.size())) {
      return nullptr;
    }
    return criteria_[*index - 1].find(id.path());
  }
  const auto it = fixed_answers_.find(id.path());
  return it == fixed_answers_.end() ? nullptr : &it->second;
}

namespace {

[[noreturn]] void mismatch(const Question& q, const std::string& why) {
  throw Error(ErrorCode::kKindMismatch, "question " + q.id + ": " + why, {q.id});
}

void check_text(const Question& q, const std::string& text, std::string_view what) {
  if (!detail::is_valid_utf8(text)) {
    mismatch(q, std::string(what) + " is not valid UTF-8");
  }
}

std::optional<std::string> normalize_other(const Question& q, std::optional<std::string> other) {
  if (other && other->empty()) {
    return std::nullopt;
  }
  if (other) {
    check_text(q, *other, "other text");
  }
  return other;
}

AnswerValue sentinel_or_mismatch(const Question& q, Sentinel token) {
  if (!q.accepts(token)) {
    mismatch(q, "'" + std::string(token_of(token)) + "' is not accepted here");
  }
  return SentinelAnswer{token};
}

AnswerValue normalize_text(const Question& q, std::string content) {
  if (content.empty()) {
    mismatch(q, "empty text is not an answer; leave the question unanswered instead");
  }
  check_text(q, content, "answer text");
  if (const auto token = sentinel_from_token(content); token && q.accepts(*token)) {
    return SentinelAnswer{*token};
  }
  if (q.kind == QuestionKind::kIntegerText) {
    if (!detail::is_all_digits(content)) {
      mismatch(q, "expected a non-negative integer");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(content.data(), content.data() + content.size(), value);
    if (ec != std::errc() || ptr != content.data() + content.size()) {
      mismatch(q, "integer out of range");
    }
    return IntegerAnswer{value};
  }
  return TextAnswer{std::move(content)};
}

struct Normalizer {
  const Question& q;

  AnswerValue operator()(TextAnswer v) const {
    if (q.is_choice()) {
      mismatch(q, "expected a choice, got text");
    }
    return normalize_text(q, std::move(v.content));
  }

  AnswerValue operator()(IntegerAnswer v) const {
    if (q.kind != QuestionKind::kIntegerText) {
      mismatch(q, "expected " + std::string(to_string(q.kind)) + ", got an integer");
    }
    return v;
  }

  AnswerValue operator()(SentinelAnswer v) const {
    if (q.is_choice()) {
      mismatch(q, "expected a choice, got '" + std::string(token_of(v.token)) + "'");
    }
    return sentinel_or_mismatch(q, v.token);
  }

  AnswerValue operator()(SingleChoiceAnswer v) const {
    if (q.kind != QuestionKind::kSingleChoice) {
      mismatch(q, "expected " + std::string(to_string(q.kind)) + ", got a single choice");
    }
    if (q.find_option(v.option) == nullptr) {
      mismatch(q, "unknown option '" + v.option + "'");
    }
    v.other_text = normalize_other(q, std::move(v.other_text));
    return v;
  }

  AnswerValue operator()(MultiChoiceAnswer v) const {
    if (q.kind != QuestionKind::kMultiChoice) {
      mismatch(q, "expected " + std::string(to_string(q.kind)) + ", got a multiple choice");
    }
    if (v.options.empty()) {
      mismatch(q, "a multiple-choice answer selects at least one option");
    }
    std::set<std::string> seen;
    for (const auto& key : v.options) {
      if (q.find_option(key) == nullptr) {
        mismatch(q, "unknown option '" + key + "'");
      }
      if (!seen.insert(key).second) {
        mismatch(q, "option '" + key + "' selected twice");
      }
    }
    std::sort(v.options.begin(), v.options.end(), [&](const std::string& a, const std::string& b) {
      return q.option_index(a) < q.option_index(b);
    });
    v.other_text = normalize_other(q, std::move(v.other_text));
    return v;
  }
};

int checked_block(const std::vector<CriterionBlock>& criteria, const QuestionId& id) {
  const int index = *id.criterion_index();
  if (index < 1 || index > static_cast<int>(criteria.size())) {
    throw Error(ErrorCode::kCriterionOutOfRange,
                "criterion " + std::to_string(index) + " does not exist (datasheet has " +
                    std::to_string(criteria.size()) + ")",
                {id.path()});
  }
  return index - 1;
}

}  // namespace

AnswerValue normalize_answer(const Question& q, AnswerValue value) {
  return std::visit(Normalizer{q}, std::move(value));
}

AnswerValue answer_from_text(const Question& q, std::string_view text) {
  if (q.is_choice()) {
    mismatch(q, "expected a choice, got text");
  }
  return normalize_text(q, std::string(text));
}

Datasheet new_empty(const Schema& schema) {
  Datasheet d;
  d.schema_version_ = schema.version();
  d.criteria_.push_back(CriterionBlock{1, {}});
  return d;
}

Datasheet set_answer(Datasheet d, const Schema& schema, const QuestionId& id, AnswerValue value) {
  const auto& q = question(schema, id);
  auto normal = normalize_answer(q, std::move(value));
  if (id.criterion_index()) {
    const int block = checked_block(d.criteria_, id);
    d.criteria_[block].answers.insert_or_assign(id.path(), std::move(normal));
  } else {
    d.fixed_answers_.insert_or_assign(id.path(), std::move(normal));
  }
  return d;
}

Datasheet clear_answer(Datasheet d, const Schema& schema, const QuestionId& id) {
  question(schema, id);
  if (id.criterion_index()) {
    const int block = checked_block(d.criteria_, id);
    d.criteria_[block].answers.erase(id.path());
  } else {
    d.fixed_answers_.erase(id.path());
  }
  return d;
}

Datasheet add_criterion(Datasheet d, const Schema& schema) {
  if (static_cast<int>(d.criteria_.size()) >= schema.max_criteria()) {
    throw Error(ErrorCode::kCriterionLimitExceeded,
                "a datasheet holds at most " + std::to_string(schema.max_criteria()) +
                    " quality criteria");
  }
  d.criteria_.push_back(CriterionBlock{static_cast<int>(d.criteria_.size()) + 1, {}});
  return d;
}

Datasheet remove_criterion(Datasheet d, int index) {
  if (index < 1 || index > static_cast<int>(d.criteria_.size())) {
    throw Error(ErrorCode::kCriterionOutOfRange,
                "criterion " + std::to_string(index) + " does not exist");
  }
  d.criteria_.erase(d.criteria_.begin() + (index - 1));
  for (std::size_t i = 0; i < d.criteria_.size(); ++i) {
    d.criteria_[i].index = static_cast<int>(i) + 1;
  }
  return d;
}

Datasheet set_provenance(Datasheet d, std::optional<std::string> note) {
  if (note && !detail::is_valid_utf8(*note)) {
    throw Error(ErrorCode::kKindMismatch, "provenance note is not valid UTF-8");
  }
  d.provenance_ = std::move(note);
  return d;
}

// ---------------------------------------------------------------------------
// Canonical JSON

namespace detail {

ordered_json answer_json(const AnswerValue& value) {
  struct Encoder {
    ordered_json operator()(const TextAnswer& v) const { return v.content; }
    ordered_json operator()(const IntegerAnswer& v) const { return v.value; }
    ordered_json operator()(const SentinelAnswer& v) const {
      return std::string(token_of(v.token));
    }
    ordered_json operator()(const SingleChoiceAnswer& v) const {
      ordered_json out;
      out["option"] = v.option;
      if (v.other_text) {
        out["other_text"] = *v.other_text;
      }
      return out;
    }
    ordered_json operator()(const MultiChoiceAnswer& v) const {
      ordered_json out;
      out["options"] = v.options;
      if (v.other_text) {
        out["other_text"] = *v.other_text;
      }
      return out;
    }
  };
  return std::visit(Encoder{}, value);
}

}  // namespace detail

std::string answer_to_json(const AnswerValue& value) { return detail::answer_json(value).dump(); }

namespace {

[[noreturn]] void syntax(const std::string& message) {
  throw Error(ErrorCode::kSyntaxError, message);
}

std::optional<std::string> optional_other_text(const Question& q, const ordered_json& obj) {
  const auto it = obj.find("other_text");
  if (it == obj.end()) {
    return std::nullopt;
  }
  if (!it->is_string()) {
    mismatch(q, "other_text must be a string");
  }
  return it->get<std::string>();
}

void check_members(const Question& q, const ordered_json& obj,
                   std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      mismatch(q, "unexpected member '" + key + "'");
    }
  }
}

AnswerValue decode_answer(const Question& q, const ordered_json& j) {
  switch (q.kind) {
    case QuestionKind::kFreeText:
      if (!j.is_string()) {
        mismatch(q, "expected a string");
      }
      return normalize_text(q, j.get<std::string>());
    case QuestionKind::kIntegerText:
      if (j.is_number_unsigned()) {
        return IntegerAnswer{j.get<std::uint64_t>()};
      }
      if (j.is_string()) {
        return normalize_text(q, j.get<std::string>());
      }
      mismatch(q, "expected a non-negative integer or an accepted token");
    case QuestionKind::kSingleChoice: {
      if (!j.is_object() || !j.contains("option") || !j["option"].is_string()) {
        mismatch(q, "expected {\"option\": <key>}");
      }
      check_members(q, j, {"option", "other_text"});
      return normalize_answer(
          q, SingleChoiceAnswer{j["option"].get<std::string>(), optional_other_text(q, j)});
    }
    case QuestionKind::kMultiChoice: {
      if (!j.is_object() || !j.contains("options") || !j["options"].is_array()) {
        mismatch(q, "expected {\"options\": [<key>, ...]}");
      }
      check_members(q, j, {"options", "other_text"});
      MultiChoiceAnswer v;
      for (const auto& k : j["options"]) {
        if (!k.is_string()) {
          mismatch(q, "option keys must be strings");
        }
        v.options.push_back(k.get<std::string>());
      }
      v.other_text = optional_other_text(q, j);
      return normalize_answer(q, std::move(v));
    }
  }
  mismatch(q, "unsupported question kind");
}

AnswerMap decode_answers(const ordered_json& obj, const Schema& schema, bool criterion_scope,
                         const std::string& where) {
  if (!obj.is_object()) {
    syntax(where + " must be an object keyed by question path");
  }
  AnswerMap out;
  for (const auto& [path, value] : obj.items()) {
    const Question* q = schema.find(path);
    if (q == nullptr || is_criterion_path(path) != criterion_scope) {
      throw Error(ErrorCode::kUnknownQuestion,
                  "'" + path + "' is not a question path valid in " + where, {path});
    }
    out.insert_or_assign(path, decode_answer(*q, value));
  }
  return out;
}

}  // namespace

Datasheet parse_canonical(std::string_view input, const Schema& schema) {
  ordered_json root;
  try {
    root = ordered_json::parse(input.begin(), input.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::kSyntaxError, e.what(), {}, position_of(input, offset));
  }
  if (!root.is_object()) {
    syntax("a datasheet is a JSON object");
  }
  for (const auto& [key, _] : root.items()) {
    if (key != "schema_version" && key != "answers" && key != "criteria" && key != "provenance") {
      syntax("unknown top-level key '" + key + "'");
    }
  }
  if (!root.contains("schema_version") || !root["schema_version"].is_string()) {
    syntax("missing string member 'schema_version'");
  }
  const auto version = root["schema_version"].get<std::string>();
  if (version != schema.version()) {
    throw Error(ErrorCode::kUnsupportedSchemaVersion,
                "schema version '" + version + "' is not supported (expected '" +
                    schema.version() + "')");
  }
  if (!root.contains("answers")) {
    syntax("missing member 'answers'");
  }
  if (!root.contains("criteria") || !root["criteria"].is_array()) {
    syntax("missing array member 'criteria'");
  }

  Datasheet d;
  d.schema_version_ = version;
  d.fixed_answers_ = decode_answers(root["answers"], schema, false, "answers");

  const auto& blocks = root["criteria"];
  if (static_cast<int>(blocks.size()) > schema.max_criteria()) {
    throw Error(ErrorCode::kCriterionLimitExceeded,
                std::to_string(blocks.size()) + " criterion blocks; at most " +
                    std::to_string(schema.max_criteria()) + " are allowed");
  }
  int index = 1;
  for (const auto& block : blocks) {
    d.criteria_.push_back(CriterionBlock{
        index, decode_answers(block, schema, true, "criteria[" + std::to_string(index - 1) + "]")});
    ++index;
  }

  if (const auto it = root.find("provenance"); it != root.end() && !it->is_null()) {
    if (!it->is_string()) {
      syntax("'provenance' must be a string or null");
    }
    d.provenance_ = it->get<std::string>();
  }
  return d;
}

std::string serialize_canonical(const Datasheet& d) {
  ordered_json root;
  root["schema_version"] = d.schema_version();
  ordered_json answers = ordered_json::object();
  for (const auto& [path, value] : d.fixed_answers()) {
    answers[path] = detail::answer_json(value);
  }
  root["answers"] = std::move(answers);
  ordered_json criteria = ordered_json::array();
  for (const auto& block : d.criteria()) {
    ordered_json obj = ordered_json::object();
    for (const auto& [path, value] : block.answers) {
      obj[path] = detail::answer_json(value);
    }
    criteria.push_back(std::move(obj));
  }
  root["criteria"] = std::move(criteria);
  root["provenance"] = d.provenance() ? ordered_json(*d.provenance()) : ordered_json(nullptr);
  return root.dump(2) + "\n";
}

std::optional<std::string> peek_schema_version(std::string_view input) {
  const auto root = ordered_json::parse(input.begin(), input.end(), nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    return std::nullopt;
  }
  const auto it = root.find("schema_version");
  if (it == root.end() || !it->is_string()) {
    return std::nullopt;
  }
  return it->get<std::string>();
}

}  // namespace heds
