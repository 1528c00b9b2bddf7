#include <json.hpp>

#include "heds/schema.hpp"

namespace heds {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json question_json(const Question& q) {
  ordered_json out;
  out["id"] = q.id;
  out["prompt"] = q.prompt;
  out["kind"] = std::string(to_string(q.kind));
  ordered_json options = ordered_json::array();
  for (const auto& o : q.options) {
    options.push_back({{"key", o.key}, {"label", o.label}, {"requires_text", o.requires_text}});
  }
  out["options"] = std::move(options);
  out["allows_na"] = q.allows_na();
  ordered_json sentinels = ordered_json::array();
  for (auto s : q.sentinels) {
    sentinels.push_back(std::string(token_of(s)));
  }
  out["sentinels"] = std::move(sentinels);
  out["help"] = q.help;
  return out;
}

ordered_json part_json(const Part& p) {
  ordered_json questions = ordered_json::array();
  for (const auto& q : p.questions) {
    questions.push_back(question_json(q));
  }
  return {{"id", p.id}, {"title", p.title}, {"questions", std::move(questions)}};
}

}  // namespace

std::string schema_to_json(const Schema& schema) {
  ordered_json out;
  out["schema_version"] = schema.version();
  ordered_json parts = ordered_json::array();
  for (const auto& p : schema.parts()) {
    parts.push_back(part_json(p));
  }
  out["parts"] = std::move(parts);
  out["criterion_block"] = part_json(schema.criterion_block());
  out["max_criteria"] = schema.max_criteria();
  return out.dump(2) + "\n";
}

}  // namespace heds
