#include "heds/validate.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include <json.hpp>

#include "text_util.hpp"

namespace heds {

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kInfo:
      return "info";
  }
  return "error";
}

const std::vector<RuleInfo>& rule_catalogue() {
  static const std::vector<RuleInfo> catalogue = {
      {rules::kRequired,
       "Every question is answered; questions that accept 'N/A' are satisfied by it.",
       Severity::kError},
      {rules::kInteger, "Questions 3.1.1 and 3.2.1 are positive integers.", Severity::kError},
      {rules::kScaleSize, "Question 4.3.3 is an integer >= 2, 'continuous' or 'N/A'.",
       Severity::kError},
      {rules::kScaleValues,
       "Question 4.3.4 lists (or gives a range of) exactly as many values as 4.3.3 states, and "
       "is 'N/A' exactly when 4.3.3 is.",
       Severity::kError},
      {rules::kInstrumentGate,
       "No rating instrument (4.3.3 'N/A', 4.3.5 'N/A (there is no rating instrument)') goes "
       "with a task description in 4.3.6; an instrument goes with 4.3.6 'N/A'.",
       Severity::kError},
      {rules::kEvaluatorPairs,
       "Question 3.2.2 ticks exactly one option of each opposing pair, or explains under 'Other'.",
       Severity::kError},
      {rules::kCriterionCount, "A datasheet documents between 1 and 10 quality criteria.",
       Severity::kError},
      {rules::kLanguage,
       "Questions 2.4 and 2.5 give full ISO 639-1 English language names, or 'N/A'.",
       Severity::kWarning},
      {rules::kTaskInputOutput,
       "The task in 2.3 is compatible with the input (2.1) and output (2.2) types it implies.",
       Severity::kWarning},
      {rules::kOtherText, "Every selected 'Other'-style option comes with a description.",
       Severity::kError},
      {rules::kLink,
       "Questions 1.1 and 1.2 contain a link, or the token the question allows.",
       Severity::kWarning},
      {rules::kPreregistration,
       "A sheet completed for preregistration should not yet report results (4.3.9-4.3.11).",
       Severity::kInfo},
  };
  return catalogue;
}

namespace {

Severity severity_of(std::string_view rule) {
  for (const auto& r : rule_catalogue()) {
    if (r.id == rule) {
      return r.severity;
    }
  }
  return Severity::kError;
}

class Checker {
 public:
  Checker(const Datasheet& d, const Schema& schema) : d_(d), schema_(schema) {}

  ValidationReport run() {
    check_required();
    check_criterion_count();
    check_integers();
    check_links();
    check_languages();
    check_task_io();
    check_evaluator_pairs();
    check_other_text();
    for (const auto& block : d_.criteria()) {
      check_scale(block);
      check_instrument_gate(block);
    }
    check_preregistration();
    return finish();
  }

 private:
  void add(std::string_view rule, std::vector<QuestionId> at, std::string message,
           std::optional<Severity> severity = std::nullopt) {
    std::sort(at.begin(), at.end());
    report_.diagnostics.push_back(
        Diagnostic{std::string(rule), severity.value_or(severity_of(rule)), std::move(at),
                   std::move(message)});
  }

  const AnswerValue* fixed(std::string_view path) const {
    const auto it = d_.fixed_answers().find(path);
    return it == d_.fixed_answers().end() ? nullptr : &it->second;
  }

  static QuestionId fixed_id(std::string_view path) { return QuestionId(std::string(path)); }
  static QuestionId block_id(const CriterionBlock& block, std::string_view path) {
    return QuestionId(std::string(path), block.index);
  }

  void check_required() {
    for (const auto& part : schema_.parts()) {
      for (const auto& q : part.questions) {
        if (fixed(q.id) == nullptr) {
          add(rules::kRequired, {fixed_id(q.id)}, "question " + q.id + " is unanswered");
        }
      }
    }
    for (const auto& block : d_.criteria()) {
      for (const auto& q : schema_.criterion_block().questions) {
        if (block.find(q.id) == nullptr) {
          add(rules::kRequired, {block_id(block, q.id)},
              "question " + q.id + " of quality criterion " + std::to_string(block.index) +
                  " is unanswered");
        }
      }
    }
  }

  void check_criterion_count() {
    const auto n = static_cast<int>(d_.criteria().size());
    if (n < 1 || n > schema_.max_criteria()) {
      add(rules::kCriterionCount, {QuestionId("4.1.1", 1)},
          "the datasheet documents " + std::to_string(n) +
              " quality criteria; between 1 and " + std::to_string(schema_.max_criteria()) +
              " are required");
    }
  }

  void check_integers() {
    for (std::string_view path : {"3.1.1", "3.2.1"}) {
      const auto* v = fixed(path);
      if (const auto* i = v ? std::get_if<IntegerAnswer>(v) : nullptr; i && i->value == 0) {
        add(rules::kInteger, {fixed_id(path)},
            "question " + std::string(path) + " must be a positive integer, got 0");
      }
    }
  }

  static bool contains_link(std::string_view text) {
    const std::string lower = detail::to_lower(text);
    return lower.find("http://") != std::string::npos ||
           lower.find("https://") != std::string::npos ||
           lower.find("www.") != std::string::npos || lower.find("doi.org/") != std::string::npos;
  }

  void check_links() {
    for (std::string_view path : {"1.1", "1.2"}) {
      const auto* v = fixed(path);
      const auto* text = v ? std::get_if<TextAnswer>(v) : nullptr;
      if (text != nullptr && !contains_link(text->content)) {
        const auto& q = question(schema_, path);
        std::string allowed;
        for (auto s : q.sentinels) {
          allowed += " or '" + std::string(token_of(s)) + "'";
        }
        add(rules::kLink, {fixed_id(path)},
            "question " + std::string(path) + " should give a link (http/https URL)" + allowed);
      }
    }
  }

  void check_languages() {
    for (std::string_view path : {"2.4", "2.5"}) {
      const auto* v = fixed(path);
      const auto* text = v ? std::get_if<TextAnswer>(v) : nullptr;
      if (text == nullptr) {
        continue;
      }
      const auto unknown = unknown_language_names(text->content);
      if (!unknown.empty()) {
        std::string names;
        for (const auto& n : unknown) {
          names += (names.empty() ? "'" : ", '") + n + "'";
        }
        add(rules::kLanguage, {fixed_id(path)},
            "question " + std::string(path) + ": " + names +
                " not a full ISO 639-1 language name; use names such as English, Herero, Hindi, "
                "or 'N/A'");
      }
    }
  }

  const MultiChoiceAnswer* multi(std::string_view path) const {
    const auto* v = fixed(path);
    return v ? std::get_if<MultiChoiceAnswer>(v) : nullptr;
  }

  void check_task_io() {
    const auto* task = multi("2.3");
    if (task == nullptr) {
      return;
    }
    const auto* in = multi("2.1");
    const auto* out = multi("2.2");

    if (out != nullptr) {
      static constexpr std::string_view kTextTypes[] = {
          "text-subsentential", "text-sentence", "text-multiple-sentences",
          "text-document",      "text-dialogue", "text-other"};
      const bool text_output = std::any_of(std::begin(kTextTypes), std::end(kTextTypes),
                                           [&](auto k) { return out->contains(k); });
      for (std::string_view t : {"content-selection", "content-ordering"}) {
        if (task->contains(t) && text_output) {
          add(rules::kTaskInputOutput, {fixed_id("2.2"), fixed_id("2.3")},
              "task '" + std::string(t) + "' does not produce text, but 2.2 selects a text "
              "output type");
        }
      }
    }
    if (in == nullptr) {
      return;
    }
    struct InputNeed {
      std::string_view task;
      std::vector<std::string_view> any_of;
      std::string_view wording;
    };
    static const std::vector<InputNeed> needs = {
        {"surface-realisation", {"slr"}, "a shallow linguistic representation (SLR)"},
        {"deep-generation", {"raw-structured-data", "dlr"},
         "raw/structured data or a deep linguistic representation (DLR)"},
        {"data-to-text", {"raw-structured-data"}, "raw/structured data"},
        {"feature-controlled-generation", {"control-feature"}, "a control feature"},
        {"image-video-description", {"visual"}, "visual input"},
    };
    for (const auto& need : needs) {
      if (!task->contains(need.task)) {
        continue;
      }
      const bool met = std::any_of(need.any_of.begin(), need.any_of.end(),
                                   [&](auto k) { return in->contains(k); });
      if (!met) {
        add(rules::kTaskInputOutput, {fixed_id("2.1"), fixed_id("2.3")},
            "task '" + std::string(need.task) + "' takes " + std::string(need.wording) +
                " as input, which 2.1 does not select");
      }
    }
  }

  void check_evaluator_pairs() {
    const auto* kinds = multi("3.2.2");
    if (kinds == nullptr) {
      return;
    }
    static constexpr std::pair<std::string_view, std::string_view> kPairs[] = {
        {"experts", "non-experts"},
        {"paid", "not-paid"},
        {"previously-known", "not-previously-known"},
        {"includes-authors", "excludes-authors"},
    };
    std::vector<std::string> broken;
    for (const auto& [a, b] : kPairs) {
      if (kinds->contains(a) == kinds->contains(b)) {
        broken.push_back(std::string(a) + "/" + std::string(b));
      }
    }
    if (broken.empty()) {
      return;
    }
    std::string list;
    for (const auto& p : broken) {
      list += (list.empty() ? "" : ", ") + p;
    }
    const bool explained =
        kinds->other_text && !detail::trim(*kinds->other_text).empty();
    add(rules::kEvaluatorPairs, {fixed_id("3.2.2")},
        explained ? "question 3.2.2 does not tick exactly one of " + list +
                        "; explained under 'Other'"
                  : "question 3.2.2 should tick exactly one of each pair (" + list +
                        "), or explain under 'Other'",
        explained ? Severity::kInfo : Severity::kError);
  }

  void check_other_text_of(const Question& q, const AnswerValue& v, const QuestionId& id) {
    const std::optional<std::string>* other = nullptr;
    std::vector<std::string> needing;
    if (const auto* s = std::get_if<SingleChoiceAnswer>(&v)) {
      other = &s->other_text;
      if (const auto* o = q.find_option(s->option); o && o->requires_text) {
        needing.push_back(o->label);
      }
    } else if (const auto* m = std::get_if<MultiChoiceAnswer>(&v)) {
      other = &m->other_text;
      for (const auto& key : m->options) {
        if (const auto* o = q.find_option(key); o && o->requires_text) {
          needing.push_back(o->label);
        }
      }
    }
    if (needing.empty() || (*other && !detail::trim(**other).empty())) {
      return;
    }
    add(rules::kOtherText, {id},
        "question " + q.id + ": option '" + needing.front() + "' is selected without a description");
  }

  void check_other_text() {
    for (const auto& [path, v] : d_.fixed_answers()) {
      check_other_text_of(question(schema_, path), v, fixed_id(path));
    }
    for (const auto& block : d_.criteria()) {
      for (const auto& [path, v] : block.answers) {
        check_other_text_of(question(schema_, path), v, block_id(block, path));
      }
    }
  }

  void check_scale(const CriterionBlock& block) {
    const auto* size = block.find("4.3.3");
    if (size == nullptr) {
      return;
    }
    if (const auto* n = std::get_if<IntegerAnswer>(size)) {
      if (n->value < 2) {
        add(rules::kScaleSize, {block_id(block, "4.3.3")},
            "question 4.3.3: a rating instrument has at least 2 values, got " +
                std::to_string(n->value));
        return;
      }
      const auto* values = block.find("4.3.4");
      if (values == nullptr) {
        return;
      }
      const auto* text = std::get_if<TextAnswer>(values);
      const std::size_t count = text ? scale_value_count(text->content) : 0;
      if (count != n->value) {
        add(rules::kScaleValues, {block_id(block, "4.3.3"), block_id(block, "4.3.4")},
            "question 4.3.4 should list or give a range of " + std::to_string(n->value) +
                " values (the size in 4.3.3), found " +
                (text ? std::to_string(count) : std::string("'N/A'")));
      }
      return;
    }
    const auto* values = block.find("4.3.4");
    if (values == nullptr) {
      return;
    }
    const bool values_na = is_sentinel(*values, Sentinel::kNotApplicable);
    if (is_sentinel(*size, Sentinel::kNotApplicable) && !values_na) {
      add(rules::kScaleValues, {block_id(block, "4.3.3"), block_id(block, "4.3.4")},
          "question 4.3.3 is 'N/A' (no rating instrument), so 4.3.4 should be 'N/A' too");
    } else if (is_sentinel(*size, Sentinel::kContinuous) && values_na) {
      add(rules::kScaleValues, {block_id(block, "4.3.3"), block_id(block, "4.3.4")},
          "question 4.3.3 is 'continuous', so 4.3.4 should give the range of the instrument");
    }
  }

  void check_instrument_gate(const CriterionBlock& block) {
    // true = "there is no rating instrument" according to that question.
    struct Reading {
      std::string_view path;
      bool no_instrument;
    };
    std::vector<Reading> readings;
    if (const auto* v = block.find("4.3.3")) {
      readings.push_back({"4.3.3", is_sentinel(*v, Sentinel::kNotApplicable)});
    }
    if (const auto* v = block.find("4.3.5")) {
      const auto* s = std::get_if<SingleChoiceAnswer>(v);
      readings.push_back({"4.3.5", s != nullptr && s->option == "na-no-instrument"});
    }
    // 4.3.4 is tied to 4.3.3 by R-SCALE-VALUES; it only anchors the gate when
    // 4.3.3 itself is unanswered.
    if (block.find("4.3.3") == nullptr) {
      if (const auto* v = block.find("4.3.4")) {
        readings.push_back({"4.3.4", is_sentinel(*v, Sentinel::kNotApplicable)});
      }
    }
    if (const auto* v = block.find("4.3.6")) {
      readings.push_back({"4.3.6", !is_sentinel(*v, Sentinel::kNotApplicable)});
    }
    if (readings.size() < 2) {
      return;
    }
    const Reading& anchor = readings.front();
    for (std::size_t i = 1; i < readings.size(); ++i) {
      const Reading& other = readings[i];
      if (other.no_instrument == anchor.no_instrument) {
        continue;
      }
      std::string message;
      if (other.path == "4.3.6") {
        message = anchor.no_instrument
                      ? "there is no rating instrument (" + std::string(anchor.path) +
                            "), so 4.3.6 should describe the evaluators' task instead of 'N/A'"
                      : "there is a rating instrument (" + std::string(anchor.path) +
                            "), so 4.3.6 should be 'N/A'";
      } else {
        message = "questions " + std::string(anchor.path) + " and " + std::string(other.path) +
                  " disagree on whether there is a rating instrument";
      }
      add(rules::kInstrumentGate, {block_id(block, anchor.path), block_id(block, other.path)},
          message);
    }
  }

  void check_preregistration() {
    const auto* link = fixed("1.1");
    if (link == nullptr || !is_sentinel(*link, Sentinel::kForPreregistration)) {
      return;
    }
    for (const auto& block : d_.criteria()) {
      for (std::string_view path : {"4.3.9", "4.3.10", "4.3.11"}) {
        if (block.find(path) != nullptr) {
          add(rules::kPreregistration, {block_id(block, path)},
              "sheet is completed for preregistration but question " + std::string(path) +
                  " reports results; review before submission");
        }
      }
    }
  }

  ValidationReport finish() {
    auto& diags = report_.diagnostics;
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
      if (auto c = a.at.front() <=> b.at.front(); c != 0) {
        return c < 0;
      }
      if (a.rule != b.rule) {
        return a.rule < b.rule;
      }
      if (a.at != b.at) {
        return std::lexicographical_compare(a.at.begin(), a.at.end(), b.at.begin(), b.at.end());
      }
      return a.message < b.message;
    });
    for (const auto& diag : diags) {
      switch (diag.severity) {
        case Severity::kError:
          ++report_.error_count;
          break;
        case Severity::kWarning:
          ++report_.warning_count;
          break;
        case Severity::kInfo:
          ++report_.info_count;
          break;
      }
    }
    return std::move(report_);
  }

  const Datasheet& d_;
  const Schema& schema_;
  ValidationReport report_;
};

std::optional<long long> parse_signed(std::string_view s) {
  s = detail::trim(s);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

// "1-100", "1--100", "1 – 100", "0 to 10".
std::optional<std::size_t> range_size(std::string_view text) {
  text = detail::trim(text);
  for (std::string_view sep : {"--", "\xE2\x80\x93", "\xE2\x80\x94", " to ", "-"}) {
    // Skip a leading minus sign so "-2-2" splits at the second dash.
    const std::size_t from = (!text.empty() && text.front() == '-') ? 1 : 0;
    const auto pos = text.find(sep, from);
    if (pos == std::string_view::npos) {
      continue;
    }
    const auto lo = parse_signed(text.substr(0, pos));
    const auto hi = parse_signed(text.substr(pos + sep.size()));
    if (lo && hi && *hi >= *lo) {
      return static_cast<std::size_t>(*hi - *lo + 1);
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t scale_value_count(std::string_view values) {
  if (const auto n = range_size(values)) {
    return *n;
  }
  std::size_t count = 0;
  std::size_t start = 0;
  while (start <= values.size()) {
    auto comma = values.find(',', start);
    if (comma == std::string_view::npos) {
      comma = values.size();
    }
    if (!detail::trim(values.substr(start, comma - start)).empty()) {
      ++count;
    }
    start = comma + 1;
  }
  return count;
}

ValidationReport validate(const Datasheet& d, const Schema& schema) {
  return Checker(d, schema).run();
}

std::string report_to_json(const ValidationReport& report) {
  nlohmann::ordered_json out;
  auto diagnostics = nlohmann::ordered_json::array();
  for (const auto& diag : report.diagnostics) {
    nlohmann::ordered_json at = nlohmann::ordered_json::array();
    for (const auto& id : diag.at) {
      at.push_back(id.to_string());
    }
    diagnostics.push_back({{"rule", diag.rule},
                           {"severity", std::string(to_string(diag.severity))},
                           {"at", std::move(at)},
                           {"message", diag.message}});
  }
  out["diagnostics"] = std::move(diagnostics);
  out["errors"] = report.error_count;
  out["warnings"] = report.warning_count;
  out["infos"] = report.info_count;
  return out.dump(2) + "\n";
}

std::string report_to_text(const ValidationReport& report) {
  std::string out;
  for (const auto& diag : report.diagnostics) {
    std::string paths;
    for (const auto& id : diag.at) {
      paths += (paths.empty() ? "" : ",") + id.to_string();
    }
    out += std::string(to_string(diag.severity)) + " " + diag.rule + " " + paths + ": " +
           diag.message + "\n";
  }
  return out;
}

}  // namespace heds
