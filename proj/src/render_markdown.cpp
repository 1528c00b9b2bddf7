#include <algorithm>
#include <charconv>
#include <set>

#include "heds/error.hpp"
#include "heds/render.hpp"
#include "text_util.hpp"

namespace heds {

// Layout:
//
//   # Human Evaluation Datasheet
//   Schema version: 1.0
//   ## Part <n>: <title>              (fixed parts 1-3 and 5)
//   ## Part 4: Quality Criterion <k>  (one per criterion block)
//   ### Q<path>: <prompt>
//   > <help>
//   ```text ... ```                   (text and integer answers)
//   - [x] <label> / - [ ] <label>     (choice options)
//   Other / details:  + fenced block  (other_text)
//   ## Provenance + fenced block      (only when present)

namespace {

constexpr std::string_view kTitle = "# Human Evaluation Datasheet";
constexpr std::string_view kVersionPrefix = "Schema version: ";
constexpr std::string_view kDetailsLine = "Other / details:";
constexpr std::string_view kProvenanceHeading = "## Provenance";
constexpr std::string_view kCriterionHeading = "Quality Criterion ";

std::string fence_for(std::string_view content) {
  std::size_t longest = 0;
  std::size_t run = 0;
  for (char c : content) {
    run = c == '`' ? run + 1 : 0;
    longest = std::max(longest, run);
  }
  return std::string(std::max<std::size_t>(3, longest + 1), '`');
}

void fenced(std::string& out, const std::optional<std::string>& content) {
  if (!content) {
    out += "```text\n```\n\n";
    return;
  }
  const auto fence = fence_for(*content);
  out += fence + "text\n" + *content + "\n" + fence + "\n\n";
}

std::optional<std::string> text_of(const AnswerValue* v) {
  if (v == nullptr) {
    return std::nullopt;
  }
  if (const auto* t = std::get_if<TextAnswer>(v)) {
    return t->content;
  }
  if (const auto* i = std::get_if<IntegerAnswer>(v)) {
    return std::to_string(i->value);
  }
  if (const auto* s = std::get_if<SentinelAnswer>(v)) {
    return std::string(token_of(s->token));
  }
  return std::nullopt;
}

bool has_other_slot(const Question& q) {
  return std::any_of(q.options.begin(), q.options.end(),
                     [](const OptionDef& o) { return o.requires_text; });
}

void render_question(std::string& out, const Question& q, const AnswerValue* v) {
  out += "### Q" + q.id + ": " + q.prompt + "\n\n";
  if (!q.help.empty()) {
    out += "> " + q.help + "\n\n";
  }
  if (!q.is_choice()) {
    fenced(out, text_of(v));
    return;
  }
  const auto* single = v ? std::get_if<SingleChoiceAnswer>(v) : nullptr;
  const auto* multi = v ? std::get_if<MultiChoiceAnswer>(v) : nullptr;
  for (const auto& o : q.options) {
    const bool checked = (single && single->option == o.key) || (multi && multi->contains(o.key));
    out += std::string(checked ? "- [x] " : "- [ ] ") + o.label + "\n";
  }
  out += "\n";
  const std::optional<std::string>* other =
      single ? &single->other_text : (multi ? &multi->other_text : nullptr);
  if (has_other_slot(q) || (other && *other)) {
    out += std::string(kDetailsLine) + "\n\n";
    fenced(out, other ? *other : std::nullopt);
  }
}

}  // namespace

namespace detail {

std::string render_markdown(const Datasheet& d, const Schema& schema) {
  std::string out;
  out += std::string(kTitle) + "\n\n";
  out += std::string(kVersionPrefix) + d.schema_version() + "\n\n";
  const auto fixed_part = [&](const Part& part) {
    out += "## Part " + std::to_string(part.id) + ": " + part.title + "\n\n";
    for (const auto& q : part.questions) {
      const auto it = d.fixed_answers().find(q.id);
      render_question(out, q, it == d.fixed_answers().end() ? nullptr : &it->second);
    }
  };
  for (const auto& part : schema.parts_before_criteria()) {
    fixed_part(part);
  }
  for (const auto& block : d.criteria()) {
    out += "## Part 4: " + std::string(kCriterionHeading) + std::to_string(block.index) + "\n\n";
    for (const auto& q : schema.criterion_block().questions) {
      render_question(out, q, block.find(q.id));
    }
  }
  for (const auto& part : schema.parts_after_criteria()) {
    fixed_part(part);
  }
  if (d.provenance()) {
    out += std::string(kProvenanceHeading) + "\n\n";
    fenced(out, d.provenance());
  }
  // Exactly one trailing newline.
  while (out.size() > 1 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') {
    out.pop_back();
  }
  return out;
}

}  // namespace detail

namespace {

[[noreturn]] void malformed(const std::string& message, std::vector<std::string> paths = {},
                            std::optional<std::size_t> line = std::nullopt) {
  std::optional<SourcePosition> pos;
  if (line) {
    pos = SourcePosition{0, *line, 1};
  }
  throw Error(ErrorCode::kMalformedTemplate, message, std::move(paths), pos);
}

struct PendingQuestion {
  const Question* question = nullptr;
  std::optional<int> block;
  std::optional<std::string> text;
  std::vector<std::string> checked;
  std::optional<std::string> other_text;
};

class MarkdownReader {
 public:
  MarkdownReader(std::string_view text, const Schema& schema)
      : lines_(detail::split_lines(text)),
        schema_(schema),
        d_(remove_criterion(new_empty(schema), 1)) {}

  Datasheet read() {
    bool expect_details = false;
    bool in_provenance = false;
    for (i_ = 0; i_ < lines_.size(); ++i_) {
      const std::string_view line = lines_[i_];
      if (line.starts_with("```")) {
        auto content = read_fence(line);
        if (in_provenance) {
          d_ = set_provenance(std::move(d_), std::move(content));
          in_provenance = false;
        } else if (expect_details) {
          current().other_text = std::move(content);
          expect_details = false;
        } else {
          take_text(std::move(content));
        }
        continue;
      }
      if (detail::trim(line).empty() || line.starts_with(">")) {
        continue;
      }
      if (expect_details) {
        malformed("expected a fenced block after '" + std::string(kDetailsLine) + "'",
                  {current().question->id}, i_ + 1);
      }
      if (in_provenance) {
        malformed("expected a fenced block after the provenance heading", {}, i_ + 1);
      }
      if (line == kTitle) {
        continue;
      }
      if (line.starts_with(kVersionPrefix)) {
        read_version(line.substr(kVersionPrefix.size()));
      } else if (line == kProvenanceHeading) {
        finish_question();
        in_provenance = true;
        part_ = 0;
      } else if (line.starts_with("## Part ")) {
        finish_question();
        read_part_heading(line);
      } else if (line.starts_with("### Q")) {
        finish_question();
        read_question_heading(line);
      } else if (line.starts_with("- [")) {
        read_checkbox(line);
      } else if (line == kDetailsLine) {
        if (!pending_ || !pending_->question->is_choice()) {
          malformed("'" + std::string(kDetailsLine) + "' outside a choice question", {}, i_ + 1);
        }
        expect_details = true;
      } else {
        malformed("unexpected line: " + std::string(line),
                  pending_ ? std::vector<std::string>{pending_->question->id}
                           : std::vector<std::string>{},
                  i_ + 1);
      }
    }
    if (expect_details) {
      malformed("missing fenced block after '" + std::string(kDetailsLine) + "'",
                {current().question->id});
    }
    finish_question();
    if (!saw_version_) {
      malformed("missing '" + std::string(kVersionPrefix) + "' line");
    }
    check_complete();
    return std::move(d_);
  }

 private:
  PendingQuestion& current() { return *pending_; }

  std::optional<std::string> read_fence(std::string_view open) {
    std::size_t ticks = 0;
    while (ticks < open.size() && open[ticks] == '`') {
      ++ticks;
    }
    const std::string fence(ticks, '`');
    const std::size_t start_line = i_ + 1;
    std::vector<std::string_view> body;
    for (++i_; i_ < lines_.size(); ++i_) {
      if (lines_[i_] == fence) {
        if (body.empty()) {
          return std::nullopt;
        }
        std::string content;
        for (std::size_t k = 0; k < body.size(); ++k) {
          if (k > 0) {
            content += '\n';
          }
          content += body[k];
        }
        return content;
      }
      body.push_back(lines_[i_]);
    }
    malformed("unterminated fenced block", pending_ ? std::vector<std::string>{pending_->question->id}
                                                    : std::vector<std::string>{},
              start_line);
  }

  void read_version(std::string_view version) {
    version = detail::trim(version);
    if (version != schema_.version()) {
      throw Error(ErrorCode::kUnsupportedSchemaVersion,
                  "schema version '" + std::string(version) + "' is not supported");
    }
    saw_version_ = true;
  }

  void read_part_heading(std::string_view line) {
    auto rest = line.substr(std::string_view("## Part ").size());
    int number = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), number);
    const char* end = rest.data() + rest.size();
    if (ec != std::errc() || end - ptr < 2 || std::string_view(ptr, 2) != ": ") {
      malformed("malformed part heading: " + std::string(line), {}, i_ + 1);
    }
    const std::string_view title(ptr + 2, static_cast<std::size_t>(end - (ptr + 2)));
    if (number == kCriterionPart) {
      int index = 0;
      const auto label = title.substr(0, std::min(title.size(), kCriterionHeading.size()));
      const auto digits = title.substr(label.size());
      const auto [p2, ec2] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
      if (label != kCriterionHeading || ec2 != std::errc() ||
          p2 != digits.data() + digits.size()) {
        malformed("malformed criterion heading: " + std::string(line), {}, i_ + 1);
      }
      const int expected = static_cast<int>(d_.criteria().size()) + 1;
      if (index != expected) {
        malformed("criterion blocks must be numbered 1, 2, ...; expected " +
                      std::to_string(expected) + ", found " + std::to_string(index),
                  {}, i_ + 1);
      }
      d_ = add_criterion(std::move(d_), schema_);
      block_seen_.emplace_back();
      part_ = kCriterionPart;
      return;
    }
    const bool known = std::any_of(schema_.parts().begin(), schema_.parts().end(),
                                   [&](const Part& p) { return p.id == number; });
    if (!known) {
      malformed("unknown part " + std::to_string(number), {}, i_ + 1);
    }
    part_ = number;
  }

  void read_question_heading(std::string_view line) {
    auto rest = line.substr(std::string_view("### Q").size());
    const auto colon = rest.find(':');
    const std::string path(rest.substr(0, colon));
    const Question* q = schema_.find(path);
    if (colon == std::string_view::npos || q == nullptr) {
      malformed("unknown question heading: " + std::string(line), {path}, i_ + 1);
    }
    if (part_of(path) != part_ || part_ == 0) {
      malformed("question " + path + " appears outside its part", {path}, i_ + 1);
    }
    auto& seen = part_ == kCriterionPart ? block_seen_.back() : fixed_seen_;
    if (!seen.insert(path).second) {
      malformed("question " + path + " appears twice", {path}, i_ + 1);
    }
    pending_.emplace();
    pending_->question = q;
    if (part_ == kCriterionPart) {
      pending_->block = static_cast<int>(d_.criteria().size());
    }
  }

  void read_checkbox(std::string_view line) {
    if (!pending_ || !pending_->question->is_choice()) {
      malformed("checkbox outside a choice question", {}, i_ + 1);
    }
    const Question& q = *pending_->question;
    if (line.size() < 6 || line[4] != ']' || line[5] != ' ' ||
        (line[3] != ' ' && line[3] != 'x' && line[3] != 'X')) {
      malformed("malformed checkbox line under " + q.id + ": " + std::string(line), {q.id},
                i_ + 1);
    }
    const auto label = line.substr(6);
    const OptionDef* o = q.find_option_by_label(label);
    if (o == nullptr) {
      malformed("unknown option '" + std::string(label) + "' under question " + q.id, {q.id},
                i_ + 1);
    }
    if (line[3] != ' ') {
      pending_->checked.push_back(o->key);
    }
  }

  void take_text(std::optional<std::string> content) {
    if (!pending_) {
      malformed("fenced block outside a question", {}, i_ + 1);
    }
    if (pending_->question->is_choice()) {
      malformed("question " + pending_->question->id + " takes checkboxes, not a text block",
                {pending_->question->id}, i_ + 1);
    }
    if (pending_->text) {
      malformed("question " + pending_->question->id + " has two answer blocks",
                {pending_->question->id}, i_ + 1);
    }
    pending_->text = std::move(content);
  }

  void finish_question() {
    if (!pending_) {
      return;
    }
    PendingQuestion p = std::move(*pending_);
    pending_.reset();
    const Question& q = *p.question;
    const QuestionId id(q.id, p.block);
    std::optional<AnswerValue> value;
    if (!q.is_choice()) {
      if (p.text) {
        value = answer_from_text(q, *p.text);
      }
    } else if (!p.checked.empty()) {
      if (q.kind == QuestionKind::kSingleChoice) {
        if (p.checked.size() > 1) {
          throw Error(ErrorCode::kKindMismatch,
                      "question " + q.id + " takes one option, " +
                          std::to_string(p.checked.size()) + " are checked",
                      {q.id});
        }
        value = SingleChoiceAnswer{p.checked.front(), p.other_text};
      } else {
        value = MultiChoiceAnswer{p.checked, p.other_text};
      }
    } else if (p.other_text) {
      throw Error(ErrorCode::kKindMismatch,
                  "question " + q.id + " has details under 'Other' but no option is checked",
                  {q.id});
    }
    if (value) {
      d_ = set_answer(std::move(d_), schema_, id, std::move(*value));
    }
  }

  void check_complete() const {
    std::vector<std::string> missing;
    for (const auto& part : schema_.parts()) {
      for (const auto& q : part.questions) {
        if (!fixed_seen_.contains(q.id)) {
          missing.push_back(q.id);
        }
      }
    }
    for (std::size_t b = 0; b < block_seen_.size(); ++b) {
      for (const auto& q : schema_.criterion_block().questions) {
        if (!block_seen_[b].contains(q.id)) {
          missing.push_back(QuestionId(q.id, static_cast<int>(b) + 1).to_string());
        }
      }
    }
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) {
        list += (list.empty() ? "" : ", ") + m;
      }
      malformed("missing question heading(s): " + list, missing);
    }
  }

  std::vector<std::string_view> lines_;
  const Schema& schema_;
  Datasheet d_;
  std::size_t i_ = 0;
  int part_ = 0;
  bool saw_version_ = false;
  std::optional<PendingQuestion> pending_;
  std::set<std::string> fixed_seen_;
  std::vector<std::set<std::string>> block_seen_;
};

}  // namespace

Datasheet parse_markdown(std::string_view text, const Schema& schema) {
  return MarkdownReader(text, schema).read();
}

}  // namespace heds
