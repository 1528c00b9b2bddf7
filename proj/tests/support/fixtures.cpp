#include "support/fixtures.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace heds::testing {

namespace {

std::vector<std::string> split_keys(std::string_view value) {
  std::vector<std::string> keys;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    keys.emplace_back(value.substr(start, end - start));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return keys;
}

std::optional<std::string> optional_text(std::string_view s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

}  // namespace

Datasheet with(Datasheet d, std::string_view id_text, std::string_view value,
               std::string_view other_text) {
  const Schema& schema = builtin_schema();
  const QuestionId id = QuestionId::parse(id_text);
  const Question& q = question(schema, id);
  AnswerValue v;
  switch (q.kind) {
    case QuestionKind::kSingleChoice:
      v = SingleChoiceAnswer{std::string(value), optional_text(other_text)};
      break;
    case QuestionKind::kMultiChoice:
      v = MultiChoiceAnswer{split_keys(value), optional_text(other_text)};
      break;
    default:
      v = TextAnswer{std::string(value)};
  }
  return set_answer(std::move(d), schema, id, std::move(v));
}

Datasheet golden_datasheet() {
  const Schema& schema = builtin_schema();
  Datasheet d = add_criterion(new_empty(schema), schema);

  d = with(d, "1.1", "https://example.org/papers/weather-report-eval");
  d = with(d, "1.2", "https://example.org/data/weather-report-eval");
  d = with(d, "1.3", "A. Researcher, Example University, a.researcher@example.org");
  d = with(d, "2.1", "raw-structured-data");
  d = with(d, "2.2", "text-multiple-sentences");
  d = with(d, "2.3", "data-to-text");
  d = with(d, "2.4", "N/A");
  d = with(d, "2.5", "English");
  d = with(d, "3.1.1", "120");
  d = with(d, "3.1.2", "automatic-random");
  d = with(d, "3.1.3", "Not computed.");
  d = with(d, "3.2.1", "6");
  d = with(d, "3.2.2", "non-experts,paid,not-previously-known,excludes-authors");
  d = with(d, "3.2.3", "Crowdsourcing platform, restricted to UK-based workers.");
  d = with(d, "3.2.4", "A short written tutorial with three worked examples.");
  d = with(d, "3.2.5", "Self-reported fluency in English.");
  d = with(d, "3.3.1", "No.");
  d = with(d, "3.3.2", "Online survey built with an in-house tool.");
  d = with(d, "3.3.3", "native-speakers,manual-quality-checking");
  d = with(d, "3.3.4", "One forecast text at a time, with the input data table above it.");
  d = with(d, "3.3.5", "single-sitting");
  d = with(d, "3.3.6", "questions-before,feedback-after");
  d = with(d, "3.3.7", "own-choosing");
  d = with(d, "3.3.8", "Not recorded.");

  d = with(d, "4.1.1@1", "goodness");
  d = with(d, "4.1.2@1", "form");
  d = with(d, "4.1.3@1", "own-right");
  d = with(d, "4.2.1@1", "subjective");
  d = with(d, "4.2.2@1", "absolute");
  d = with(d, "4.2.3@1", "intrinsic");
  d = with(d, "4.3.1@1", "Fluency");
  d = with(d, "4.3.2@1", "How natural and easy to read the forecast is.");
  d = with(d, "4.3.3@1", "5");
  d = with(d, "4.3.4@1", "1, 2, 3, 4, 5");
  d = with(d, "4.3.5@1", "multiple-choice");
  d = with(d, "4.3.6@1", "N/A");
  d = with(d, "4.3.7@1", "How fluent is this forecast?");
  d = with(d, "4.3.8@1", "direct-quality-estimation");
  d = with(d, "4.3.9@1", "Mean rating per system.");
  d = with(d, "4.3.10@1", "Wilcoxon signed-rank test with Bonferroni correction.");
  d = with(d, "4.3.11@1", "Krippendorff's alpha = 0.61 across all evaluators.");

  d = with(d, "4.1.1@2", "correctness");
  d = with(d, "4.1.2@2", "content");
  d = with(d, "4.1.3@2", "relative-to-input");
  d = with(d, "4.2.1@2", "objective");
  d = with(d, "4.2.2@2", "absolute");
  d = with(d, "4.2.3@2", "intrinsic");
  d = with(d, "4.3.1@2", "Accuracy");
  d = with(d, "4.3.2@2", "N/A");
  d = with(d, "4.3.3@2", "N/A");
  d = with(d, "4.3.4@2", "N/A");
  d = with(d, "4.3.5@2", "na-no-instrument");
  d = with(d, "4.3.6@2", "Evaluators mark every word that is not supported by the input data.");
  d = with(d, "4.3.7@2", "Highlight any words that the data table does not support.");
  d = with(d, "4.3.8@2", "counting-occurrences");
  d = with(d, "4.3.9@2", "Count of marked words per text, averaged per system.");
  d = with(d, "4.3.10@2", "None");
  d = with(d, "4.3.11@2", "Not assessed.");

  d = with(d, "5.1", "Approved by the university ethics board.");
  d = with(d, "5.2", "No.");
  d = with(d, "5.3", "No.");
  d = with(d, "5.4", "No.");
  return d;
}

Datasheet golden_with_scale(std::string_view size, std::string_view values) {
  Datasheet d = with(golden_datasheet(), "4.3.3@1", size);
  return with(std::move(d), "4.3.4@1", values);
}

std::vector<RuleFixture> rule_fixtures() {
  const Schema& schema = builtin_schema();
  const Datasheet g = golden_datasheet();
  return {
      {"R-REQ", clear_answer(g, schema, QuestionId("5.4"))},
      {"R-INT", with(g, "3.1.1", "0")},
      {"R-SCALE-SIZE", with(g, "4.3.3@1", "1")},
      {"R-SCALE-VALUES", with(g, "4.3.4@1", "1, 2, 3, 4")},
      {"R-INSTRUMENT-GATE", with(g, "4.3.6@1", "Evaluators pick their favourite output.")},
      {"R-EVAL-PAIRS", with(g, "3.2.2", "experts,non-experts,paid,not-previously-known,excludes-authors")},
      {"R-CRIT-COUNT", remove_criterion(remove_criterion(g, 2), 1)},
      {"R-LANG", with(g, "2.5", "Eng")},
      {"R-TASK-IO", with(g, "2.3", "data-to-text,surface-realisation")},
      {"R-OTHER-TEXT", with(g, "3.1.2", "other")},
      {"R-LINK", with(g, "1.2", "Available from the authors on request.")},
      {"R-PREREG", with(g, "1.1", "for preregistration")},
  };
}

namespace {

constexpr std::array<std::string_view, 24> kPieces = {
    "a",    "forecast", " ",     "  ",      "\n",       "\n\n",   "`",     "```",
    "````", "~~~",      "é",     "日本語",  "\t",       "\\",     "{}",    "$x^2$",
    "### Q1.1: fake", "- [x] Not an option", "> quoted", "## Part 4: Quality Criterion 2",
    "Other / details:", "N/A", "\r", "|pipe|"};

std::string random_text(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<std::size_t> piece(0, kPieces.size() - 1);
  std::string out;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    out += kPieces[piece(rng)];
  }
  return out;
}

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::optional<std::string> maybe_text(std::mt19937_64& rng, double p) {
  return chance(rng, p) ? std::optional<std::string>(random_text(rng)) : std::nullopt;
}

AnswerValue random_answer(const Question& q, std::mt19937_64& rng) {
  if (!q.sentinels.empty() && chance(rng, 0.15)) {
    std::uniform_int_distribution<std::size_t> pick(0, q.sentinels.size() - 1);
    return SentinelAnswer{q.sentinels[pick(rng)]};
  }
  switch (q.kind) {
    case QuestionKind::kFreeText:
      return TextAnswer{random_text(rng)};
    case QuestionKind::kIntegerText:
      return IntegerAnswer{chance(rng, 0.5) ? rng() : rng() % 200};
    case QuestionKind::kSingleChoice: {
      std::uniform_int_distribution<std::size_t> pick(0, q.options.size() - 1);
      return SingleChoiceAnswer{q.options[pick(rng)].key, maybe_text(rng, 0.3)};
    }
    case QuestionKind::kMultiChoice: {
      MultiChoiceAnswer m;
      for (const auto& o : q.options) {
        if (chance(rng, 0.3)) {
          m.options.push_back(o.key);
        }
      }
      if (m.options.empty()) {
        m.options.push_back(q.options.back().key);
      }
      std::shuffle(m.options.begin(), m.options.end(), rng);
      m.other_text = maybe_text(rng, 0.3);
      return m;
    }
  }
  return TextAnswer{"unreachable"};
}

}  // namespace

Datasheet random_datasheet(std::mt19937_64& rng) {
  const Schema& schema = builtin_schema();
  Datasheet d = remove_criterion(new_empty(schema), 1);
  std::uniform_int_distribution<int> blocks(0, schema.max_criteria());
  const int n = chance(rng, 0.7) ? blocks(rng) % 3 + 1 : blocks(rng);
  for (int i = 0; i < n; ++i) {
    d = add_criterion(std::move(d), schema);
  }
  const auto fill = [&](const Question& q, const QuestionId& id) {
    if (chance(rng, 0.75)) {
      d = set_answer(std::move(d), schema, id, random_answer(q, rng));
    }
  };
  for (const auto& part : schema.parts()) {
    for (const auto& q : part.questions) {
      fill(q, QuestionId(q.id));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (const auto& q : schema.criterion_block().questions) {
      fill(q, QuestionId(q.id, i));
    }
  }
  if (chance(rng, 0.3)) {
    d = set_provenance(std::move(d), random_text(rng));
  }
  return d;
}

TempDir::TempDir() {
  std::random_device rd;
  for (;;) {
    path_ = std::filesystem::temp_directory_path() /
            ("heds-test-" + std::to_string(rd()) + std::to_string(rd()));
    if (std::filesystem::create_directory(path_)) {
      return;
    }
  }
}

TempDir::~TempDir() {
  std::error_code ignored;
  std::filesystem::remove_all(path_, ignored);
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace heds::testing
