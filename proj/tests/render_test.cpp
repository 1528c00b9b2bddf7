#include <gtest/gtest.h>

#include <set>

#include "heds/error.hpp"
#include "heds/render.hpp"
#include "support/fixtures.hpp"

namespace heds {
namespace {

using testing::golden_datasheet;
using testing::with;

const Schema& S() { return builtin_schema(); }

std::string md(const Datasheet& d) { return render(d, S(), RenderFormat::kMarkdown); }

ErrorCode parse_error(std::string_view text) {
  try {
    parse_markdown(text, S());
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error";
  return ErrorCode::kIo;
}

std::string replace_once(std::string s, std::string_view from, std::string_view to) {
  const auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) {
    s.replace(at, from.size(), to);
  }
  return s;
}

TEST(Markdown, GoldenRoundTrip) {
  const auto g = golden_datasheet();
  const auto text = md(g);
  EXPECT_EQ(parse_markdown(text, S()), g);
  EXPECT_EQ(md(parse_markdown(text, S())), text);
}

TEST(Markdown, Layout) {
  const auto text = md(with(golden_datasheet(), "2.1", "visual,other", "Sketches"));
  EXPECT_EQ(text.rfind("# Human Evaluation Datasheet\n", 0), 0u);
  EXPECT_NE(text.find("Schema version: 1.0"), std::string::npos);
  EXPECT_NE(text.find("## Part 1: Paper and Resources"), std::string::npos);
  EXPECT_NE(text.find("## Part 4: Quality Criterion 2"), std::string::npos);
  EXPECT_NE(text.find("- [x] visual\n"), std::string::npos);
  EXPECT_NE(text.find("- [ ] speech\n"), std::string::npos);
  EXPECT_NE(text.find("Other / details:\n\n```text\nSketches\n```"), std::string::npos);
  EXPECT_EQ(text.find("## Provenance"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_NE(text[text.size() - 2], '\n');
  EXPECT_EQ(text.find("\r"), std::string::npos);
}

TEST(Markdown, PartOrder) {
  const auto text = md(golden_datasheet());
  const auto p3 = text.find("## Part 3:");
  const auto c1 = text.find("## Part 4: Quality Criterion 1");
  const auto c2 = text.find("## Part 4: Quality Criterion 2");
  const auto p5 = text.find("## Part 5:");
  EXPECT_LT(p3, c1);
  EXPECT_LT(c1, c2);
  EXPECT_LT(c2, p5);
}

TEST(Markdown, FenceGrowsPastBackticks) {
  const auto d = with(new_empty(S()), "1.3", "code: ````\n```\nend");
  const auto text = md(d);
  EXPECT_NE(text.find("`````text\n"), std::string::npos);
  EXPECT_EQ(parse_markdown(text, S()), d);
}

TEST(Markdown, HostileTextRoundTrips) {
  for (std::string_view s : {"### Q1.1: fake heading", "- [x] visual", "## Part 5: Ethics",
                             "\n\nleading blank lines", "trailing newline\n", " ", "a\r\nb",
                             "Other / details:", "```"}) {
    const auto d = set_provenance(with(new_empty(S()), "1.3", s), std::string(s));
    EXPECT_EQ(parse_markdown(md(d), S()), d) << s;
  }
}

TEST(Markdown, BlankTemplate) {
  const auto text = render_blank(S(), RenderFormat::kMarkdown);
  EXPECT_EQ(parse_markdown(text, S()), new_empty(S()));
  EXPECT_EQ(text, render(RenderTarget{RenderFormat::kMarkdown, RenderMode::kBlankTemplate}, S(), nullptr));
}

TEST(Markdown, ZeroAndTenBlocks) {
  const auto none = remove_criterion(new_empty(S()), 1);
  EXPECT_EQ(parse_markdown(md(none), S()), none);
  auto ten = new_empty(S());
  for (int i = 1; i < 10; ++i) {
    ten = add_criterion(std::move(ten), S());
  }
  ten = with(ten, "4.3.1@10", "Last");
  EXPECT_EQ(parse_markdown(md(ten), S()), ten);
}

TEST(Markdown, ImportEditedTemplate) {
  auto text = render_blank(S(), RenderFormat::kMarkdown);
  text = replace_once(text, "- [ ] Goodness", "- [x] Goodness");
  text = replace_once(text, "- [ ] visual", "- [X] visual");
  const auto d = parse_markdown(text, S());
  EXPECT_EQ(*d.find(QuestionId("4.1.1", 1)), AnswerValue(SingleChoiceAnswer{"goodness", {}}));
  EXPECT_EQ(*d.find(QuestionId("2.1")), AnswerValue(MultiChoiceAnswer{{"visual"}, {}}));
}

TEST(Markdown, SentinelsAndIntegersImport) {
  const auto d = with(with(new_empty(S()), "3.1.1", "12"), "4.3.3@1", "continuous");
  const auto back = parse_markdown(md(d), S());
  EXPECT_EQ(*back.find(QuestionId("3.1.1")), AnswerValue(IntegerAnswer{12}));
  EXPECT_EQ(*back.find(QuestionId("4.3.3", 1)), AnswerValue(SentinelAnswer{Sentinel::kContinuous}));
}

TEST(Markdown, MalformedInputs) {
  const auto blank = render_blank(S(), RenderFormat::kMarkdown);
  EXPECT_EQ(parse_error(replace_once(blank, "### Q1.3:", "### Qx:")), ErrorCode::kMalformedTemplate);
  EXPECT_EQ(parse_error(replace_once(blank, "# Human Evaluation Datasheet", "# Something")),
            ErrorCode::kMalformedTemplate);
  EXPECT_EQ(parse_error(replace_once(blank, "- [ ] speech", "- [ ] speach")),
            ErrorCode::kMalformedTemplate);
  EXPECT_EQ(parse_error(replace_once(blank, "Schema version: 1.0", "Schema version: 2.0")),
            ErrorCode::kUnsupportedSchemaVersion);

  // Deleting a question heading leaves the sheet incomplete.
  const auto q13 = blank.find("### Q1.3:");
  const auto q21 = blank.find("## Part 2:");
  EXPECT_EQ(parse_error(blank.substr(0, q13) + blank.substr(q21)), ErrorCode::kMalformedTemplate);

  auto two = replace_once(blank, "- [ ] Goodness", "- [x] Goodness");
  two = replace_once(two, "- [ ] Features", "- [x] Features");
  EXPECT_EQ(parse_error(two), ErrorCode::kKindMismatch);

  auto details = blank;
  const auto at = details.find("Other / details:\n\n```text\n");
  details.insert(at + std::string("Other / details:\n\n```text\n").size(), "orphan\n");
  EXPECT_EQ(parse_error(details), ErrorCode::kKindMismatch);

  auto eleven = md(new_empty(S()));
  std::string block = eleven.substr(eleven.find("## Part 4: Quality Criterion 1"));
  block = block.substr(0, block.find("## Part 5:"));
  std::string many = eleven.substr(0, eleven.find("## Part 5:"));
  for (int i = 2; i <= 11; ++i) {
    many += replace_once(block, "Quality Criterion 1", "Quality Criterion " + std::to_string(i));
  }
  many += eleven.substr(eleven.find("## Part 5:"));
  EXPECT_EQ(parse_error(many), ErrorCode::kCriterionLimitExceeded);
}

TEST(Markdown, RandomRoundTrips) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto d = testing::random_datasheet(rng);
    const auto text = md(d);
    ASSERT_EQ(parse_markdown(text, S()), d) << text;
  }
}

// A grammar-level check standing in for a LaTeX compiler: every command is
// known, braces and environments balance, and no special character appears
// unescaped.
std::string latex_problem(std::string_view tex) {
  static const std::set<std::string> known = {
      "documentclass", "usepackage", "newenvironment", "title", "date", "begin", "end",
      "maketitle", "section", "subsection", "paragraph", "item", "par", "mbox",
      "textbackslash", "textasciicircum", "textasciitilde", "textless", "textgreater", "textbar"};
  static const std::set<std::string> environments = {"document", "quote", "itemize", "hedsanswer"};
  int depth = 0;
  std::vector<std::string> envs;
  for (std::size_t i = 0; i < tex.size(); ++i) {
    const char c = tex[i];
    if (c == '\\') {
      std::size_t j = i + 1;
      while (j < tex.size() && std::isalpha(static_cast<unsigned char>(tex[j]))) {
        ++j;
      }
      if (j == i + 1) {
        if (j >= tex.size() || std::string_view("{}$&#%_ ").find(tex[j]) == std::string_view::npos) {
          return "bad control symbol at " + std::to_string(i);
        }
        i = j;
        continue;
      }
      const std::string name(tex.substr(i + 1, j - i - 1));
      if (!known.count(name)) {
        return "unknown command \\" + name;
      }
      if (name == "begin" || name == "end") {
        const auto close = tex.find('}', j);
        const std::string env(tex.substr(j + 1, close - j - 1));
        if (tex[j] != '{' || !environments.count(env)) {
          return "bad environment " + env;
        }
        if (name == "begin") {
          envs.push_back(env);
        } else {
          if (envs.empty() || envs.back() != env) {
            return "mismatched \\end{" + env + "}";
          }
          envs.pop_back();
        }
        i = close;
        continue;
      }
      i = j - 1;
      continue;
    }
    if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth < 0) {
        return "unbalanced } at " + std::to_string(i);
      }
    } else if (std::string_view("$&#%^_~").find(c) != std::string_view::npos) {
      return std::string("unescaped ") + c + " at " + std::to_string(i);
    }
  }
  if (depth != 0) {
    return "unbalanced braces";
  }
  if (!envs.empty()) {
    return "unclosed environment " + envs.back();
  }
  return {};
}

TEST(Latex, CheckerRejectsBrokenInput) {
  EXPECT_FALSE(latex_problem("\\begin{document}50% \\end{document}").empty());
  EXPECT_FALSE(latex_problem("\\begin{document}{\\end{document}").empty());
  EXPECT_FALSE(latex_problem("\\begin{document}\\foo\\end{document}").empty());
  EXPECT_TRUE(latex_problem("\\begin{document}50\\% \\end{document}").empty());
}

TEST(Latex, GoldenAndBlankAreWellFormed) {
  const auto tex = render(golden_datasheet(), S(), RenderFormat::kLatex);
  EXPECT_EQ(latex_problem(tex), "");
  EXPECT_EQ(tex.rfind("\\documentclass{article}\n", 0), 0u);
  EXPECT_NE(tex.find("\\section*{Part 4: Quality Criterion 2}"), std::string::npos);
  EXPECT_NE(tex.find("\\item[{[x]}] Goodness"), std::string::npos);
  EXPECT_EQ(latex_problem(render_blank(S(), RenderFormat::kLatex)), "");
}

TEST(Latex, EscapesSpecialCharacters) {
  const auto d = set_provenance(with(new_empty(S()), "1.3", "50% of $x_1$ & {y} #2 ~ ^ \\ <a|b>"),
                                std::string("multi\n\nline"));
  const auto tex = render(d, S(), RenderFormat::kLatex);
  EXPECT_EQ(latex_problem(tex), "");
  EXPECT_NE(tex.find("50\\% of \\$x\\_1\\$ \\& \\{y\\} \\#2"), std::string::npos);
}

TEST(Latex, RandomSheetsAreWellFormed) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto tex = render(testing::random_datasheet(rng), S(), RenderFormat::kLatex);
    ASSERT_EQ(latex_problem(tex), "");
  }
}

TEST(Render, FormatNames) {
  EXPECT_EQ(render_format_from_string("markdown"), RenderFormat::kMarkdown);
  EXPECT_EQ(render_format_from_string("latex"), RenderFormat::kLatex);
  EXPECT_FALSE(render_format_from_string("pdf"));
}

}  // namespace
}  // namespace heds
