#include "heds/render.hpp"
#include "text_util.hpp"

namespace heds {

namespace detail {
std::string render_markdown(const Datasheet& d, const Schema& schema);
}  // namespace detail

namespace {

std::string escape_latex(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\\':
        out += "\\textbackslash{}";
        break;
      case '{':
        out += "\\{";
        break;
      case '}':
        out += "\\}";
        break;
      case '$':
        out += "\\$";
        break;
      case '&':
        out += "\\&";
        break;
      case '#':
        out += "\\#";
        break;
      case '%':
        out += "\\%";
        break;
      case '_':
        out += "\\_";
        break;
      case '^':
        out += "\\textasciicircum{}";
        break;
      case '~':
        out += "\\textasciitilde{}";
        break;
      case '<':
        out += "\\textless{}";
        break;
      case '>':
        out += "\\textgreater{}";
        break;
      case '|':
        out += "\\textbar{}";
        break;
      case '\r':
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Each source line becomes its own paragraph so blank lines survive.
void answer_block(std::string& out, std::string_view content) {
  out += "\\begin{hedsanswer}\n";
  for (const auto line : detail::split_lines(content)) {
    if (detail::trim(line).empty()) {
      out += "\\mbox{}\\par\n";
    } else {
      out += escape_latex(line) + "\\par\n";
    }
  }
  out += "\\end{hedsanswer}\n\n";
}

void empty_answer(std::string& out) { out += "\\begin{hedsanswer}\n\\mbox{}\n\\end{hedsanswer}\n\n"; }

void render_question(std::string& out, const Question& q, const AnswerValue* v) {
  out += "\\subsection*{Q" + q.id + ": " + escape_latex(q.prompt) + "}\n\n";
  if (!q.is_choice()) {
    if (v == nullptr) {
      empty_answer(out);
    } else if (const auto* t = std::get_if<TextAnswer>(v)) {
      answer_block(out, t->content);
    } else if (const auto* i = std::get_if<IntegerAnswer>(v)) {
      answer_block(out, std::to_string(i->value));
    } else if (const auto* s = std::get_if<SentinelAnswer>(v)) {
      answer_block(out, token_of(s->token));
    }
    return;
  }
  const auto* single = v ? std::get_if<SingleChoiceAnswer>(v) : nullptr;
  const auto* multi = v ? std::get_if<MultiChoiceAnswer>(v) : nullptr;
  out += "\\begin{itemize}\n";
  for (const auto& o : q.options) {
    const bool checked = (single && single->option == o.key) || (multi && multi->contains(o.key));
    out += std::string(checked ? "\\item[{[x]}] " : "\\item[{[\\ ]}] ") + escape_latex(o.label) +
           "\n";
  }
  out += "\\end{itemize}\n\n";
  const std::optional<std::string>* other =
      single ? &single->other_text : (multi ? &multi->other_text : nullptr);
  if (other && *other) {
    out += "\\paragraph{Other / details:}\n\n";
    answer_block(out, **other);
  }
}

std::string render_latex(const Datasheet& d, const Schema& schema) {
  std::string out;
  out += "\\documentclass{article}\n";
  out += "\\usepackage[utf8]{inputenc}\n\\usepackage[T1]{fontenc}\n";
  out += "\\newenvironment{hedsanswer}{\\begin{quote}}{\\end{quote}}\n";
  out += "\\title{Human Evaluation Datasheet}\n\\date{}\n";
  out += "\\begin{document}\n\\maketitle\n\n";
  out += "Schema version: " + escape_latex(d.schema_version()) + "\n\n";
  const auto fixed_part = [&](const Part& part) {
    out += "\\section*{Part " + std::to_string(part.id) + ": " + escape_latex(part.title) + "}\n\n";
    for (const auto& q : part.questions) {
      const auto it = d.fixed_answers().find(q.id);
      render_question(out, q, it == d.fixed_answers().end() ? nullptr : &it->second);
    }
  };
  for (const auto& part : schema.parts_before_criteria()) {
    fixed_part(part);
  }
  for (const auto& block : d.criteria()) {
    out += "\\section*{Part 4: Quality Criterion " + std::to_string(block.index) + "}\n\n";
    for (const auto& q : schema.criterion_block().questions) {
      render_question(out, q, block.find(q.id));
    }
  }
  for (const auto& part : schema.parts_after_criteria()) {
    fixed_part(part);
  }
  if (d.provenance()) {
    out += "\\section*{Provenance}\n\n";
    answer_block(out, *d.provenance());
  }
  out += "\\end{document}\n";
  return out;
}

}  // namespace

std::optional<RenderFormat> render_format_from_string(std::string_view name) {
  if (name == "markdown" || name == "md") {
    return RenderFormat::kMarkdown;
  }
  if (name == "latex" || name == "tex") {
    return RenderFormat::kLatex;
  }
  return std::nullopt;
}

std::string render(const Datasheet& d, const Schema& schema, RenderFormat format) {
  return format == RenderFormat::kMarkdown ? detail::render_markdown(d, schema)
                                           : render_latex(d, schema);
}

std::string render_blank(const Schema& schema, RenderFormat format) {
  return render(new_empty(schema), schema, format);
}

std::string render(const RenderTarget& target, const Schema& schema, const Datasheet* d) {
  if (target.mode == RenderMode::kBlankTemplate || d == nullptr) {
    return render_blank(schema, target.format);
  }
  return render(*d, schema, target.format);
}

}  // namespace heds
