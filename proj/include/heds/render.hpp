#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "heds/document.hpp"
#include "heds/schema.hpp"

namespace heds {

enum class RenderFormat { kMarkdown, kLatex };
enum class RenderMode { kBlankTemplate, kCompleted };

struct RenderTarget {
  RenderFormat format = RenderFormat::kMarkdown;
  RenderMode mode = RenderMode::kCompleted;
};

std::optional<RenderFormat> render_format_from_string(std::string_view name);

/// Renders a completed datasheet. Output is a pure function of the inputs.
std::string render(const Datasheet& d, const Schema& schema, RenderFormat format);

/// Renders the empty template (one criterion block).
std::string render_blank(const Schema& schema, RenderFormat format);

/// Dispatch on a target; `d` is required for RenderMode::kCompleted and
/// ignored for the blank template.
std::string render(const RenderTarget& target, const Schema& schema, const Datasheet* d);

/// Imports a Markdown rendering (possibly with edited answers) back into a
/// datasheet. Throws kMalformedTemplate naming the offending question,
/// kKindMismatch, kUnsupportedSchemaVersion or kCriterionLimitExceeded.
Datasheet parse_markdown(std::string_view text, const Schema& schema);

}  // namespace heds
