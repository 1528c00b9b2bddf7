#include "heds/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heds/compare.hpp"
#include "heds/document.hpp"
#include "heds/error.hpp"
#include "heds/render.hpp"
#include "heds/schema.hpp"
#include "heds/server.hpp"
#include "heds/validate.hpp"

namespace heds {

namespace {

namespace fs = std::filesystem;

bool ends_with(std::string_view s, std::string_view suffix) { return s.ends_with(suffix); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  if (!f) {
    throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  }
}

// Canonical JSON unless the name says Markdown; LaTeX is export-only.
Datasheet load_sheet(const std::string& path, const Schema& schema) {
  if (ends_with(path, ".tex")) {
    throw Error(ErrorCode::kIo, "LaTeX is an export-only format: '" + path + "'");
  }
  const std::string text = read_file(path);
  if (ends_with(path, ".md")) {
    return parse_markdown(text, schema);
  }
  return parse_canonical(text, schema);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo:
    case ErrorCode::kVersionMismatch:
      return kExitUsage;
    case ErrorCode::kIncompleteCriterion:
      return kExitValidationErrors;
    default:
      return kExitParse;
  }
}

std::optional<std::filesystem::path> registry_from_env() {
  const char* env = std::getenv("HEDS_REGISTRY");
  if (env == nullptr || *env == '\0') {
    return std::nullopt;
  }
  return std::filesystem::path(env);
}

// Both inputs must carry the same schema version before anything is parsed
// in full, so a mismatch is reported as such rather than as a parse error.
void check_same_version(const std::string& a, const std::string& b) {
  if (ends_with(a, ".md") || ends_with(b, ".md")) {
    return;
  }
  const auto va = peek_schema_version(read_file(a));
  const auto vb = peek_schema_version(read_file(b));
  if (va && vb && *va != *vb) {
    throw Error(ErrorCode::kVersionMismatch,
                "schema versions differ: '" + *va + "' vs '" + *vb + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Schema& schema = builtin_schema();

  CLI::App app{"Human evaluation datasheet tool"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kSchemaVersion));

  int criteria = 1;
  std::string new_output;
  auto* cmd_new = app.add_subcommand("new", "Write an empty datasheet");
  cmd_new->add_option("--criteria", criteria, "Number of quality criterion blocks (1-10)")
      ->check(CLI::Range(1, kMaxCriteria));
  cmd_new->add_option("output", new_output, "Output path ('-' for stdout)")->required();

  std::string input;
  std::string format = "text";
  auto* cmd_validate = app.add_subcommand("validate", "Check a datasheet against the rules");
  cmd_validate->add_option("input", input)->required();
  cmd_validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string to;
  std::string convert_output;
  auto* cmd_convert = app.add_subcommand("convert", "Convert between canonical, Markdown and LaTeX");
  cmd_convert->add_option("input", input, "Canonical .heds.json or Markdown .md")->required();
  cmd_convert->add_option("--to", to)
      ->required()
      ->check(CLI::IsMember({"markdown", "latex", "canonical"}));
  cmd_convert->add_option("output", convert_output, "Output path (stdout when omitted)");

  std::string a;
  std::string b;
  auto* cmd_diff = app.add_subcommand("diff", "List answers that differ");
  cmd_diff->add_option("a", a)->required();
  cmd_diff->add_option("b", b)->required();
  cmd_diff->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_compare = app.add_subcommand("compare", "Classify criterion pairs by comparability");
  cmd_compare->add_option("a", a)->required();
  cmd_compare->add_option("b", b)->required();
  cmd_compare->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  ServerOptions server_options;
  server_options.registry = registry_from_env();
  std::string registry_dir;
  auto* cmd_serve = app.add_subcommand("serve", "Run the local HTTP API");
  cmd_serve->add_option("--port", server_options.port)->check(CLI::Range(0, 65535));
  cmd_serve->add_option("--host", server_options.host);
  cmd_serve->add_option("--registry", registry_dir, "Registry directory (default $HEDS_REGISTRY)");

  std::string template_output;
  std::string template_to = "markdown";
  auto* cmd_template = app.add_subcommand("template", "Print the blank template");
  cmd_template->add_option("--to", template_to)->check(CLI::IsMember({"markdown", "latex"}));
  cmd_template->add_option("output", template_output);

  app.add_subcommand("schema", "Print the built-in schema as JSON");
  app.add_subcommand("rules", "List the validation rules");

  std::vector<std::string> where;
  auto* cmd_index = app.add_subcommand("index", "Index a registry directory");
  cmd_index->add_option("directory", registry_dir, "Default $HEDS_REGISTRY");
  cmd_index->add_option("--format", format)->check(CLI::IsMember({"json", "markdown", "text"}));
  cmd_index->add_option("--where", where, "Filter FIELD=VALUE, e.g. scope=extrinsic");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_new->parsed()) {
      Datasheet d = new_empty(schema);
      for (int i = 1; i < criteria; ++i) {
        d = add_criterion(std::move(d), schema);
      }
      write_output(new_output, serialize_canonical(d), out);
      return kExitOk;
    }
    if (cmd_validate->parsed()) {
      const auto report = validate(load_sheet(input, schema), schema);
      out << (format == "json" ? report_to_json(report) : report_to_text(report));
      return report.ok() ? kExitOk : kExitValidationErrors;
    }
    if (cmd_convert->parsed()) {
      const Datasheet d = load_sheet(input, schema);
      std::string result;
      if (to == "canonical") {
        result = serialize_canonical(d);
      } else {
        result = render(d, schema, *render_format_from_string(to));
      }
      write_output(convert_output, result, out);
      return kExitOk;
    }
    if (cmd_diff->parsed()) {
      check_same_version(a, b);
      const auto entries = diff(load_sheet(a, schema), load_sheet(b, schema), schema);
      out << (format == "json" ? diff_to_json(entries) : diff_to_text(entries));
      return kExitOk;
    }
    if (cmd_compare->parsed()) {
      check_same_version(a, b);
      const auto report = comparability(load_sheet(a, schema), load_sheet(b, schema));
      out << (format == "json" ? comparability_to_json(report) : comparability_to_text(report));
      return kExitOk;
    }
    if (cmd_serve->parsed()) {
      if (!registry_dir.empty()) {
        server_options.registry = registry_dir;
      }
      Server server(server_options, schema);
      const auto port = server.bind();
      if (!port) {
        err << "heds: cannot bind " << server_options.host << ":" << server_options.port << "\n";
        return kExitUsage;
      }
      err << "heds: serving on http://" << server_options.host << ":" << *port << "\n";
      server.run();
      return kExitOk;
    }
    if (cmd_template->parsed()) {
      write_output(template_output, render_blank(schema, *render_format_from_string(template_to)),
                   out);
      return kExitOk;
    }
    if (app.got_subcommand("schema")) {
      out << schema_to_json(schema);
      return kExitOk;
    }
    if (app.got_subcommand("rules")) {
      for (const auto& r : rule_catalogue()) {
        out << r.id << " (" << to_string(r.severity) << "): " << r.description << "\n";
      }
      return kExitOk;
    }
    if (cmd_index->parsed()) {
      std::optional<fs::path> dir =
          registry_dir.empty() ? registry_from_env() : std::optional<fs::path>(registry_dir);
      if (!dir) {
        err << "heds: no registry directory given and HEDS_REGISTRY is unset\n";
        return kExitUsage;
      }
      std::vector<std::pair<std::string, std::string>> filters;
      for (const auto& w : where) {
        const auto eq = w.find('=');
        const std::string field = w.substr(0, eq);
        if (eq == std::string::npos ||
            std::find(key_field_names().begin(), key_field_names().end(), field) ==
                key_field_names().end()) {
          err << "heds: bad --where '" << w << "'\n";
          return kExitUsage;
        }
        filters.emplace_back(field, w.substr(eq + 1));
      }
      RegistryIndex index = build_index(*dir, schema);
      if (!filters.empty()) {
        index.entries = query_index(index, [&](const ComparabilityKey& k) {
          return std::all_of(filters.begin(), filters.end(),
                             [&](const auto& f) { return key_field(k, f.first) == f.second; });
        });
      }
      out << (format == "json" ? index_to_json(index) : index_to_markdown(index));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "heds: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace heds
