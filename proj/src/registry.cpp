#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "heds/compare.hpp"
#include "heds/error.hpp"
#include "heds/validate.hpp"

namespace heds {

namespace {

bool has_canonical_extension(const std::string& name) {
  return name.size() > kCanonicalExtension.size() && name.ends_with(kCanonicalExtension);
}

std::string text_or_empty(const AnswerValue* v) {
  if (v == nullptr) {
    return {};
  }
  if (const auto* t = std::get_if<TextAnswer>(v)) {
    return t->content;
  }
  if (const auto* s = std::get_if<SentinelAnswer>(v)) {
    return std::string(token_of(s->token));
  }
  return {};
}

RegistryEntry entry_for(const std::string& file, const Datasheet& d, const Schema& schema) {
  RegistryEntry e;
  e.file = file;
  e.paper_link = text_or_empty(d.find(QuestionId("1.1")));
  for (const auto& block : d.criteria()) {
    e.criterion_names.push_back(text_or_empty(block.find("4.3.1")));
    try {
      e.keys.emplace_back(criterion_key(block));
    } catch (const Error&) {
      e.keys.emplace_back(std::nullopt);
    }
  }
  e.error_count = validate(d, schema).error_count;
  return e;
}

}  // namespace

RegistryIndex build_index(const std::filesystem::path& directory, const Schema& schema) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error(ErrorCode::kIo, "registry directory not found: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const auto& item : fs::directory_iterator(directory, ec)) {
    if (item.is_regular_file() && has_canonical_extension(item.path().filename().string())) {
      files.push_back(item.path());
    }
  }
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot read registry directory: " + ec.message());
  }
  std::sort(files.begin(), files.end());

  RegistryIndex index;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      index.failures.push_back({name, "io-error: cannot open file"});
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      index.entries.push_back(entry_for(name, parse_canonical(buf.str(), schema), schema));
    } catch (const Error& err) {
      index.failures.push_back({name, err.what()});
    }
  }
  return index;
}

std::string index_to_json(const RegistryIndex& index) {
  using nlohmann::ordered_json;
  auto entries = ordered_json::array();
  for (const auto& e : index.entries) {
    auto criteria = ordered_json::array();
    for (std::size_t i = 0; i < e.keys.size(); ++i) {
      criteria.push_back({{"index", i + 1},
                          {"name", e.criterion_names[i]},
                          {"key", e.keys[i] ? ordered_json(to_string(*e.keys[i]))
                                            : ordered_json(nullptr)}});
    }
    entries.push_back({{"file", e.file},
                       {"paper", e.paper_link},
                       {"criteria", std::move(criteria)},
                       {"errors", e.error_count}});
  }
  auto failures = ordered_json::array();
  for (const auto& f : index.failures) {
    failures.push_back({{"file", f.file}, {"error", f.error}});
  }
  ordered_json out;
  out["entries"] = std::move(entries);
  out["failures"] = std::move(failures);
  return out.dump(2) + "\n";
}

namespace {

// Keeps table cells on one line and stops stray pipes from splitting columns.
std::string cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\n' || c == '\r') {
      out += ' ';
    } else if (c == '|') {
      out += "\\|";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string index_to_markdown(const RegistryIndex& index) {
  std::string out = "| File | Paper | Criterion | Name | Key | Errors |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto& e : index.entries) {
    for (std::size_t i = 0; i < e.keys.size(); ++i) {
      out += "| " + cell(e.file) + " | " + cell(e.paper_link) + " | " + std::to_string(i + 1) +
             " | " + cell(e.criterion_names[i]) + " | " +
             (e.keys[i] ? to_string(*e.keys[i]) : std::string("incomplete")) + " | " +
             std::to_string(e.error_count) + " |\n";
    }
  }
  if (!index.failures.empty()) {
    out += "\nUnreadable files:\n\n";
    for (const auto& f : index.failures) {
      out += "- " + f.file + ": " + cell(f.error) + "\n";
    }
  }
  return out;
}

}  // namespace heds
