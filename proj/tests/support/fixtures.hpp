#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "heds/document.hpp"
#include "heds/schema.hpp"

namespace heds::testing {

/// Sets one answer from a short literal, dispatching on the question kind:
/// choice questions take comma-separated option keys, everything else text.
Datasheet with(Datasheet d, std::string_view id, std::string_view value,
               std::string_view other_text = {});

/// A fully consistent two-criterion sheet: validate() reports nothing.
Datasheet golden_datasheet();

struct RuleFixture {
  std::string rule;
  Datasheet sheet;
};

/// One sheet per catalogue rule, each the golden sheet with a single fault.
std::vector<RuleFixture> rule_fixtures();

/// A criterion block answer set for a 4.3.3/4.3.4 pair on the golden sheet.
Datasheet golden_with_scale(std::string_view size, std::string_view values);

/// Random sheet covering every answer variant, sentinels, unanswered
/// questions, provenance, and text built to stress the Markdown fences.
Datasheet random_datasheet(std::mt19937_64& rng);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace heds::testing
