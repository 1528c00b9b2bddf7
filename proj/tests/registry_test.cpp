#include <gtest/gtest.h>

#include <json.hpp>

#include "heds/compare.hpp"
#include "heds/error.hpp"
#include "support/fixtures.hpp"

namespace heds {
namespace {

using testing::golden_datasheet;
using testing::TempDir;
using testing::with;
using testing::write_file;

const Schema& S() { return builtin_schema(); }

TEST(Registry, BuildAndQuery) {
  TempDir dir;
  const auto g = golden_datasheet();
  write_file(dir / "b.heds.json", serialize_canonical(with(g, "4.2.3@1", "extrinsic")));
  write_file(dir / "a.heds.json", serialize_canonical(g));
  write_file(dir / "broken.heds.json", "{");
  write_file(dir / "notes.txt", "ignored");
  std::filesystem::create_directory(dir / "nested.heds.json");

  const auto index = build_index(dir.path(), S());
  ASSERT_EQ(index.entries.size(), 2u);
  EXPECT_EQ(index.entries[0].file, "a.heds.json");
  EXPECT_EQ(index.entries[1].file, "b.heds.json");
  EXPECT_EQ(index.entries[0].paper_link, "https://example.org/papers/weather-report-eval");
  EXPECT_EQ(index.entries[0].criterion_names, (std::vector<std::string>{"Fluency", "Accuracy"}));
  EXPECT_EQ(index.entries[0].error_count, 0);
  ASSERT_EQ(index.failures.size(), 1u);
  EXPECT_EQ(index.failures[0].file, "broken.heds.json");

  const auto extrinsic = query_index(index, [](const ComparabilityKey& k) {
    return k.scope == Scope::kExtrinsic;
  });
  ASSERT_EQ(extrinsic.size(), 1u);
  EXPECT_EQ(extrinsic[0].file, "b.heds.json");

  EXPECT_EQ(build_index(dir.path(), S()), index);
}

TEST(Registry, IncompleteBlocksHaveNoKey) {
  TempDir dir;
  write_file(dir / "x.heds.json", serialize_canonical(new_empty(S())));
  const auto index = build_index(dir.path(), S());
  ASSERT_EQ(index.entries.size(), 1u);
  ASSERT_EQ(index.entries[0].keys.size(), 1u);
  EXPECT_FALSE(index.entries[0].keys[0]);
  EXPECT_GT(index.entries[0].error_count, 0);
}

TEST(Registry, Exports) {
  TempDir dir;
  write_file(dir / "a.heds.json", serialize_canonical(golden_datasheet()));
  write_file(dir / "bad.heds.json", "[]");
  const auto index = build_index(dir.path(), S());
  const auto j = nlohmann::json::parse(index_to_json(index));
  EXPECT_EQ(j["entries"][0]["criteria"][1]["name"], "Accuracy");
  EXPECT_EQ(j["entries"][0]["criteria"][1]["key"],
            "(correctness, content, relative-to-input, objective, absolute, intrinsic)");
  EXPECT_EQ(j["failures"][0]["file"], "bad.heds.json");
  const auto table = index_to_markdown(index);
  EXPECT_NE(table.find("| a.heds.json | https://example.org/papers/weather-report-eval | 2 | Accuracy |"),
            std::string::npos);
  EXPECT_NE(table.find("- bad.heds.json: "), std::string::npos);
}

TEST(Registry, MissingDirectory) {
  try {
    build_index("/nonexistent/heds-registry", S());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

}  // namespace
}  // namespace heds
