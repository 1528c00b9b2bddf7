#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heds {

inline constexpr int kCriterionPart = 4;

/// True if `path` looks like "3.2" or "4.3.11": digits separated by dots,
/// two or three components.
bool is_well_formed_path(std::string_view path);

/// Numeric components of a dotted path. Requires a well-formed path.
std::vector<int> path_components(std::string_view path);

/// Part number of a dotted path ("4.3.3" -> 4).
int part_of(std::string_view path);

bool is_criterion_path(std::string_view path);

/// Numeric ordering over dotted paths: "4.3.2" < "4.3.10".
std::strong_ordering compare_paths(std::string_view a, std::string_view b);

struct PathLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const {
    return compare_paths(a, b) < 0;
  }
};

/// Address of one answer slot in a datasheet. Criterion-block questions carry
/// the 1-based index of the block they belong to.
class QuestionId {
 public:
  /// Throws kUnknownQuestion when the path is malformed or the criterion
  /// index is present for a fixed question (or missing for a criterion one).
  explicit QuestionId(std::string path, std::optional<int> criterion_index = std::nullopt);

  /// Parses "3.2.1" or "4.3.3@2".
  static QuestionId parse(std::string_view text);

  const std::string& path() const noexcept { return path_; }
  const std::optional<int>& criterion_index() const noexcept { return criterion_index_; }

  /// "3.2.1" or "4.3.3@2".
  std::string to_string() const;

  bool operator==(const QuestionId&) const = default;

  /// Fixed parts 1-3, then criterion blocks in index order, then part 5.
  std::strong_ordering operator<=>(const QuestionId& other) const;

 private:
  std::string path_;
  std::optional<int> criterion_index_;
};

}  // namespace heds
