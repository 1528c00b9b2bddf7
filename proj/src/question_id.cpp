#include "heds/question_id.hpp"

#include <charconv>

#include "heds/error.hpp"

namespace heds {

bool is_well_formed_path(std::string_view path) {
  int components = 0;
  std::size_t i = 0;
  while (true) {
    const std::size_t start = i;
    while (i < path.size() && path[i] >= '0' && path[i] <= '9') {
      ++i;
    }
    if (i == start || i - start > 3) {
      return false;
    }
    ++components;
    if (i == path.size()) {
      break;
    }
    if (path[i] != '.') {
      return false;
    }
    ++i;
  }
  return components >= 2 && components <= 3;
}

std::vector<int> path_components(std::string_view path) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= path.size()) {
    std::size_t dot = path.find('.', i);
    if (dot == std::string_view::npos) {
      dot = path.size();
    }
    int value = 0;
    std::from_chars(path.data() + i, path.data() + dot, value);
    out.push_back(value);
    i = dot + 1;
  }
  return out;
}

int part_of(std::string_view path) {
  int value = 0;
  const auto dot = path.find('.');
  std::from_chars(path.data(), path.data() + (dot == std::string_view::npos ? path.size() : dot),
                  value);
  return value;
}

bool is_criterion_path(std::string_view path) {
  return is_well_formed_path(path) && part_of(path) == kCriterionPart;
}

std::strong_ordering compare_paths(std::string_view a, std::string_view b) {
  const auto ca = path_components(a);
  const auto cb = path_components(b);
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

QuestionId::QuestionId(std::string path, std::optional<int> criterion_index)
    : path_(std::move(path)), criterion_index_(criterion_index) {
  if (!is_well_formed_path(path_)) {
    throw Error(ErrorCode::kUnknownQuestion, "malformed question path '" + path_ + "'", {path_});
  }
  const bool in_block = part_of(path_) == kCriterionPart;
  if (in_block && !criterion_index_) {
    throw Error(ErrorCode::kUnknownQuestion,
                "question " + path_ + " belongs to a criterion block and needs an index",
                {path_});
  }
  if (!in_block && criterion_index_) {
    throw Error(ErrorCode::kUnknownQuestion,
                "question " + path_ + " is not part of a criterion block", {path_});
  }
}

QuestionId QuestionId::parse(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    return QuestionId(std::string(text));
  }
  int index = 0;
  const auto rest = text.substr(at + 1);
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) {
    throw Error(ErrorCode::kUnknownQuestion, "malformed question id '" + std::string(text) + "'",
                {std::string(text)});
  }
  return QuestionId(std::string(text.substr(0, at)), index);
}

std::string QuestionId::to_string() const {
  if (criterion_index_) {
    return path_ + "@" + std::to_string(*criterion_index_);
  }
  return path_;
}

std::strong_ordering QuestionId::operator<=>(const QuestionId& other) const {
  const auto ca = path_components(path_);
  const auto cb = path_components(other.path_);
  if (auto c = ca.front() <=> cb.front(); c != 0) {
    return c;
  }
  if (auto c = criterion_index_.value_or(0) <=> other.criterion_index_.value_or(0); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(), cb.begin(), cb.end());
}

}  // namespace heds
