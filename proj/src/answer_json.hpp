#pragma once

#include <json.hpp>

#include "heds/document.hpp"

namespace heds::detail {

nlohmann::ordered_json answer_json(const AnswerValue& value);

}  // namespace heds::detail
