#pragma once
#include <json.hpp>

#include "scx/json_io.hpp"

namespace scx::detail {

using json = nlohmann::ordered_json;

json to_json(const SComplex& C);
json to_json(const ModulePresentation& p);
json to_json(const Matrix& M);
SComplex complex_from_json(const json& j);
ModulePresentation presentation_from_json(const json& j);

}  // namespace scx::detail
