#pragma once

#include "modhom/structure.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace modhom {

nlohmann::json structure_to_json(const PointedStructure& m);
PointedStructure structure_from_json(const nlohmann::json& j);

PointedStructure load_structure_file(const std::string& path);
void save_structure_file(const PointedStructure& m, const std::string& path);

std::string to_dot(const PointedStructure& m);

} // namespace modhom
