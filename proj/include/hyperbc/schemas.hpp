#pragma once

#include <string>

#include "json.hpp"

namespace hyperbc {

// Embedded copies of the schema/ files, so validation does not depend on an
// install location. A test keeps them in lockstep with the shipped files.
// Names: "config", "spectrum_report", "design_report", "converge_report",
// "simulate_report", "observe_report".
const std::string& schema_text(const std::string& name);
nlohmann::json schema_json(const std::string& name);

}  // namespace hyperbc
