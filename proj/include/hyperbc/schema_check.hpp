#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hyperbc {

// Validates a document against the JSON-Schema subset the bundled schemas use:
// type, properties, required, additionalProperties, items, enum, minItems,
// maxItems, minimum, exclusiveMinimum, maximum, oneOf. Returns "path: problem"
// strings, empty when the document conforms.
std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& doc);

}  // namespace hyperbc
