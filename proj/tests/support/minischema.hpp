#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace testsupport {

// Validates a document against the subset of JSON Schema the docs/ files
// use: type (string or list), properties, required, additionalProperties
// (boolean form), items, enum, minimum, maximum, oneOf. Returns one message
// per violation; empty means valid.
std::vector<std::string> validate_schema(const nlohmann::json& schema,
                                         const nlohmann::json& doc);

} // namespace testsupport
