#pragma once

#include <string>

#include <json.hpp>
#include "spbw/algebra.hpp"

namespace spbw {

using Json = nlohmann::json;

// JSON schema of the definition document, as published in the README.
const Json& definition_schema();

// Schema check (unknown keys rejected, indices in range), then ring and presentation validation.
// Structural problems raise DefinitionError; ring and presentation errors keep their own codes.
ExtensionPtr load_definition(const Json& doc, const Limits& limits = {});
ExtensionPtr load_definition_text(const std::string& text, const Limits& limits = {});
ExtensionPtr load_definition_file(const std::string& path, const Limits& limits = {});

Json ring_to_json(const RingDescriptor& d);
RingDescriptor ring_from_json(const Json& j);

// Canonical document for a validated extension; load_definition(to_definition(a)) reproduces it.
Json to_definition(const SkewExtension& a);
// Two-space indentation, sorted keys, trailing newline.
std::string canonical_text(const Json& doc);

}  // namespace spbw
