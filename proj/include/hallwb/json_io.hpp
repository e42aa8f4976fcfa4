#pragma once

#include <string>

#include "hallwb/representation.hpp"
#include "json.hpp"

namespace hallwb {

using Json = nlohmann::json;

// {"quiver":<name>,"p":<prime>,"dims":{vertex:dim},"maps":{label:[[row],...]}}
Json to_json(const Representation& m);
// Validates the quiver name, prime, shapes and entry ranges; throws InputError.
Representation representation_from_json(const Json& j, QuiverPtr quiver);
Representation load_representation(const std::string& path, QuiverPtr quiver);

Json quiver_to_json(const Quiver& q);

}  // namespace hallwb
