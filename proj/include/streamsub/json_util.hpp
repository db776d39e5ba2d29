#pragma once

#include <string>

#include <json.hpp>

#include "streamsub/rational.hpp"

namespace streamsub {

using Json = nlohmann::json;

// Exact rationals travel as {"num": ..., "den": ...}.  Components are JSON
// integers when they fit in 64 bits and decimal strings otherwise, so desk
// files stay readable while huge grid powers stay exact.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace streamsub
