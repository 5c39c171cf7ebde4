#pragma once

#include <json.hpp>

#include "contact_tensor/manifest.hpp"

namespace ctensor {

nlohmann::json manifest_json(const Manifest& m);

}  // namespace ctensor
