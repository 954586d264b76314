#pragma once

#include <string>
#include <vector>

namespace chowform {

/// JSON text of a bundled fixture document, or an empty string when the name
/// is unknown. Bundled: "dp3" (the del Pezzo 3 model-I quiver on its
/// six-column lattice) and "triangle" (the minimal N = 3 instance).
std::string fixture_json(const std::string& name);

std::vector<std::string> fixture_names();

} // namespace chowform
