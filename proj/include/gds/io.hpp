#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "gds/lnd.hpp"
#include "gds/surface.hpp"

namespace gds::io {

/// Surface spec: {"modulus": "t", "f": "...", "phi": "..."}; `modulus`
/// defaults to `t` (K = Q). A non-empty override replaces it.
Surface surface_from_json(const nlohmann::json& j, const std::string& modulus_override = {});
Surface load_surface(const std::filesystem::path& path, const std::string& modulus_override = {});
nlohmann::json surface_to_json(const Surface& s);

/// Derivation spec: {"dx": "...", "dy": "...", "dz": "..."}.
Derivation derivation_from_json(const Surface& s, const nlohmann::json& j);
Derivation load_derivation(const Surface& s, const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace gds::io
