#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "rieszap/constructions.hpp"
#include "rieszap/spectral.hpp"
#include "rieszap/torus.hpp"

namespace rieszap::io {

using Json = nlohmann::ordered_json;

// {"arcs": [[0.0, 0.3], [0.5, 0.6]]}; reading applies normalize.
Json set_to_json(const IntervalSet& set);
IntervalSet set_from_json(const Json& j);
IntervalSet load_set(const std::filesystem::path& path);
void save_set(const std::filesystem::path& path, const IntervalSet& set);

Json report_to_json(const RieszReport& report);

// {"gamma": g, "blocks": [{"n", "step", "length", "shift", "cert_lambda_min", "target", ...}],
//  "set": <path string or inline set object>}
Json build_to_json(const LambdaBuild& build, const std::optional<std::string>& set_ref = std::nullopt);
// A string "set" is resolved relative to base_dir.
LambdaBuild build_from_json(const Json& j, const std::filesystem::path& base_dir = {});
LambdaBuild load_build(const std::filesystem::path& path);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rieszap::io
