#pragma once

// JSON forms shared by the CLI and tests:
//   {"q":3,"n":4,"eigenindex":2,"d":2,"values":[{"w":"0120","re":0.5,"im":-1.0},...]}
// Omitted words carry the value 0. "eigenindex" may be null; "d" is present for sphere/ball data.

#include <optional>

#include <json.hpp>

#include "hamrecon/coeffs.hpp"
#include "hamrecon/local_dist.hpp"
#include "hamrecon/recon.hpp"

namespace hamrecon::io {

using Json = nlohmann::json;

Json to_json(const VertexFunction& f);
Json to_json(const SphereData& sphere, std::optional<int> eigenindex);
Json to_json(const BallData& ball, std::optional<int> eigenindex);
Json to_json(const ConditionReport& report);
Json to_json(const LocalDistribution& dist);

VertexFunction function_from_json(const Json& doc);

/// Sphere radius: `radius` if given, else the "d" field, else the common weight of the listed words.
SphereData sphere_from_json(const Json& doc, std::optional<int> radius = std::nullopt);

std::optional<int> eigenindex_from_json(const Json& doc);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace hamrecon::io
