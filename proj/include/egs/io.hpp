#pragma once

// JSON instance and spline-set files.
//
// Instance: {"ring": {...}, "vertices": [{"name", "label"}...], "edges": [{"u", "v", "label"}...]}
// Ring:     {"kind": "integers"} or
//           {"kind": "polynomial", "variables": ["x", ...], "base": "integers" | "rationals"}
// Splines:  {"splines": [[f_v1, ..., f_vn], ...]}, components as expression strings.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "egs/graph.hpp"
#include "egs/splines.hpp"

namespace egs {

/// Malformed JSON, schema violations, and unparseable expressions.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RingDescriptor parse_ring(const nlohmann::json& j);
nlohmann::json ring_to_json(const RingDescriptor& ring);

/// Throws FormatError for format problems and ValidationError when the
/// described graph breaks a graph invariant.
LabeledGraph parse_instance(const nlohmann::json& j);
LabeledGraph parse_instance_text(std::string_view text);
LabeledGraph load_instance(const std::filesystem::path& path);
nlohmann::json instance_to_json(const LabeledGraph& g);

/// Each spline must have one component per vertex of g (DimensionError otherwise).
SplineMatrix parse_spline_set(const nlohmann::json& j, const LabeledGraph& g);
SplineMatrix load_spline_set(const std::filesystem::path& path, const LabeledGraph& g);
/// {"spline": [...]} or a spline set holding exactly one spline.
Components parse_target(const nlohmann::json& j, const LabeledGraph& g);
Components load_target(const std::filesystem::path& path, const LabeledGraph& g);

nlohmann::json components_to_json(std::span<const RingElement> f);
nlohmann::json spline_set_to_json(const std::vector<Components>& splines);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace egs
