#pragma once

#include "tolpoly/polytope.hpp"

#include <json.hpp>

#include <string>

namespace tolpoly::io {

using Json = nlohmann::json;

/// Exact "p/q" string.
Json scalar_json(const Scalar& x);
Json vec_json(const Vec& v);

/// Accepts "p/q", decimal strings and plain JSON numbers. `path` is a JSON
/// pointer used in the SchemaError message.
Scalar scalar_from(const Json& j, const std::string& path);
Vec vec_from(const Json& j, const std::string& path, std::size_t expected_size);

/// Throws SchemaError with the byte offset on malformed text.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Json halfspace_json(const TaggedHalfSpace& h);
TaggedHalfSpace halfspace_from(const Json& j, const std::string& path, std::size_t n);

/// {"dim", "halfspaces", "vertices", "underlying"}; keys and rows in
/// canonical order so equal polytopes serialize to equal bytes.
Json polytope_json(const TrackedPolytope& P);

/// Without "vertices" the polytope is rebuilt by h_to_v. With "vertices"
/// the listed vertices and tags are kept after checking them against the
/// half-spaces, so export -> import is lossless.
TrackedPolytope polytope_from(const Json& j);

std::string dump(const Json& j);  // indent 2, trailing newline
TrackedPolytope read_polytope_file(const std::string& path);

struct OffExport {
  std::string off;
  Json caps;  // sidecar listing cap face indices
};

/// OFF mesh for a full-dimensional 3-polytope. NonCap faces come first,
/// then Cap faces; face vertices are counter-clockwise seen from outside.
/// Throws DimMismatch ("OFF export requires dim 3") otherwise.
OffExport export_off(const TrackedPolytope& P, int precision = 6);

/// "<dir>/<stem>.caps.json" for an OFF path "<dir>/<stem>.off".
std::string sidecar_path(const std::string& off_path);

/// Human-readable listing, rationals as p/q plus a 6-significant-digit value.
std::string polytope_text(const TrackedPolytope& P, const std::vector<std::string>& coordinate_names = {});

}  // namespace tolpoly::io
