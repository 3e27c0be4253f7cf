#include "tolpoly/io.hpp"

#include "tolpoly/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tolpoly::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, (path.empty() ? std::string("/") : path) + ": " + what);
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Counter-clockwise order of a face's vertices, seen from the side `normal` points to.
std::vector<std::size_t> cyclic_order(const TrackedPolytope& P, std::vector<std::size_t> ids, const Vec& normal) {
  Vec c = zeros(3);
  for (auto i : ids) c = add(c, P.vertices[i].coords);
  c = scale(c, Scalar(1, static_cast<unsigned long>(ids.size())));
  const Vec e1 = sub(P.vertices[ids.front()].coords, c);
  const Vec e2 = cross(normal, e1);
  struct Planar {
    std::size_t id;
    Scalar x, y;
  };
  std::vector<Planar> pts;
  for (auto i : ids) {
    const Vec d = sub(P.vertices[i].coords, c);
    pts.push_back({i, dot(d, e1), dot(d, e2)});
  }
  auto half = [](const Planar& p) { return (sgn(p.y) > 0 || (sgn(p.y) == 0 && sgn(p.x) > 0)) ? 0 : 1; };
  std::sort(pts.begin(), pts.end(), [&](const Planar& p, const Planar& q) {
    if (half(p) != half(q)) return half(p) < half(q);
    return sgn(p.x * q.y - p.y * q.x) > 0;
  });
  std::vector<std::size_t> out;
  for (const auto& p : pts) out.push_back(p.id);
  return out;
}

}  // namespace

Json scalar_json(const Scalar& x) { return to_string(x); }

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

Scalar scalar_from(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return parse_scalar(j.dump());
    if (j.is_number_float()) return parse_scalar(j.dump());
  } catch (const std::invalid_argument& e) {
    schema(path, std::string("bad number: ") + e.what());
  }
  schema(path, "expected a number or a \"p/q\" string");
}

Vec vec_from(const Json& j, const std::string& path, std::size_t expected_size) {
  if (!j.is_array()) schema(path, "expected an array");
  if (j.size() != expected_size)
    throw Error(ErrorKind::InconsistentDimension, path + ": expected " + std::to_string(expected_size) +
                                                      " components, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from(j[i], path + "/" + std::to_string(i)));
  return v;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, "/: malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::SchemaError, "cannot write " + path);
  out << content;
}

Json halfspace_json(const TaggedHalfSpace& h) {
  return {{"a", vec_json(h.normal)}, {"b", scalar_json(h.offset)}, {"tag", to_string(h.tag)}, {"prov", h.provenance}};
}

TaggedHalfSpace halfspace_from(const Json& j, const std::string& path, std::size_t n) {
  if (!j.is_object()) schema(path, "expected an object");
  if (!j.contains("a")) schema(path + "/a", "missing");
  if (!j.contains("b")) schema(path + "/b", "missing");
  Vec a = vec_from(j["a"], path + "/a", n);
  Scalar b = scalar_from(j["b"], path + "/b");
  Tag tag = Tag::NonCap;
  if (j.contains("tag")) {
    if (!j["tag"].is_string()) schema(path + "/tag", "expected \"cap\" or \"noncap\"");
    try {
      tag = parse_tag(j["tag"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema(path + "/tag", e.what());
    }
  }
  std::string prov;
  if (j.contains("prov")) {
    if (!j["prov"].is_string()) schema(path + "/prov", "expected a string");
    prov = j["prov"].get<std::string>();
  }
  try {
    return canonicalize(std::move(a), std::move(b), tag, std::move(prov));
  } catch (const Error& e) {
    schema(path, e.message());
  }
}

Json polytope_json(const TrackedPolytope& P) {
  Json hs = Json::array();
  for (const auto& h : P.halfspaces) hs.push_back(halfspace_json(h));
  Json vs = Json::array();
  for (const auto& v : P.vertices) vs.push_back({{"x", vec_json(v.coords)}, {"tag", to_string(v.tag)}});
  std::vector<TaggedHalfSpace> under = P.underlying;
  std::sort(under.begin(), under.end(), canonical_less);
  Json us = Json::array();
  for (const auto& h : under) us.push_back(halfspace_json(h));
  return {{"dim", P.dim}, {"halfspaces", hs}, {"vertices", vs}, {"underlying", us}};
}

TrackedPolytope polytope_from(const Json& j) {
  if (!j.is_object()) schema("", "expected a polytope object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
    schema("/dim", "expected a positive integer");
  const std::size_t n = j["dim"].get<std::size_t>();
  if (!j.contains("halfspaces") || !j["halfspaces"].is_array()) schema("/halfspaces", "expected an array");

  std::vector<TaggedHalfSpace> rows;
  for (std::size_t i = 0; i < j["halfspaces"].size(); ++i)
    rows.push_back(halfspace_from(j["halfspaces"][i], "/halfspaces/" + std::to_string(i), n));

  TrackedPolytope P = h_to_v(rows, n);

  if (j.contains("vertices")) {
    const Json& vs = j["vertices"];
    if (!vs.is_array()) schema("/vertices", "expected an array");
    std::vector<TaggedVertex> listed;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string path = "/vertices/" + std::to_string(i);
      TaggedVertex v;
      if (vs[i].is_array()) {
        v.coords = vec_from(vs[i], path, n);
      } else if (vs[i].is_object() && vs[i].contains("x")) {
        v.coords = vec_from(vs[i]["x"], path + "/x", n);
        if (vs[i].contains("tag")) {
          try {
            v.tag = parse_tag(vs[i]["tag"].get<std::string>());
          } catch (const std::exception& e) {
            schema(path + "/tag", e.what());
          }
        }
      } else {
        schema(path, "expected [x...] or {\"x\": [...], \"tag\": ...}");
      }
      listed.push_back(std::move(v));
    }
    std::sort(listed.begin(), listed.end(), [](const auto& a, const auto& b) { return a.coords < b.coords; });
    if (listed.size() != P.vertices.size()) schema("/vertices", "vertex list disagrees with the half-spaces");
    for (std::size_t i = 0; i < listed.size(); ++i) {
      if (listed[i].coords != P.vertices[i].coords) schema("/vertices", "vertex list disagrees with the half-spaces");
      if (vs[0].is_object()) P.vertices[i].tag = listed[i].tag;
    }
  }

  if (j.contains("underlying")) {
    const Json& us = j["underlying"];
    if (!us.is_array()) schema("/underlying", "expected an array");
    P.underlying.clear();
    for (std::size_t i = 0; i < us.size(); ++i)
      P.underlying.push_back(halfspace_from(us[i], "/underlying/" + std::to_string(i), n));
    std::sort(P.underlying.begin(), P.underlying.end(), canonical_less);
  }
  return P;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

TrackedPolytope read_polytope_file(const std::string& path) { return polytope_from(read_json_file(path)); }

OffExport export_off(const TrackedPolytope& P, int precision) {
  if (P.dim != 3 || P.affine_dim() != 3) throw Error(ErrorKind::DimMismatch, "OFF export requires dim 3");
  std::vector<std::size_t> order;
  for (Tag t : {Tag::NonCap, Tag::Cap})
    for (std::size_t h = 0; h < P.halfspaces.size(); ++h)
      if (P.halfspaces[h].tag == t) order.push_back(h);

  std::ostringstream off;
  off << "OFF\n" << P.vertices.size() << ' ' << order.size() << " 0\n";
  for (const auto& v : P.vertices)
    off << to_decimal(v.coords[0], precision) << ' ' << to_decimal(v.coords[1], precision) << ' '
        << to_decimal(v.coords[2], precision) << '\n';

  Json cap_faces = Json::array(), noncap_faces = Json::array(), faces = Json::array();
  for (std::size_t f = 0; f < order.size(); ++f) {
    const auto& h = P.halfspaces[order[f]];
    const auto ids = cyclic_order(P, P.incidence[order[f]], h.normal);
    off << ids.size();
    for (auto i : ids) off << ' ' << i;
    off << '\n';
    (h.tag == Tag::Cap ? cap_faces : noncap_faces).push_back(f);
    Json face = halfspace_json(h);
    face["face"] = f;
    faces.push_back(std::move(face));
  }
  return {off.str(), {{"cap_faces", cap_faces}, {"noncap_faces", noncap_faces}, {"faces", faces}}};
}

std::string sidecar_path(const std::string& off_path) {
  std::string stem = off_path;
  if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".off") == 0) stem.resize(stem.size() - 4);
  return stem + ".caps.json";
}

std::string polytope_text(const TrackedPolytope& P, const std::vector<std::string>& names) {
  auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i); };
  std::ostringstream out;
  out << "dim " << P.dim << ", affine dim " << P.affine_dim() << ", " << P.vertices.size() << " vertices, "
      << P.halfspaces.size() << " half-spaces (" << P.count(Tag::NonCap) << " noncap, " << P.count(Tag::Cap)
      << " cap)\n";
  for (const auto& h : P.halfspaces) {
    out << "  [" << to_string(h.tag) << "] ";
    bool first = true;
    for (std::size_t i = 0; i < h.normal.size(); ++i) {
      if (sgn(h.normal[i]) == 0) continue;
      if (!first) out << " + ";
      out << to_string(h.normal[i]) << "*" << name(i);
      first = false;
    }
    out << " <= " << to_string(h.offset) << " (" << to_display(h.offset) << ")";
    if (!h.provenance.empty()) out << "  {" << h.provenance << "}";
    out << '\n';
  }
  for (const auto& v : P.vertices) {
    out << "  vertex [" << to_string(v.tag) << "] (";
    for (std::size_t i = 0; i < v.coords.size(); ++i)
      out << (i ? ", " : "") << to_string(v.coords[i]) << " ~ " << to_display(v.coords[i]);
    out << ")\n";
  }
  return out.str();
}

}  // namespace tolpoly::io
