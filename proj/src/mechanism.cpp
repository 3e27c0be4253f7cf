#include "tolpoly/mechanism.hpp"

#include "tolpoly/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace tolpoly {

namespace {

using io::Json;

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, (path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  if (!j.contains(key)) schema(path + "/" + key, "missing");
  return j[key];
}

std::string string_field(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_string()) schema(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

template <class F>
auto named(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const std::invalid_argument& e) {
    schema(path, e.what());
  }
}

struct SurfaceRef {
  int part = 0;
  int index = 0;
};

// "i,j" with non-negative integers.
std::optional<SurfaceRef> parse_ref(std::string_view s) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto num = [](std::string_view t) -> std::optional<int> {
    if (t.empty() || t.size() > 6) return std::nullopt;
    int v = 0;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  auto a = num(s.substr(0, comma));
  auto b = num(s.substr(comma + 1));
  if (!a || !b) return std::nullopt;
  return SurfaceRef{*a, *b};
}

std::string ref_string(const SurfaceRef& r) { return std::to_string(r.part) + "," + std::to_string(r.index); }

// Strips an optional "P_{...}" or "𝒫_{...}" wrapper and blanks.
std::string bare_id(std::string id) {
  id.erase(std::remove_if(id.begin(), id.end(), [](unsigned char c) { return std::isspace(c); }), id.end());
  for (const std::string prefix : {"P_{", "\xF0\x9D\x92\xAB_{"}) {
    if (id.rfind(prefix, 0) == 0 && !id.empty() && id.back() == '}') return id.substr(prefix.size(), id.size() - prefix.size() - 1);
  }
  return id;
}

std::optional<std::pair<SurfaceRef, SurfaceRef>> parse_pair(const std::string& id) {
  const auto slash = id.find('/');
  if (slash == std::string::npos) return std::nullopt;
  auto a = parse_ref(std::string_view(id).substr(0, slash));
  auto b = parse_ref(std::string_view(id).substr(slash + 1));
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

Frame frame_from(const Json& j, const std::string& path) {
  Frame f;
  f.u = io::vec_from(field(j, "u", path), path + "/u", 3);
  f.v = io::vec_from(field(j, "v", path), path + "/v", 3);
  f.w = io::vec_from(field(j, "w", path), path + "/w", 3);
  try {
    f.validate();
  } catch (const Error& e) {
    schema(path, e.message());
  }
  return f;
}

std::vector<ConstraintPoint> constraint_points(const Json& j, const std::string& path,
                                               const std::map<std::string, Vec>& points) {
  if (!j.is_array()) schema(path, "expected an array");
  std::vector<ConstraintPoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    ConstraintPoint cp;
    const Json& where = field(j[i], "point", p);
    if (where.is_string()) {
      cp.name = where.get<std::string>();
      auto it = points.find(cp.name);
      if (it == points.end()) throw Error(ErrorKind::UnknownReference, p + "/point: no point named '" + cp.name + "'");
      cp.point = it->second;
    } else {
      cp.name = "p" + std::to_string(i);
      cp.point = io::vec_from(where, p + "/point", 3);
    }
    cp.normal = io::vec_from(field(j[i], "normal", p), p + "/normal", 3);
    if (is_zero(cp.normal)) schema(p + "/normal", "zero normal");
    out.push_back(std::move(cp));
  }
  if (out.empty()) schema(path, "needs at least one point");
  return out;
}

Expr expr_from(const Json& j, const std::string& path) {
  Expr e;
  e.path = path;
  if (j.is_string()) {
    e.leaf = bare_id(j.get<std::string>());
    return e;
  }
  if (!j.is_object() || j.size() != 1) schema(path, "expected a leaf id, {\"sum\": [...]} or {\"intersect\": [...]}");
  const auto& [key, value] = *j.items().begin();
  if (key == "sum") e.kind = Expr::Kind::Sum;
  else if (key == "intersect") e.kind = Expr::Kind::Intersect;
  else schema(path + "/" + key, "unknown operator");
  const std::string base = path + "/" + key;
  if (!value.is_array() || value.empty()) schema(base, "expected a non-empty array");
  if (e.kind == Expr::Kind::Intersect && value.size() < 2) schema(base, "intersection needs at least two operands");
  for (std::size_t i = 0; i < value.size(); ++i) e.children.push_back(expr_from(value[i], base + "/" + std::to_string(i)));
  return e;
}

void collect_leaves(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == Expr::Kind::Leaf) out.push_back(&e);
  for (const auto& c : e.children) collect_leaves(c, out);
}

enum class LeafKind { Geometric, GeometricReversed, Contact, ContactReversed };

struct LeafTarget {
  LeafKind kind;
  const SurfaceSpec* surface = nullptr;
  const JointSpec* joint = nullptr;
};

LeafTarget resolve(const MechanismModel& m, const std::string& raw) {
  const std::string id = bare_id(raw);
  if (auto pr = parse_pair(id)) {
    const auto& [a, b] = *pr;
    if (a.part == b.part && b.index == 0 && a.index != 0)
      if (auto* s = m.surface(ref_string(a))) return {LeafKind::Geometric, s, nullptr};
    if (a.part == b.part && a.index == 0 && b.index != 0)
      if (auto* s = m.surface(ref_string(b))) return {LeafKind::GeometricReversed, s, nullptr};
    if (auto* jt = m.joint(id)) return {LeafKind::Contact, nullptr, jt};
    if (auto* jt = m.joint(ref_string(b) + "/" + ref_string(a))) return {LeafKind::ContactReversed, nullptr, jt};
  }
  throw Error(ErrorKind::UnknownReference, "'" + raw + "' names no declared surface or joint");
}

template <class F>
auto at_node(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message());
  }
}

std::string rows_text(const std::vector<TaggedHalfSpace>& rows) {
  std::string s = "{";
  for (std::size_t i = 0; i < rows.size(); ++i)
    s += (i ? "; " : "") + to_string(rows[i].normal) + " <= " + to_string(rows[i].offset);
  return s + "}";
}

bool same_rows(const std::vector<TaggedHalfSpace>& a, const std::vector<TaggedHalfSpace>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_halfspace(b[i])) return false;
  return true;
}

std::string_view kind_name(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Leaf: return "leaf";
    case Expr::Kind::Sum: return "sum";
    case Expr::Kind::Intersect: return "intersect";
  }
  return "?";
}

class Evaluator {
 public:
  Evaluator(const MechanismModel& m, CapConfig caps, const EvalOptions& opts, ComplianceReport& out)
      : m_(m), caps_(std::move(caps)), opts_(opts), out_(out) {}

  TrackedPolytope eval(const Expr& e) {
    NodeSnapshot snap;
    snap.path = e.path;
    snap.kind = e.kind;
    snap.label = e.kind == Expr::Kind::Leaf ? e.leaf : std::string(kind_name(e.kind));

    if (e.kind == Expr::Kind::Leaf) {
      snap.polytope = at_node(e.path, [&] { return leaf_polytope(m_, e.leaf, caps_); });
    } else {
      std::vector<TrackedPolytope> ops;
      for (const auto& c : e.children) ops.push_back(eval(c));
      if (e.kind == Expr::Kind::Sum) {
        TrackedPolytope acc = std::move(ops.front());
        for (std::size_t i = 1; i < ops.size(); ++i) {
          auto [S, cert] = at_node(e.path, [&] { return minkowski_sum(acc, ops[i]); });
          snap.disagreements += cert.disagreements.size();
          acc = std::move(S);
        }
        snap.polytope = std::move(acc);
      } else {
        Scalar delta;
        if (opts_.delta) delta = *opts_.delta;
        else if (m_.delta) delta = *m_.delta;
        else {
          std::vector<Vec> pts;
          for (const auto& P : ops)
            for (const auto& v : P.vertices) pts.push_back(v.coords);
          delta = default_margin(pts);
        }
        delta *= opts_.delta_scale;
        auto rep = at_node(e.path, [&] { return capped_intersection(ops, delta); });
        snap.polytope = std::move(rep.result);
        snap.naive_differs = rep.naive_differs;
        snap.margin = delta;
      }
    }
    TrackedPolytope result = snap.polytope;
    out_.nodes.push_back(std::move(snap));
    return result;
  }

 private:
  const MechanismModel& m_;
  CapConfig caps_;
  const EvalOptions& opts_;
  ComplianceReport& out_;
};

Json fc_json(const FunctionalCondition& fc) {
  return {{"direction", io::vec_json(fc.direction)},
          {"dev_inf", io::scalar_json(fc.dev_inf)},
          {"dev_sup", io::scalar_json(fc.dev_sup)}};
}

}  // namespace

std::set<int> MechanismModel::parts() const {
  std::set<int> out;
  for (const auto& s : surfaces)
    if (auto r = parse_ref(s.id)) out.insert(r->part);
  for (const auto& j : joints)
    if (auto pr = parse_pair(j.id)) {
      out.insert(pr->first.part);
      out.insert(pr->second.part);
    }
  return out;
}

const SurfaceSpec* MechanismModel::surface(const std::string& id) const {
  for (const auto& s : surfaces)
    if (s.id == id) return &s;
  return nullptr;
}

const JointSpec* MechanismModel::joint(const std::string& id) const {
  for (const auto& j : joints)
    if (j.id == id) return &j;
  return nullptr;
}

DisplacementSpace space_from(const Json& j, const std::string& path) {
  const Json& d = field(j, "dim", path);
  if (!d.is_number_integer()) schema(path + "/dim", "expected 3 or 6");
  const auto dim = d.get<long long>();
  if (dim != 3 && dim != 6)
    throw Error(ErrorKind::InconsistentDimension, path + "/dim: displacement space must have dim 3 or 6");
  Vec M{0, 0, 0};
  if (j.contains("point_M")) M = io::vec_from(j["point_M"], path + "/point_M", 3);
  DisplacementSpace s = dim == 3 ? DisplacementSpace::planar(M) : DisplacementSpace::spatial(M);
  if (j.contains("coordinates")) {
    const Json& c = j["coordinates"];
    if (!c.is_array()) schema(path + "/coordinates", "expected an array of names");
    std::vector<std::string> names;
    for (const auto& x : c) {
      if (!x.is_string()) schema(path + "/coordinates", "expected an array of names");
      names.push_back(x.get<std::string>());
    }
    if (names != s.coordinate_names())
      throw Error(ErrorKind::InconsistentDimension,
                  path + "/coordinates: expected the " + std::to_string(dim) + " coordinates of the space, in order");
  }
  return s;
}

std::map<std::string, Vec> points_from(const Json& j, const std::string& path) {
  std::map<std::string, Vec> out;
  if (j.is_null()) return out;
  if (!j.is_object()) schema(path, "expected an object of name: [x, y, z]");
  for (const auto& [name, value] : j.items()) out[name] = io::vec_from(value, path + "/" + name, 3);
  return out;
}

SurfaceSpec surface_from(const Json& j, const std::string& path, const std::map<std::string, Vec>& points) {
  SurfaceSpec s;
  s.id = bare_id(string_field(j, "id", path));
  auto ref = parse_ref(s.id);
  if (!ref || ref->index == 0) schema(path + "/id", "expected \"i,j\" with j > 0");
  s.cls = named(path + "/class", [&] { return parse_surface_class(string_field(j, "class", path)); });
  if (j.contains("frame")) s.frame = frame_from(j["frame"], path + "/frame");
  const std::string zp = path + "/zone";
  const Json& z = field(j, "zone", path);
  if (!z.is_object()) schema(zp, "expected an object");
  if (z.contains("d_inf") || z.contains("d_sup")) {
    s.zone.d_inf = io::scalar_from(field(z, "d_inf", zp), zp + "/d_inf");
    s.zone.d_sup = io::scalar_from(field(z, "d_sup", zp), zp + "/d_sup");
    s.zone.t = s.zone.d_sup - s.zone.d_inf;
    if (z.contains("t") && io::scalar_from(z["t"], zp + "/t") != s.zone.t) schema(zp + "/t", "t differs from d_sup - d_inf");
  } else {
    const Scalar t = io::scalar_from(field(z, "t", zp), zp + "/t");
    if (sgn(t) < 0) schema(zp + "/t", "negative zone size");
    s.zone = ToleranceZone::symmetric(t);
  }
  s.points = constraint_points(field(j, "constraint_points", path), path + "/constraint_points", points);
  return s;
}

JointSpec joint_from(const Json& j, const std::string& path, const std::map<std::string, Vec>& points) {
  JointSpec jt;
  jt.id = bare_id(string_field(j, "id", path));
  auto pr = parse_pair(jt.id);
  if (!pr || pr->first.index == 0 || pr->second.index == 0 || pr->first.part == pr->second.part)
    schema(path + "/id", "expected \"i,j/k,l\" between two parts");
  jt.type = named(path + "/type", [&] { return parse_joint_type(string_field(j, "type", path)); });
  jt.nature = named(path + "/nature", [&] { return parse_contact_nature(string_field(j, "nature", path)); });
  if (jt.nature == ContactNature::Bilateral) jt.clearance = io::scalar_from(field(j, "clearance_J", path), path + "/clearance_J");
  if (jt.nature == ContactNature::Unilateral) jt.offset = io::scalar_from(field(j, "offset_d", path), path + "/offset_d");
  if (j.contains("frame")) jt.frame = frame_from(j["frame"], path + "/frame");
  jt.points = constraint_points(field(j, "contact_points", path), path + "/contact_points", points);
  return jt;
}

std::optional<Scalar> cap_from(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "auto") return std::nullopt;
  const Scalar v = io::scalar_from(j, path);
  if (sgn(v) <= 0) throw Error(ErrorKind::NonPositiveC, path + ": must be > 0");
  return v;
}

MechanismModel load_mechanism(const Json& doc) {
  if (!doc.is_object()) schema("", "expected an object");
  MechanismModel m;
  m.space = space_from(field(doc, "space", ""), "/space");
  m.points = points_from(doc.contains("points") ? doc["points"] : Json(), "/points");

  if (doc.contains("surfaces")) {
    const Json& ss = doc["surfaces"];
    if (!ss.is_array()) schema("/surfaces", "expected an array");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      SurfaceSpec s = surface_from(ss[i], "/surfaces/" + std::to_string(i), m.points);
      if (m.surface(s.id)) schema("/surfaces/" + std::to_string(i) + "/id", "duplicate surface " + s.id);
      m.surfaces.push_back(std::move(s));
    }
  }
  if (doc.contains("joints")) {
    const Json& js = doc["joints"];
    if (!js.is_array()) schema("/joints", "expected an array");
    for (std::size_t i = 0; i < js.size(); ++i) {
      JointSpec jt = joint_from(js[i], "/joints/" + std::to_string(i), m.points);
      if (m.joint(jt.id)) schema("/joints/" + std::to_string(i) + "/id", "duplicate joint " + jt.id);
      m.joints.push_back(std::move(jt));
    }
  }

  if (doc.contains("functional_condition")) {
    const std::string p = "/functional_condition";
    const Json& f = doc[p.substr(1)];
    FunctionalCondition fc;
    const Json& d = field(f, "direction", p);
    if (d.is_string()) {
      std::string name = d.get<std::string>();
      if (name.rfind("t_M", 0) == 0) name = name.substr(3);
      if (name == "x") fc.direction = {1, 0, 0};
      else if (name == "y") fc.direction = {0, 1, 0};
      else if (name == "z") fc.direction = {0, 0, 1};
      else schema(p + "/direction", "expected x, y, z or a unit vector");
    } else {
      fc.direction = io::vec_from(d, p + "/direction", 3);
      if (dot(fc.direction, fc.direction) != 1) schema(p + "/direction", "direction must be a unit vector");
    }
    fc.dev_inf = io::scalar_from(field(f, "dev_inf", p), p + "/dev_inf");
    fc.dev_sup = io::scalar_from(field(f, "dev_sup", p), p + "/dev_sup");
    if (fc.dev_inf > fc.dev_sup) schema(p, "dev_inf > dev_sup");
    if (f.contains("point")) {
      const Json& pt = f["point"];
      Vec where;
      if (pt.is_string()) {
        auto it = m.points.find(pt.get<std::string>());
        if (it == m.points.end()) throw Error(ErrorKind::UnknownReference, p + "/point: unknown point");
        where = it->second;
      } else {
        where = io::vec_from(pt, p + "/point", 3);
      }
      if (where != m.space.point_M) schema(p + "/point", "functional point must be the space's point_M");
    }
    try {
      functional_row(fc, m.space);
    } catch (const Error& e) {
      schema(p + "/direction", e.message());
    }
    m.functional = std::move(fc);
  }

  m.expression = expr_from(field(doc, "expression", ""), "/expression");
  std::vector<const Expr*> leaves;
  collect_leaves(m.expression, leaves);
  for (const Expr* leaf : leaves) {
    try {
      resolve(m, leaf->leaf);
    } catch (const Error& e) {
      throw Error(e.kind(), leaf->path + ": " + e.message());
    }
  }

  if (doc.contains("caps")) m.C = cap_from(field(doc["caps"], "C", "/caps"), "/caps/C");
  if (doc.contains("margin")) {
    m.delta = cap_from(field(doc["margin"], "delta", "/margin"), "/margin/delta");
  }
  return m;
}

MechanismModel load_mechanism_file(const std::string& path) { return load_mechanism(io::read_json_file(path)); }

Scalar auto_cap(const MechanismModel& m) {
  Scalar big = 1;
  auto bump = [&](const Scalar& x) {
    if (abs(x) > big) big = abs(x);
  };
  for (const auto& s : m.surfaces) {
    bump(s.zone.d_inf);
    bump(s.zone.d_sup);
  }
  for (const auto& j : m.joints) {
    bump(j.clearance / 2);
    bump(j.offset);
  }
  return 1000 * big;
}

TrackedPolytope leaf_polytope(const MechanismModel& m, const std::string& id, const CapConfig& caps) {
  const LeafTarget t = resolve(m, id);
  switch (t.kind) {
    case LeafKind::Geometric: return geometric_polytope(*t.surface, m.space, caps);
    case LeafKind::GeometricReversed: return negated(geometric_polytope(*t.surface, m.space, caps));
    case LeafKind::Contact: return contact_polytope(*t.joint, m.space, caps);
    case LeafKind::ContactReversed: return negated(contact_polytope(*t.joint, m.space, caps));
  }
  throw Error(ErrorKind::InvariantViolation, "unreachable leaf kind");
}

Vec functional_row(const FunctionalCondition& fc, const DisplacementSpace& space) {
  Vec row6 = zeros(6);
  for (std::size_t i = 0; i < 3; ++i) row6[3 + i] = fc.direction.at(i);
  Vec row = space.restrict(row6);
  if (is_zero(row)) throw Error(ErrorKind::SchemaError, "functional direction vanishes in this displacement space");
  return row;
}

std::vector<TaggedHalfSpace> functional_polyhedron(const FunctionalCondition& fc, const DisplacementSpace& space) {
  const Vec row = functional_row(fc, space);
  return {TaggedHalfSpace{row, fc.dev_sup, Tag::NonCap, "functional:sup"},
          TaggedHalfSpace{negate(row), -fc.dev_inf, Tag::NonCap, "functional:inf"}};
}

std::pair<Scalar, Scalar> extreme_deviation(const TrackedPolytope& P, const Vec& direction) {
  return {-support_value(P, negate(direction)), support_value(P, direction)};
}

const NodeSnapshot* ComplianceReport::node(const std::string& path) const {
  for (const auto& n : nodes)
    if (n.path == path) return &n;
  return nullptr;
}

ComplianceReport evaluate(const MechanismModel& m, const EvalOptions& opts) {
  ComplianceReport r;
  r.C = opts.C ? *opts.C : m.C ? *m.C : auto_cap(m);
  Evaluator ev(m, CapConfig{r.C}, opts, r);
  ev.eval(m.expression);
  r.functional = m.functional;
  if (m.functional) {
    r.functional_rows = functional_polyhedron(*m.functional, m.space);
    const Inclusion inc = includes(r.result(), r.functional_rows);
    r.compliant = inc.included;
    r.witness_vertex = inc.witness_vertex;
    r.extreme = extreme_deviation(r.result(), functional_row(*m.functional, m.space));
  }
  return r;
}

InvarianceCheck check_c_invariance(const MechanismModel& m, const ComplianceReport& base, const Scalar& c_factor,
                                   const Scalar& delta_factor) {
  EvalOptions opts;
  opts.C = base.C * c_factor;
  opts.delta_scale = delta_factor;
  const ComplianceReport other = evaluate(m, opts);
  InvarianceCheck out;
  auto drift = [&](std::string line) {
    out.ok = false;
    out.drift.push_back(std::move(line));
  };
  if (other.nodes.size() != base.nodes.size()) drift("expression evaluated to a different node count");
  for (std::size_t i = 0; i < std::min(base.nodes.size(), other.nodes.size()); ++i) {
    const auto a = rows_with_tag(base.nodes[i].polytope, Tag::NonCap);
    const auto b = rows_with_tag(other.nodes[i].polytope, Tag::NonCap);
    if (!same_rows(a, b)) drift(base.nodes[i].path + ": noncap facets " + rows_text(a) + " became " + rows_text(b));
  }
  if (base.compliant != other.compliant) drift("verdict changed");
  if (base.extreme != other.extreme) drift("extreme deviation changed");
  return out;
}

io::Json report_json(const ComplianceReport& r, const DisplacementSpace& space) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) {
    Json j = {{"path", n.path},
              {"kind", kind_name(n.kind)},
              {"label", n.label},
              {"noncap_facets", n.polytope.count(Tag::NonCap)},
              {"cap_facets", n.polytope.count(Tag::Cap)},
              {"vertices", n.polytope.vertices.size()},
              {"polytope", io::polytope_json(n.polytope)}};
    if (n.kind == Expr::Kind::Sum) j["tag_disagreements"] = n.disagreements;
    if (n.kind == Expr::Kind::Intersect) {
      j["naive_differs"] = n.naive_differs;
      j["margin"] = io::scalar_json(*n.margin);
    }
    nodes.push_back(std::move(j));
  }
  Json out = {{"C", io::scalar_json(r.C)}, {"coordinates", space.coordinate_names()}, {"nodes", nodes}};
  if (r.functional) {
    out["functional_condition"] = fc_json(*r.functional);
    out["compliant"] = r.compliant;
    out["extreme_deviation"] = {io::scalar_json(r.extreme->first), io::scalar_json(r.extreme->second)};
    if (r.witness_vertex) {
      out["witness_vertex"] = io::vec_json(r.result().vertices[*r.witness_vertex].coords);
    }
  }
  return out;
}

std::string report_text(const ComplianceReport& r, const DisplacementSpace& space) {
  const auto names = space.coordinate_names();
  auto both = [](const Scalar& x) { return to_string(x) + " (" + to_display(x) + ")"; };
  std::ostringstream out;
  out << "cap offset C = " << both(r.C) << "\n";
  for (const auto& n : r.nodes) {
    out << n.path << "  " << n.label << ": " << n.polytope.count(Tag::NonCap) << " noncap, "
        << n.polytope.count(Tag::Cap) << " cap facets, " << n.polytope.vertices.size() << " vertices";
    if (n.kind == Expr::Kind::Intersect) out << ", margin " << both(*n.margin);
    if (n.disagreements) out << ", " << n.disagreements << " tag disagreements";
    out << "\n";
  }
  const auto& P = r.result();
  out << "final polytope cap facets:";
  bool any = false;
  for (const auto& h : P.halfspaces) {
    if (h.tag != Tag::Cap) continue;
    out << (any ? ";" : "") << " (";
    for (std::size_t i = 0; i < h.normal.size(); ++i) out << (i ? ", " : "") << to_string(h.normal[i]);
    out << ") <= " << both(h.offset);
    any = true;
  }
  out << (any ? "\n" : " none\n");
  if (r.functional) {
    out << "extreme deviation: min " << both(r.extreme->first) << ", max " << both(r.extreme->second) << "\n";
    out << "functional bounds: [" << both(r.functional->dev_inf) << ", " << both(r.functional->dev_sup) << "]\n";
    if (r.compliant) {
      out << "verdict: COMPLIANT\n";
    } else {
      out << "verdict: NON-COMPLIANT\nwitness vertex:";
      const Vec& w = P.vertices[*r.witness_vertex].coords;
      for (std::size_t i = 0; i < w.size(); ++i) out << " " << names[i] << "=" << both(w[i]);
      out << "\n";
    }
  } else {
    out << "verdict: no functional condition\n";
  }
  return out.str();
}

}  // namespace tolpoly
