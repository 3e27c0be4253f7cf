#include "tolpoly/constraints.hpp"

#include "tolpoly/error.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace tolpoly {

namespace {

constexpr std::array<std::pair<SurfaceClass, std::string_view>, 7> kSurfaceNames{{
    {SurfaceClass::Plane, "plane"},
    {SurfaceClass::Cylindrical, "cylindrical"},
    {SurfaceClass::Spherical, "spherical"},
    {SurfaceClass::Revolution, "revolution"},
    {SurfaceClass::Prismatic, "prismatic"},
    {SurfaceClass::Helicoidal, "helicoidal"},
    {SurfaceClass::Complex, "complex"},
}};

constexpr std::array<std::pair<JointType, std::string_view>, 8> kJointNames{{
    {JointType::PlanarPair, "planar_pair"},
    {JointType::CylindricalPair, "cylindrical_pair"},
    {JointType::BallAndPlane, "ball_and_plane"},
    {JointType::SphericalPair, "spherical_pair"},
    {JointType::BallAndCylinder, "ball_and_cylinder"},
    {JointType::CylinderAndPlane, "cylinder_and_plane"},
    {JointType::PrismaticPair, "prismatic_pair"},
    {JointType::TurningPair, "turning_pair"},
}};

constexpr std::array<std::pair<ContactNature, std::string_view>, 3> kNatureNames{{
    {ContactNature::Bilateral, "bilateral"},
    {ContactNature::Unilateral, "unilateral"},
    {ContactNature::Sliding, "sliding"},
}};

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [e, s] : table)
    if (e == value) return s;
  return "?";
}

template <class E, std::size_t N>
E parse_name(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view text, const char* what) {
  for (const auto& [e, s] : table)
    if (s == text) return e;
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(text) + "'");
}

// One invariant/mobile displacement: rotation or translation along an axis.
struct Motion {
  bool rotation;
  char axis;  // 'u', 'v' or 'w'
};

std::vector<Motion> surface_motions(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Plane: return {{true, 'w'}, {false, 'u'}, {false, 'v'}};
    case SurfaceClass::Cylindrical: return {{true, 'u'}, {false, 'u'}};
    case SurfaceClass::Spherical: return {{true, 'u'}, {true, 'v'}, {true, 'w'}};
    case SurfaceClass::Revolution: return {{true, 'u'}};
    case SurfaceClass::Prismatic: return {{false, 'v'}};
    case SurfaceClass::Helicoidal: return {{true, 'u'}, {false, 'u'}};  // experimental, no pitch coupling
    case SurfaceClass::Complex: return {};
  }
  return {};
}

std::vector<Motion> joint_motions(JointType t) {
  switch (t) {
    case JointType::PlanarPair: return {{true, 'w'}, {false, 'u'}, {false, 'v'}};
    case JointType::CylindricalPair: return {{true, 'u'}, {false, 'u'}};
    case JointType::BallAndPlane: return {{true, 'u'}, {true, 'v'}, {true, 'w'}, {false, 'u'}, {false, 'v'}};
    case JointType::SphericalPair: return {{true, 'u'}, {true, 'v'}, {true, 'w'}};
    case JointType::BallAndCylinder: return {{true, 'u'}, {true, 'v'}, {true, 'w'}, {false, 'u'}};
    case JointType::CylinderAndPlane: return {{true, 'u'}, {true, 'w'}, {false, 'u'}, {false, 'v'}};
    case JointType::PrismaticPair: return {{false, 'u'}};
    case JointType::TurningPair: return {{true, 'u'}};
  }
  return {};
}

std::vector<TaggedHalfSpace> caps_for(const std::vector<Motion>& motions, const Frame& f,
                                      const DisplacementSpace& space, const Scalar& C, const std::string& label) {
  if (sgn(C) <= 0) throw Error(ErrorKind::NonPositiveC, "cap offset C must be > 0");
  f.validate();
  std::vector<TaggedHalfSpace> rows;
  for (const auto& m : motions) {
    const Vec& axis = m.axis == 'u' ? f.u : m.axis == 'v' ? f.v : f.w;
    Vec row6 = zeros(6);
    for (std::size_t k = 0; k < 3; ++k) row6[(m.rotation ? 0 : 3) + k] = axis[k];
    const Vec row = space.restrict(row6);
    if (is_zero(row)) continue;
    const std::string base = label + ":" + (m.rotation ? "r." : "t.") + m.axis;
    rows.push_back(canonicalize(row, C, Tag::Cap, base + "+"));
    rows.push_back(canonicalize(negate(row), C, Tag::Cap, base + "-"));
  }
  return rows;
}

const ConstraintPoint& require_points(const std::vector<ConstraintPoint>& pts, const std::string& id) {
  if (pts.empty()) throw Error(ErrorKind::SchemaError, id + ": no constraint points");
  return pts.front();
}

TrackedPolytope build(std::vector<TaggedHalfSpace> rows, const DisplacementSpace& space, const std::string& id) {
  try {
    return h_to_v(std::move(rows), space.dim);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnboundedInput)
      throw Error(ErrorKind::UnboundedAfterCaps, id + ": caps leave the polyhedron unbounded");
    throw Error(e.kind(), id + ": " + e.message());
  }
}

}  // namespace

std::string_view to_string(SurfaceClass c) { return name_of(kSurfaceNames, c); }
std::string_view to_string(JointType t) { return name_of(kJointNames, t); }
std::string_view to_string(ContactNature c) { return name_of(kNatureNames, c); }
SurfaceClass parse_surface_class(std::string_view s) { return parse_name(kSurfaceNames, s, "surface class"); }
JointType parse_joint_type(std::string_view s) { return parse_name(kJointNames, s, "joint type"); }
ContactNature parse_contact_nature(std::string_view s) { return parse_name(kNatureNames, s, "contact nature"); }

int degrees_of_invariance(SurfaceClass c) { return static_cast<int>(surface_motions(c).size()); }
int degrees_of_freedom(JointType t) { return static_cast<int>(joint_motions(t).size()); }

void Frame::validate() const {
  const Vec* axes[3] = {&u, &v, &w};
  for (std::size_t i = 0; i < 3; ++i) {
    if (axes[i]->size() != 3) throw Error(ErrorKind::SchemaError, "frame axis must have 3 components");
    if (dot(*axes[i], *axes[i]) != 1) throw Error(ErrorKind::SchemaError, "frame axis is not a unit vector");
    for (std::size_t j = i + 1; j < 3; ++j)
      if (sgn(dot(*axes[i], *axes[j])) != 0) throw Error(ErrorKind::SchemaError, "frame axes are not orthogonal");
  }
}

DisplacementSpace DisplacementSpace::spatial(Vec M) { return {6, std::move(M)}; }
DisplacementSpace DisplacementSpace::planar(Vec M) { return {3, std::move(M)}; }

const std::vector<std::size_t>& DisplacementSpace::kept() const {
  static const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
  static const std::vector<std::size_t> plane{2, 3, 4};
  return dim == 3 ? plane : all;
}

std::vector<std::string> DisplacementSpace::coordinate_names() const {
  static const char* names[6] = {"r_x", "r_y", "r_z", "t_Mx", "t_My", "t_Mz"};
  std::vector<std::string> out;
  for (auto k : kept()) out.emplace_back(names[k]);
  return out;
}

Vec DisplacementSpace::restrict(const Vec& row6) const {
  Vec out;
  for (auto k : kept()) out.push_back(row6[k]);
  return out;
}

std::size_t DisplacementSpace::index_of(std::string_view name) const {
  const auto names = coordinate_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw Error(ErrorKind::SchemaError, "coordinate '" + std::string(name) + "' is not part of the space");
}

ToleranceZone ToleranceZone::symmetric(const Scalar& t) { return {t, -t / 2, t / 2}; }

Vec constraint_row(const Vec& M, const Vec& N, const Vec& n) {
  if (n.size() != 3 || is_zero(n)) throw Error(ErrorKind::ZeroNormal, "constraint normal is zero");
  const Vec mn = sub(N, M);
  return {mn[1] * n[2] - mn[2] * n[1], mn[2] * n[0] - mn[0] * n[2], mn[0] * n[1] - mn[1] * n[0], n[0], n[1], n[2]};
}

std::vector<TaggedHalfSpace> cap_halfspaces(SurfaceClass c, const Frame& f, const DisplacementSpace& space,
                                            const Scalar& C, const std::string& label) {
  return caps_for(surface_motions(c), f, space, C, label);
}

std::vector<TaggedHalfSpace> cap_halfspaces(JointType t, const Frame& f, const DisplacementSpace& space,
                                            const Scalar& C, const std::string& label) {
  return caps_for(joint_motions(t), f, space, C, label);
}

std::vector<TaggedHalfSpace> geometric_rows(const SurfaceSpec& s, const DisplacementSpace& space, const CapConfig& caps) {
  require_points(s.points, s.id);
  if (s.zone.d_inf > s.zone.d_sup) throw Error(ErrorKind::EmptyPolytope, s.id + ": d_inf > d_sup");
  std::vector<TaggedHalfSpace> rows;
  for (const auto& p : s.points) {
    const Vec a = space.restrict(constraint_row(space.point_M, p.point, p.normal));
    if (is_zero(a)) throw Error(ErrorKind::ZeroNormal, s.id + ": point " + p.name + " gives no constraint in this space");
    const std::string base = "geom:" + s.id + ":pt " + p.name;
    rows.push_back(canonicalize(a, s.zone.d_sup, Tag::NonCap, base + ":sup"));
    rows.push_back(canonicalize(negate(a), -s.zone.d_inf, Tag::NonCap, base + ":inf"));
  }
  auto cap_rows = cap_halfspaces(s.cls, s.frame, space, caps.C, "cap:" + s.id);
  rows.insert(rows.end(), cap_rows.begin(), cap_rows.end());
  return rows;
}

std::vector<TaggedHalfSpace> contact_rows(const JointSpec& j, const DisplacementSpace& space, const CapConfig& caps) {
  require_points(j.points, j.id);
  if (sgn(caps.C) <= 0) throw Error(ErrorKind::NonPositiveC, "cap offset C must be > 0");
  std::vector<TaggedHalfSpace> rows;
  for (const auto& p : j.points) {
    const Vec a = space.restrict(constraint_row(space.point_M, p.point, p.normal));
    if (is_zero(a)) throw Error(ErrorKind::ZeroNormal, j.id + ": point " + p.name + " gives no constraint in this space");
    const std::string base = "contact:" + j.id + ":pt " + p.name;
    switch (j.nature) {
      case ContactNature::Bilateral:
        if (sgn(j.clearance) < 0) throw Error(ErrorKind::EmptyPolytope, j.id + ": negative clearance");
        rows.push_back(canonicalize(a, j.clearance / 2, Tag::NonCap, base + ":sup"));
        rows.push_back(canonicalize(negate(a), j.clearance / 2, Tag::NonCap, base + ":inf"));
        break;
      case ContactNature::Sliding:
        rows.push_back(canonicalize(a, 0, Tag::NonCap, base + ":eq+"));
        rows.push_back(canonicalize(negate(a), 0, Tag::NonCap, base + ":eq-"));
        break;
      case ContactNature::Unilateral:
        // 0 <= a.x + d, closed on the other side by a cap at a.x + d <= C
        rows.push_back(canonicalize(negate(a), j.offset, Tag::NonCap, base + ":contact"));
        rows.push_back(canonicalize(a, caps.C - j.offset, Tag::Cap, "cap:" + j.id + ":mirror " + p.name));
        break;
    }
  }
  auto cap_rows = cap_halfspaces(j.type, j.frame, space, caps.C, "cap:" + j.id);
  rows.insert(rows.end(), cap_rows.begin(), cap_rows.end());
  return rows;
}

TrackedPolytope geometric_polytope(const SurfaceSpec& s, const DisplacementSpace& space, const CapConfig& caps) {
  return build(geometric_rows(s, space, caps), space, s.id);
}

TrackedPolytope contact_polytope(const JointSpec& j, const DisplacementSpace& space, const CapConfig& caps) {
  return build(contact_rows(j, space, caps), space, j.id);
}

}  // namespace tolpoly
