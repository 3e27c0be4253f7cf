#pragma once

#include "tolpoly/polytope.hpp"

#include <string>
#include <string_view>

namespace tolpoly {

enum class SurfaceClass { Plane, Cylindrical, Spherical, Revolution, Prismatic, Helicoidal, Complex };
enum class JointType {
  PlanarPair,
  CylindricalPair,
  BallAndPlane,
  SphericalPair,
  BallAndCylinder,
  CylinderAndPlane,
  PrismaticPair,
  TurningPair
};
enum class ContactNature { Bilateral, Unilateral, Sliding };

std::string_view to_string(SurfaceClass c);
std::string_view to_string(JointType t);
std::string_view to_string(ContactNature c);
SurfaceClass parse_surface_class(std::string_view s);  // throw std::invalid_argument
JointType parse_joint_type(std::string_view s);
ContactNature parse_contact_nature(std::string_view s);

int degrees_of_invariance(SurfaceClass c);
int degrees_of_freedom(JointType t);

/// Orthonormal triad in global (x, y, z) components, checked exactly.
struct Frame {
  Vec u{1, 0, 0};
  Vec v{0, 1, 0};
  Vec w{0, 0, 1};

  void validate() const;  // throws Error(SchemaError)
};

/// Coordinates of the torsor (r_x, r_y, r_z, t_Mx, t_My, t_Mz) kept by the
/// analysis: all six, or (r_z, t_Mx, t_My) for planar problems in the z plane.
struct DisplacementSpace {
  std::size_t dim = 6;
  Vec point_M{0, 0, 0};

  static DisplacementSpace spatial(Vec M = {0, 0, 0});
  static DisplacementSpace planar(Vec M = {0, 0, 0});

  const std::vector<std::size_t>& kept() const;  // indices into the R^6 row
  std::vector<std::string> coordinate_names() const;

  /// R^6 row restricted to the kept coordinates.
  Vec restrict(const Vec& row6) const;
  /// Index of a named coordinate ("r_z", "t_My", ...), throws SchemaError if absent.
  std::size_t index_of(std::string_view name) const;
};

struct ConstraintPoint {
  std::string name;
  Vec point;   // global x, y, z
  Vec normal;  // outward, used as given
};

struct ToleranceZone {
  Scalar t;
  Scalar d_inf;
  Scalar d_sup;

  static ToleranceZone symmetric(const Scalar& t);
};

struct SurfaceSpec {
  std::string id;
  SurfaceClass cls = SurfaceClass::Plane;
  Frame frame;
  std::vector<ConstraintPoint> points;
  ToleranceZone zone;
};

struct JointSpec {
  std::string id;
  JointType type = JointType::PlanarPair;
  ContactNature nature = ContactNature::Bilateral;
  Scalar clearance;  // J, bilateral only
  Scalar offset;     // d, unilateral only
  Frame frame;
  std::vector<ConstraintPoint> points;
};

struct CapConfig {
  Scalar C{1000};
};

/// (MN x n ; n) in R^6. Throws ZeroNormal.
Vec constraint_row(const Vec& M, const Vec& N, const Vec& n);

/// Cap rows of a surface class or joint type, each +-(r or t_M projected on
/// a frame axis) <= C, restricted to the space. Rows that vanish under the
/// restriction are dropped. Throws NonPositiveC.
std::vector<TaggedHalfSpace> cap_halfspaces(SurfaceClass c, const Frame& f, const DisplacementSpace& space,
                                            const Scalar& C, const std::string& label = "cap");
std::vector<TaggedHalfSpace> cap_halfspaces(JointType t, const Frame& f, const DisplacementSpace& space,
                                            const Scalar& C, const std::string& label = "cap");

/// Raw rows of the operand (NonCap constraints then Cap rows), not yet
/// run through h_to_v.
std::vector<TaggedHalfSpace> geometric_rows(const SurfaceSpec& s, const DisplacementSpace& space, const CapConfig& caps);
std::vector<TaggedHalfSpace> contact_rows(const JointSpec& j, const DisplacementSpace& space, const CapConfig& caps);

/// Throws UnboundedAfterCaps, EmptyPolytope, NonPositiveC, ZeroNormal.
TrackedPolytope geometric_polytope(const SurfaceSpec& s, const DisplacementSpace& space, const CapConfig& caps);
TrackedPolytope contact_polytope(const JointSpec& j, const DisplacementSpace& space, const CapConfig& caps);

}  // namespace tolpoly
