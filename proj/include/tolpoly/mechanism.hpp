#pragma once

#include "tolpoly/cap_intersection.hpp"
#include "tolpoly/constraints.hpp"
#include "tolpoly/io.hpp"
#include "tolpoly/minkowski.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tolpoly {

/// Analysis tree: leaves name operands ("1,1/1,0", "2,1/1,1", or a reversed
/// id for the opposite displacement), inner nodes are Sum or Intersect.
struct Expr {
  enum class Kind { Leaf, Sum, Intersect };
  Kind kind = Kind::Leaf;
  std::string leaf;
  std::vector<Expr> children;
  std::string path;  // JSON pointer of the node in the input document
};

struct FunctionalCondition {
  Vec direction;  // unit translation direction, global x, y, z
  Scalar dev_inf;
  Scalar dev_sup;
};

struct MechanismModel {
  DisplacementSpace space;
  std::map<std::string, Vec> points;
  std::vector<SurfaceSpec> surfaces;
  std::vector<JointSpec> joints;
  std::optional<FunctionalCondition> functional;
  Expr expression;
  std::optional<Scalar> C;      // nullopt: auto
  std::optional<Scalar> delta;  // nullopt: auto per intersection node

  std::set<int> parts() const;
  const SurfaceSpec* surface(const std::string& id) const;
  const JointSpec* joint(const std::string& id) const;
};

/// Validates and resolves a mechanism document.
/// Throws SchemaError (with a JSON pointer), UnknownReference, InconsistentDimension.
MechanismModel load_mechanism(const io::Json& doc);
MechanismModel load_mechanism_file(const std::string& path);

/// Pieces of the mechanism schema, reused by single-operand build files.
DisplacementSpace space_from(const io::Json& j, const std::string& path);
std::map<std::string, Vec> points_from(const io::Json& j, const std::string& path);
SurfaceSpec surface_from(const io::Json& j, const std::string& path, const std::map<std::string, Vec>& points);
JointSpec joint_from(const io::Json& j, const std::string& path, const std::map<std::string, Vec>& points);
std::optional<Scalar> cap_from(const io::Json& j, const std::string& path);  // nullopt for "auto"

/// 1000 * max(|d_inf|, |d_sup|, J/2, |d|, 1) over every declared operand.
Scalar auto_cap(const MechanismModel& m);

/// Operand polytope for a leaf id. Throws UnknownReference.
TrackedPolytope leaf_polytope(const MechanismModel& m, const std::string& id, const CapConfig& caps);

/// Row of direction . t_M in the model's coordinates. Throws SchemaError if it vanishes.
Vec functional_row(const FunctionalCondition& fc, const DisplacementSpace& space);

/// direction.t_M <= dev_sup and -direction.t_M <= -dev_inf, both NonCap.
std::vector<TaggedHalfSpace> functional_polyhedron(const FunctionalCondition& fc, const DisplacementSpace& space);

/// (-h(P, -dir), h(P, dir)).
std::pair<Scalar, Scalar> extreme_deviation(const TrackedPolytope& P, const Vec& direction);

struct NodeSnapshot {
  std::string path;
  Expr::Kind kind = Expr::Kind::Leaf;
  std::string label;  // leaf id, "sum" or "intersect"
  TrackedPolytope polytope;
  std::size_t disagreements = 0;  // sum nodes: face-decomposition vs refinement verdicts
  bool naive_differs = false;     // intersect nodes
  std::optional<Scalar> margin;   // intersect nodes
};

struct EvalOptions {
  std::optional<Scalar> C;      // overrides the model
  std::optional<Scalar> delta;  // overrides the model
  Scalar delta_scale{1};        // multiplies whatever margin each node ends up with
};

struct ComplianceReport {
  Scalar C;
  std::vector<NodeSnapshot> nodes;  // post-order, root last
  std::optional<FunctionalCondition> functional;
  std::vector<TaggedHalfSpace> functional_rows;
  bool compliant = true;
  std::optional<std::size_t> witness_vertex;  // into result().vertices
  std::optional<std::pair<Scalar, Scalar>> extreme;

  const TrackedPolytope& result() const { return nodes.back().polytope; }
  const NodeSnapshot* node(const std::string& path) const;
};

/// Folds the expression bottom-up. Errors are rethrown with the node path.
ComplianceReport evaluate(const MechanismModel& m, const EvalOptions& opts = {});

struct InvarianceCheck {
  bool ok = true;
  std::vector<std::string> drift;  // one line per differing node or quantity
};

/// Reruns with C * c_factor and every margin * delta_factor and compares
/// NonCap hyperplane sets node by node, the verdict and the extreme deviation.
InvarianceCheck check_c_invariance(const MechanismModel& m, const ComplianceReport& base, const Scalar& c_factor = 10,
                                   const Scalar& delta_factor = 1);

io::Json report_json(const ComplianceReport& r, const DisplacementSpace& space);
std::string report_text(const ComplianceReport& r, const DisplacementSpace& space);

}  // namespace tolpoly
