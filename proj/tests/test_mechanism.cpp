#include "tolpoly/error.hpp"
#include "tolpoly/mechanism.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace tolpoly;

namespace {

const std::string kFixtures = TOLPOLY_FIXTURES;

io::Json slider() { return io::read_json_file(kFixtures + "/slider_mechanism.json"); }

template <class F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorKind::InvariantViolation, "none");
}

// One plane surface 1,1 with points O and P, expression over its geometric polytope.
io::Json trivial() {
  return io::parse_json(R"({
    "space": {"dim": 3, "point_M": [0, 0, 0], "coordinates": ["r_z", "t_Mx", "t_My"]},
    "points": {"O": [-10, 0, 0], "P": [-30, 0, 0]},
    "surfaces": [{"id": "1,1", "class": "plane", "frame": {"u": [1,0,0], "v": [0,0,1], "w": [0,1,0]},
                  "zone": {"t": "0.2"},
                  "constraint_points": [{"point": "O", "normal": [0,1,0]}, {"point": "P", "normal": [0,1,0]}]}],
    "joints": [],
    "expression": "1,1/1,0"})");
}

std::vector<TaggedHalfSpace> noncap(const TrackedPolytope& P) { return rows_with_tag(P, Tag::NonCap); }

bool same_rows(const std::vector<TaggedHalfSpace>& a, const std::vector<TaggedHalfSpace>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_halfspace(b[i])) return false;
  return true;
}

const std::string kP1 = "/expression/sum/3/intersect/0";
const std::string kP2 = "/expression/sum/3/intersect/1/intersect/0";
const std::string kP3 = "/expression/sum/3/intersect/1/intersect/1";
const std::string kP23 = "/expression/sum/3/intersect/1";
const std::string kP123 = "/expression/sum/3";

}  // namespace

TEST(Mechanism, LoadsExampleStructure) {
  const MechanismModel m = load_mechanism(slider());
  EXPECT_EQ(m.parts(), (std::set<int>{1, 2, 3}));
  EXPECT_EQ(m.surfaces.size(), 9u);
  EXPECT_EQ(m.joints.size(), 4u);
  ASSERT_TRUE(m.functional.has_value());
  EXPECT_EQ(m.functional->direction, (Vec{0, 1, 0}));
  EXPECT_EQ(m.space.dim, 3u);
  EXPECT_EQ(auto_cap(m), 15000);
  EXPECT_EQ(m.surface("2,2")->zone.d_sup, Scalar(1, 10));
  EXPECT_EQ(m.joint("2,2/1,2")->nature, ContactNature::Unilateral);
}

TEST(Mechanism, TrivialModel) {
  const MechanismModel m = load_mechanism(trivial());
  EXPECT_TRUE(m.joints.empty());
  const ComplianceReport r = evaluate(m);
  ASSERT_EQ(r.nodes.size(), 1u);
  const auto direct = geometric_polytope(m.surfaces[0], m.space, {auto_cap(m)});
  EXPECT_TRUE(same_rows(r.result().halfspaces, direct.halfspaces));
  EXPECT_EQ(r.result().vertex_coords(), direct.vertex_coords());
  EXPECT_TRUE(r.compliant);  // no functional condition
  EXPECT_FALSE(r.extreme.has_value());
}

TEST(Mechanism, LoadErrors) {
  auto doc = trivial();
  doc["expression"] = "P_{9,9/1,0}";
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::UnknownReference);

  doc = trivial();
  doc["surfaces"][0]["zone"].erase("t");
  auto e = error_of([&] { load_mechanism(doc); });
  EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  EXPECT_NE(std::string(e.what()).find("/surfaces/0/zone/t"), std::string::npos) << e.what();

  doc = trivial();
  doc["space"]["dim"] = 4;
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::InconsistentDimension);

  doc = trivial();
  doc["space"]["coordinates"] = {"t_Mx", "t_My", "r_z"};
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::InconsistentDimension);

  doc = trivial();
  doc["points"]["O"] = {1, 2};
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::InconsistentDimension);

  doc = trivial();
  doc["surfaces"][0]["constraint_points"][0]["point"] = "Z";
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::UnknownReference);

  doc = trivial();
  doc["surfaces"][0]["class"] = "toroidal";
  e = error_of([&] { load_mechanism(doc); });
  EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  EXPECT_NE(std::string(e.what()).find("/surfaces/0/class"), std::string::npos);

  doc = trivial();
  doc["expression"] = {{"intersect", {"1,1/1,0"}}};
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::SchemaError);

  doc = trivial();
  doc["expression"] = {{"product", {"1,1/1,0"}}};
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::SchemaError);

  doc = trivial();
  doc["surfaces"][0]["zone"] = {{"t", "0.3"}, {"d_inf", "-0.1"}, {"d_sup", "0.1"}};
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::SchemaError);

  doc = trivial();
  doc["functional_condition"] = {{"direction", "y"}, {"dev_inf", "1"}, {"dev_sup", "0"}};
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::SchemaError);

  doc = trivial();
  doc["functional_condition"] = {{"direction", "z"}, {"dev_inf", "-1"}, {"dev_sup", "1"}};  // t_Mz not kept
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::SchemaError);

  doc = trivial();
  doc["caps"] = {{"C", "0"}};
  EXPECT_EQ(error_of([&] { load_mechanism(doc); }).kind(), ErrorKind::NonPositiveC);
}

TEST(Mechanism, ReversedLeavesAreNegated) {
  auto doc = trivial();
  doc["expression"] = "1,0/1,1";
  const auto m = load_mechanism(doc);
  const auto r = evaluate(m);
  const auto direct = geometric_polytope(m.surfaces[0], m.space, {auto_cap(m)});
  EXPECT_EQ(r.result().vertex_coords(), negated(direct).vertex_coords());
}

TEST(Mechanism, ErrorsCarryNodePath) {
  auto doc = trivial();
  doc["surfaces"][0]["constraint_points"].erase(1);  // r_z left free
  doc["expression"] = {{"sum", {"1,1/1,0", "1,0/1,1"}}};
  const auto m = load_mechanism(doc);
  const auto e = error_of([&] { evaluate(m); });
  EXPECT_EQ(e.kind(), ErrorKind::UnboundedAfterCaps);
  EXPECT_NE(std::string(e.what()).find("/expression/sum/0"), std::string::npos) << e.what();
}

TEST(Mechanism, FunctionalPolyhedron) {
  const auto space = DisplacementSpace::planar();
  auto rows = functional_polyhedron({{0, 1, 0}, Scalar(-1, 2), Scalar(1, 2)}, space);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].normal, (Vec{0, 0, 1}));
  EXPECT_EQ(rows[0].offset, Scalar(1, 2));
  EXPECT_EQ(rows[1].normal, (Vec{0, 0, -1}));
  EXPECT_EQ(rows[1].offset, Scalar(1, 2));
  rows = functional_polyhedron({{0, 1, 0}, Scalar(-1, 10), Scalar(2, 5)}, space);
  EXPECT_EQ(rows[0].offset, Scalar(2, 5));
  EXPECT_EQ(rows[1].offset, Scalar(1, 10));
  for (const auto& h : rows) EXPECT_EQ(h.tag, Tag::NonCap);
  rows = functional_polyhedron({{0, 1, 0}, -1, 1}, DisplacementSpace::spatial());
  EXPECT_EQ(rows[0].normal, (Vec{0, 0, 0, 0, 1, 0}));
}

TEST(Mechanism, ExtremeDeviation) {
  auto square = v_to_h({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, 2);
  EXPECT_EQ(extreme_deviation(square, {0, 1}), std::make_pair(Scalar(-1), Scalar(1)));
  auto segment = v_to_h({{-2, 0}, {3, 0}}, 2);
  EXPECT_EQ(extreme_deviation(segment, {0, 1}), std::make_pair(Scalar(0), Scalar(0)));
}

TEST(Mechanism, ExampleNodes) {
  const MechanismModel m = load_mechanism(slider());
  const ComplianceReport r = evaluate(m);

  // P1 is a homothety of its geometric operands
  const auto* p1 = r.node(kP1);
  const auto* g = r.node(kP1 + "/sum/2");
  ASSERT_TRUE(p1 && g);
  std::set<Vec> n1, ng;
  for (const auto& h : p1->polytope.halfspaces) n1.insert(h.normal);
  for (const auto& h : g->polytope.halfspaces) ng.insert(h.normal);
  EXPECT_EQ(n1, ng);
  for (std::size_t i = 0; i < p1->polytope.halfspaces.size(); ++i)
    EXPECT_EQ(p1->polytope.halfspaces[i].tag, g->polytope.halfspaces[i].tag);

  EXPECT_EQ(r.node(kP2)->polytope.count(Tag::NonCap), 1u);
  EXPECT_EQ(r.node(kP3)->polytope.count(Tag::NonCap), 1u);
  EXPECT_TRUE(r.node(kP23)->naive_differs);
  EXPECT_EQ(r.node(kP123)->polytope.count(Tag::Cap), 0u);

  // final: every cap facet involves t_Mx, every noncap facet is free of it
  const auto& F = r.result();
  for (const auto& h : F.halfspaces) {
    if (h.tag == Tag::Cap) EXPECT_NE(sgn(h.normal[1]), 0) << to_string(h.normal);
    else EXPECT_EQ(sgn(h.normal[1]), 0) << to_string(h.normal);
  }
  EXPECT_GE(F.count(Tag::Cap), 2u);
  EXPECT_TRUE(r.compliant);
}

TEST(Mechanism, ExtremeMatchesVertexScan) {
  const MechanismModel m = load_mechanism(slider());
  const ComplianceReport r = evaluate(m);
  // independent: brute-force vertices of the final H-description
  const auto pts = oracle::vertices(r.result().halfspaces, 3);
  ASSERT_FALSE(pts.empty());
  Scalar lo = pts.front()[2], hi = pts.front()[2];
  for (const auto& p : pts) {
    lo = std::min(lo, p[2]);
    hi = std::max(hi, p[2]);
  }
  EXPECT_EQ(r.extreme->first, lo);
  EXPECT_EQ(r.extreme->second, hi);
  EXPECT_EQ(hi, Scalar(9, 10));
}

TEST(Mechanism, VerdictFlipsAtExtreme) {
  MechanismModel m = load_mechanism(slider());
  const Scalar top = evaluate(m).extreme->second;
  const Scalar eps(1, 1000);
  for (const auto& [sup, want] : std::vector<std::pair<Scalar, bool>>{{top + eps, true}, {top, true}, {top - eps, false}}) {
    m.functional->dev_sup = sup;
    const auto r = evaluate(m);
    EXPECT_EQ(r.compliant, want) << to_string(sup);
    if (!want) {
      ASSERT_TRUE(r.witness_vertex.has_value());
      EXPECT_GT(r.result().vertices[*r.witness_vertex].coords[2], sup);
    }
  }
  // bisection on dev_sup lands on the extreme
  Scalar lo = 0, hi = 2;
  for (int i = 0; i < 30; ++i) {
    const Scalar mid = (lo + hi) / 2;
    m.functional->dev_sup = mid;
    (evaluate(m).compliant ? hi : lo) = mid;
  }
  EXPECT_LE(lo, top);
  EXPECT_GE(hi, top);
}

TEST(Mechanism, CapAndMarginInvariance) {
  const MechanismModel m = load_mechanism(slider());
  const ComplianceReport r = evaluate(m);
  for (const auto& [cf, df] : std::vector<std::pair<Scalar, Scalar>>{{10, 1}, {10, 3}, {1, 3}, {100, Scalar(1, 2)}}) {
    const auto c = check_c_invariance(m, r, cf, df);
    EXPECT_TRUE(c.ok) << (c.drift.empty() ? "" : c.drift.front());
  }
}

TEST(Mechanism, ExtremeScalesWithTolerances) {
  const auto base = evaluate(load_mechanism(slider())).extreme->second;
  for (const Scalar lambda : {Scalar(2), Scalar(1, 2)}) {
    auto doc = slider();
    for (auto& s : doc["surfaces"]) s["zone"]["t"] = to_string(lambda * io::scalar_from(s["zone"]["t"], ""));
    for (auto& j : doc["joints"])
      if (j.contains("clearance_J")) j["clearance_J"] = to_string(lambda * io::scalar_from(j["clearance_J"], ""));
    const auto r = evaluate(load_mechanism(doc));
    EXPECT_EQ(r.extreme->second, lambda * base);
    EXPECT_EQ(r.extreme->first, -lambda * base);
  }
}

TEST(Mechanism, SlidingContactIsNeutralForNonCapFacets) {
  auto doc = slider();
  const auto with = evaluate(load_mechanism(doc));
  doc["expression"]["sum"][3]["intersect"][0]["sum"].erase(1);  // drop 2,1/1,1
  const auto without = evaluate(load_mechanism(doc));
  EXPECT_TRUE(same_rows(noncap(with.node(kP1)->polytope), noncap(without.node(kP1)->polytope)));
  EXPECT_EQ(with.extreme, without.extreme);
}

TEST(Mechanism, ReportsAreDeterministic) {
  const MechanismModel m = load_mechanism(slider());
  const auto a = io::dump(report_json(evaluate(m), m.space));
  const auto b = io::dump(report_json(evaluate(m), m.space));
  EXPECT_EQ(a, b);
  const auto j = io::parse_json(a);
  EXPECT_EQ(j["compliant"], true);
  EXPECT_EQ(j["extreme_deviation"][1], "9/10");
  EXPECT_EQ(j["nodes"].back()["path"], "/expression");
  const auto text = report_text(evaluate(m), m.space);
  EXPECT_NE(text.find("verdict: COMPLIANT"), std::string::npos);
  EXPECT_NE(text.find("max 9/10 (0.9)"), std::string::npos) << text;
}
