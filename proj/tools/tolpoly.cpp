// tolpoly: tolerance analysis with tagged polytopes.
#include "tolpoly/cap_intersection.hpp"
#include "tolpoly/error.hpp"
#include "tolpoly/io.hpp"
#include "tolpoly/mechanism.hpp"
#include "tolpoly/minkowski.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace tolpoly;

namespace {

enum Exit { Ok = 0, NonCompliant = 1, InputError = 2, Internal = 3 };

struct Flags {
  std::string cap_c;
  std::string margin;
  bool check_c = false;
  int dim = 0;
  std::string out;
  std::string format = "json";
  int precision = 6;
};

std::optional<Scalar> scalar_flag(const std::string& text, const char* name) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::SchemaError, std::string("--") + name + ": not a number: " + text);
  }
}

void write_or_print(const std::string& content, const std::string& out) {
  if (out.empty()) std::cout << content;
  else io::write_file(out, content);
}

void emit(const TrackedPolytope& P, const Flags& f, const std::vector<std::string>& names = {}) {
  if (f.format == "json") {
    write_or_print(io::dump(io::polytope_json(P)), f.out);
  } else if (f.format == "text") {
    write_or_print(io::polytope_text(P, names), f.out);
  } else {
    const io::OffExport e = io::export_off(P, f.precision);
    write_or_print(e.off, f.out);
    if (!f.out.empty()) io::write_file(io::sidecar_path(f.out), io::dump(e.caps));
  }
}

void check_dim(const TrackedPolytope& P, const Flags& f, const std::string& what) {
  if (f.dim != 0 && P.dim != static_cast<std::size_t>(f.dim))
    throw Error(ErrorKind::InconsistentDimension, what + " has dim " + std::to_string(P.dim) + ", --dim is " +
                                                      std::to_string(f.dim));
}

std::vector<TrackedPolytope> read_all(const std::vector<std::string>& paths, const Flags& f) {
  std::vector<TrackedPolytope> ps;
  for (const auto& p : paths) {
    ps.push_back(io::read_polytope_file(p));
    check_dim(ps.back(), f, p);
  }
  return ps;
}

int analyze(const std::string& path, const Flags& f) {
  const MechanismModel m = load_mechanism_file(path);
  EvalOptions opts;
  opts.C = scalar_flag(f.cap_c, "cap-c");
  opts.delta = scalar_flag(f.margin, "margin");
  if (opts.C && sgn(*opts.C) <= 0) throw Error(ErrorKind::NonPositiveC, "--cap-c must be > 0");
  const ComplianceReport r = evaluate(m, opts);
  if (f.format == "json") write_or_print(io::dump(report_json(r, m.space)), f.out);
  else if (f.format == "text") write_or_print(report_text(r, m.space), f.out);
  else emit(r.result(), f);
  if (f.check_c) {
    const InvarianceCheck c = check_c_invariance(m, r, 10);
    if (!c.ok) {
      for (const auto& line : c.drift) std::cerr << "C drift: " << line << "\n";
      return Internal;
    }
    std::cerr << "C invariance: ok (C x10)\n";
  }
  return r.compliant ? Ok : NonCompliant;
}

int build(const std::string& path, const Flags& f) {
  const io::Json doc = io::read_json_file(path);
  if (!doc.is_object()) throw Error(ErrorKind::SchemaError, "/: expected an object");
  DisplacementSpace space = DisplacementSpace::spatial();
  if (doc.contains("space")) {
    space = space_from(doc["space"], "/space");
    if (f.dim != 0 && space.dim != static_cast<std::size_t>(f.dim))
      throw Error(ErrorKind::InconsistentDimension, "--dim disagrees with /space/dim");
  } else if (f.dim == 3) {
    space = DisplacementSpace::planar();
  } else if (f.dim != 0 && f.dim != 6) {
    throw Error(ErrorKind::InconsistentDimension, "--dim must be 3 or 6");
  }
  const auto points = points_from(doc.contains("points") ? doc["points"] : io::Json(), "/points");

  MechanismModel m;
  m.space = space;
  m.points = points;
  std::string leaf;
  if (doc.contains("surface")) {
    m.surfaces.push_back(surface_from(doc["surface"], "/surface", points));
    const std::string& id = m.surfaces.back().id;
    leaf = id + "/" + id.substr(0, id.find(',')) + ",0";
  } else if (doc.contains("joint")) {
    m.joints.push_back(joint_from(doc["joint"], "/joint", points));
    leaf = m.joints.back().id;
  } else {
    throw Error(ErrorKind::SchemaError, "/: expected a \"surface\" or a \"joint\"");
  }
  std::optional<Scalar> C = scalar_flag(f.cap_c, "cap-c");
  if (!C && doc.contains("caps") && doc["caps"].contains("C")) C = cap_from(doc["caps"]["C"], "/caps/C");
  if (!C) C = auto_cap(m);
  emit(leaf_polytope(m, leaf, CapConfig{*C}), f, space.coordinate_names());
  return Ok;
}

int report(const std::string& path, const Flags& f) {
  const io::Json doc = io::read_json_file(path);
  if (doc.is_object() && doc.contains("expression")) {
    const MechanismModel m = load_mechanism(doc);
    EvalOptions opts;
    opts.C = scalar_flag(f.cap_c, "cap-c");
    opts.delta = scalar_flag(f.margin, "margin");
    const ComplianceReport r = evaluate(m, opts);
    write_or_print(report_text(r, m.space), f.out);
    return r.compliant ? Ok : NonCompliant;
  }
  const TrackedPolytope P = io::polytope_from(doc);
  check_dim(P, f, path);
  write_or_print(io::polytope_text(P), f.out);
  return Ok;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? Internal : InputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Internal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tolerance analysis with cap-tagged polytopes"};
  app.require_subcommand(1);
  Flags f;
  std::vector<std::string> inputs;

  auto add_output = [&](CLI::App* sub, bool with_off) {
    sub->add_option("--out", f.out, "write the result to this file (OFF also writes <stem>.caps.json)");
    auto* fmt = sub->add_option("--format", f.format, "json, off or text");
    fmt->check(with_off ? CLI::IsMember({"json", "off", "text"}) : CLI::IsMember({"json", "text"}));
    sub->add_option("--precision", f.precision, "decimal digits in OFF vertices")->check(CLI::Range(0, 40));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "evaluate a mechanism file against its functional condition");
  analyze_cmd->add_option("mechanism", inputs, "mechanism JSON")->required()->expected(1);
  analyze_cmd->add_option("--cap-c", f.cap_c, "cap offset C (default: from the file, else auto)");
  analyze_cmd->add_option("--margin", f.margin, "intersection box margin (default: from the file, else auto)");
  analyze_cmd->add_flag("--check-c-invariance", f.check_c, "rerun with C x10 and fail on noncap drift");
  analyze_cmd->add_option("--format", f.format, "text, json or off (final polytope)")
      ->check(CLI::IsMember({"json", "off", "text"}));
  analyze_cmd->add_option("--out", f.out, "output file");
  analyze_cmd->add_option("--precision", f.precision, "decimal digits in OFF vertices")->check(CLI::Range(0, 40));

  auto* sum_cmd = app.add_subcommand("sum", "Minkowski sum of polytope files, left to right");
  sum_cmd->add_option("polytopes", inputs, "polytope JSON files")->required()->expected(2, -1);
  sum_cmd->add_option("--dim", f.dim, "expected dimension");
  add_output(sum_cmd, true);

  auto* inter_cmd = app.add_subcommand("intersect", "box-capped intersection of noncap parts");
  inter_cmd->add_option("polytopes", inputs, "polytope JSON files")->required()->expected(2, -1);
  inter_cmd->add_option("--margin", f.margin, "box margin (default auto)");
  inter_cmd->add_option("--dim", f.dim, "expected dimension");
  add_output(inter_cmd, true);

  auto* build_cmd = app.add_subcommand("build", "operand polytope of one surface or joint");
  build_cmd->add_option("operand", inputs, "operand JSON")->required()->expected(1);
  build_cmd->add_option("--cap-c", f.cap_c, "cap offset C (default: from the file, else auto)");
  build_cmd->add_option("--dim", f.dim, "3 (r_z, t_Mx, t_My) or 6");
  add_output(build_cmd, true);

  auto* export_cmd = app.add_subcommand("export", "convert a polytope JSON file");
  export_cmd->add_option("polytope", inputs, "polytope JSON")->required()->expected(1);
  export_cmd->add_option("--dim", f.dim, "expected dimension");
  add_output(export_cmd, true);

  auto* report_cmd = app.add_subcommand("report", "human-readable listing of a polytope or mechanism file");
  report_cmd->add_option("file", inputs, "polytope or mechanism JSON")->required()->expected(1);
  report_cmd->add_option("--cap-c", f.cap_c, "cap offset C for mechanism files");
  report_cmd->add_option("--margin", f.margin, "box margin for mechanism files");
  report_cmd->add_option("--dim", f.dim, "expected dimension");
  report_cmd->add_option("--out", f.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : InputError;
  }

  return guarded([&]() -> int {
    if (*analyze_cmd) return analyze(inputs.front(), f);
    if (*build_cmd) return build(inputs.front(), f);
    if (*report_cmd) return report(inputs.front(), f);
    if (*export_cmd) {
      const auto ps = read_all(inputs, f);
      emit(ps.front(), f);
      return Ok;
    }
    if (*sum_cmd) {
      auto ps = read_all(inputs, f);
      TrackedPolytope acc = ps.front();
      for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]).first;
      emit(acc, f);
      return Ok;
    }
    if (*inter_cmd) {
      const auto ps = read_all(inputs, f);
      emit(capped_intersection(ps, scalar_flag(f.margin, "margin")).result, f);
      return Ok;
    }
    return InputError;
  });
}
