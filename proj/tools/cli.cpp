// Copyright 2026 The Meissner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "CLI11.hpp"
#include "meissner/analysis.hpp"
#include "meissner/io.hpp"

namespace meissner::cli {

using nlohmann::ordered_json;

namespace {

struct Config {
  int n = 3;
  std::string kind = "regular";
  std::uint64_t seed = 0;
  std::string surgery = "bottom";
  int untouched = -1;
  int directions = 100000;
  double tol = 1e-9;
  int level = 5;
  std::string format = "obj";
  std::string stage = "meissner";
  std::string output;
  std::string input;
  int threads = 0;
};

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool isUsageError(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadMask:
    case ErrorCode::EvenOrTooSmallN:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return true;
    default:
      return false;
  }
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty())
    out << text;
  else
    writeFile(cfg.output, text);
}

ordered_json checkJson(const ValidationCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["residual"] = c.residual;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

ordered_json widthJson(const WidthReport& w) {
  ordered_json j;
  j["directions"] = w.directionsSampled;
  j["min"] = w.minWidth;
  j["max"] = w.maxWidth;
  j["worstDirection"] = ordered_json::array(
      {w.worstDirection.x(), w.worstDirection.y(), w.worstDirection.z()});
  j["tolerance"] = w.tolerance;
  j["pass"] = w.pass;
  return j;
}

struct Loaded {
  DocumentKind kind;
  nlohmann::json doc;
};

Loaded load(const std::string& path) {
  nlohmann::json doc = parseJson(readFile(path));
  return {documentKind(doc), doc};
}

/// Base polyhedron from a points, solid or Meissner document, or by lifting a
/// polygon or diagram.
SolidDocument solidOf(const Loaded& in) {
  switch (in.kind) {
    case DocumentKind::Polygon: {
      ReuleauxPolygon p = polygonFromJson(in.doc);
      return {buildReuleauxPolyhedron(lift(farthestPointDiagram(p)).points), p};
    }
    case DocumentKind::Diagram: {
      FarthestPointDiagram d = diagramFromJson(in.doc);
      return {buildReuleauxPolyhedron(lift(d).points), d.polygon};
    }
    case DocumentKind::Points:
      return {buildReuleauxPolyhedron(pointsFromJson(in.doc)), std::nullopt};
    case DocumentKind::Solid:
    case DocumentKind::Meissner:
      return solidFromJson(in.doc);
    case DocumentKind::Report:
      break;
  }
  throw Usage("a report cannot be used as input");
}

MeissnerSolid surger(const ReuleauxPolyhedron& phi, const Config& cfg,
                     std::string& label) {
  SurgeryChoice choice = SurgeryChoice::parse(cfg.surgery);
  std::vector<DualEdgePair> pairs = dualPairs(phi);
  std::vector<int> selected = resolveChoice(phi, pairs, choice);
  label = choice.toString();
  if (cfg.untouched >= 0) {
    if (cfg.untouched >= static_cast<int>(pairs.size()))
      throw Usage("--untouched " + std::to_string(cfg.untouched) +
                  " exceeds the pair count " + std::to_string(pairs.size()));
    selected[cfg.untouched] = -1;
    label += "+untouched:" + std::to_string(cfg.untouched);
  }
  return assembleSurface(phi, selected);
}

MeissnerDocument meissnerOf(const Loaded& in, const Config& cfg) {
  if (in.kind == DocumentKind::Meissner) return meissnerFromJson(in.doc);
  SolidDocument s = solidOf(in);
  MeissnerDocument m;
  m.solid = surger(s.phi, cfg, m.surgery);
  m.polygon = s.polygon;
  return m;
}

int cmdGen(const Config& cfg, std::ostream& out) {
  ReuleauxPolygon p;
  if (cfg.kind == "regular")
    p = makeRegular(cfg.n);
  else
    p = makeRandom(cfg.n, cfg.seed);
  emit(cfg, formatJson(polygonJson(p)), out);
  return kOk;
}

int cmdBuild(const Config& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  if (cfg.stage == "diagram") {
    if (in.kind != DocumentKind::Polygon)
      throw Usage("--stage diagram needs a polygon");
    emit(cfg, formatJson(diagramJson(farthestPointDiagram(polygonFromJson(in.doc)))),
         out);
    return kOk;
  }
  SolidDocument s = solidOf(in);
  const ReuleauxPolygon* poly = s.polygon ? &*s.polygon : nullptr;
  if (cfg.stage == "solid") {
    emit(cfg, formatJson(solidJson(s.phi, poly)), out);
    return kOk;
  }
  std::string label;
  MeissnerSolid m = surger(s.phi, cfg, label);
  emit(cfg, formatJson(meissnerJson(m, label, poly)), out);
  return kOk;
}

int cmdSurgery(const Config& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  if (in.kind != DocumentKind::Solid && in.kind != DocumentKind::Meissner)
    throw Usage("surgery needs a solid or meissner document");
  SolidDocument s = solidFromJson(in.doc);
  std::string label;
  MeissnerSolid m = surger(s.phi, cfg, label);
  emit(cfg, formatJson(meissnerJson(m, label, s.polygon ? &*s.polygon : nullptr)),
       out);
  return kOk;
}

int cmdVerify(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg.input);
  ordered_json report;
  report["kind"] = "report";
  std::vector<ValidationCheck> checks;
  auto add = [&](const ValidationReport& r) {
    checks.insert(checks.end(), r.checks.begin(), r.checks.end());
  };
  std::optional<WidthReport> width;
  std::optional<ReuleauxPolygon> polygon;

  switch (in.kind) {
    case DocumentKind::Polygon:
      report["input"] = "polygon";
      polygon = polygonFromJson(in.doc);
      add(validate(*polygon));
      break;
    case DocumentKind::Diagram: {
      report["input"] = "diagram";
      FarthestPointDiagram d = diagramFromJson(in.doc);
      add(validate(d.polygon));
      checks.push_back({"tree", isTree(d), 0.0, ""});
      break;
    }
    case DocumentKind::Points:
    case DocumentKind::Solid: {
      report["input"] = "solid";
      SolidDocument s = solidOf(in);
      add(checkReuleauxPolyhedron(s.phi));
      polygon = s.polygon;
      break;
    }
    case DocumentKind::Meissner: {
      report["input"] = "meissner";
      MeissnerDocument m = meissnerFromJson(in.doc);
      report["surgery"] = m.surgery;
      add(checkReuleauxPolyhedron(m.solid.base));
      checks.push_back({"all_pairs_surgered", m.solid.complete(), 0.0,
                        m.solid.complete() ? "" : "some dual pair is untouched"});
      checks.push_back(wedgeContainmentCheck(m.solid));
      checks.push_back(geodesicTrimCheck(m.solid));
      checks.push_back(closureCheck(m.solid));
      checks.push_back(normalChordCheck(m.solid));
      checks.push_back(antipodeCheck(m.solid));
      if (m.polygon) checks.push_back(sliceCheck(m.solid, *m.polygon));
      DirectionSampler sampler;
      sampler.count = cfg.directions;
      width = constantWidthCheck(m.solid, sampler, cfg.tol);
      checks.push_back({"constant_width", width->pass,
                        std::max(width->maxWidth - 1.0, 1.0 - width->minWidth),
                        ""});
      polygon = m.polygon;
      break;
    }
    case DocumentKind::Report:
      throw Usage("a report cannot be verified");
  }
  if (polygon && in.kind != DocumentKind::Polygon) {
    DiameterReport d = halfBodyDiameterCheck(farthestPointDiagram(*polygon));
    checks.push_back({"half_body_diameter", d.pass, std::abs(d.maxDistance - 1.0),
                      ""});
  }

  bool pass = std::all_of(checks.begin(), checks.end(),
                          [](const ValidationCheck& c) { return c.pass; });
  report["pass"] = pass;
  ordered_json jc = ordered_json::array();
  for (const auto& c : checks) jc.push_back(checkJson(c));
  report["checks"] = jc;
  if (width) report["width"] = widthJson(*width);
  emit(cfg, formatJson(report), out);
  for (const auto& c : checks)
    if (!c.pass)
      err << "check " << c.name << " failed (residual " << c.residual << ")"
          << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  if (width && !width->pass)
    err << "width range [" << width->minWidth << ", " << width->maxWidth
        << "], worst direction (" << width->worstDirection.x() << ", "
        << width->worstDirection.y() << ", " << width->worstDirection.z()
        << ")\n";
  return pass ? kOk : kFailed;
}

TriangleMesh meshOf(const Loaded& in, const Config& cfg) {
  if (in.kind == DocumentKind::Solid || in.kind == DocumentKind::Points)
    return tessellate(solidOf(in).phi, cfg.level);
  return tessellate(meissnerOf(in, cfg).solid, cfg.level);
}

int cmdMesh(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.output.empty()) throw Usage("mesh needs -o");
  TriangleMesh mesh = meshOf(load(cfg.input), cfg);
  ValidationReport r = checkMesh(mesh);
  if (cfg.format == "stl")
    writeStl(mesh, cfg.output);
  else
    writeObj(mesh, cfg.output);
  out << mesh.vertices.size() << " vertices, " << mesh.triangles.size()
      << " triangles\n";
  for (const auto& w : mesh.warnings) err << "warning: " << w << "\n";
  for (const auto& c : r.checks)
    if (!c.pass) err << "mesh check " << c.name << " failed: " << c.detail << "\n";
  return r.pass() ? kOk : kFailed;
}

int cmdInfo(const Config& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  ordered_json info;
  info["kind"] = "report";
  if (in.kind == DocumentKind::Polygon || in.kind == DocumentKind::Diagram) {
    ReuleauxPolygon p = in.kind == DocumentKind::Polygon
                            ? polygonFromJson(in.doc)
                            : diagramFromJson(in.doc).polygon;
    FarthestPointDiagram d = farthestPointDiagram(p);
    info["input"] = "polygon";
    info["n"] = p.n();
    info["delaunayFaces"] = d.faces.size();
    info["treeEdges"] = d.treeEdges.size();
    info["hullArea"] = hullArea(p);
    emit(cfg, formatJson(info), out);
    return kOk;
  }
  MeissnerDocument m = meissnerOf(in, cfg);
  const ReuleauxPolyhedron& phi = m.solid.base;
  info["input"] = in.kind == DocumentKind::Meissner ? "meissner" : "solid";
  info["surgery"] = m.surgery;
  info["vertices"] = phi.vertexCount();
  info["edges"] = phi.edgeCount();
  info["faces"] = phi.faceCount();
  info["euler"] = phi.vertexCount() - phi.edgeCount() + phi.faceCount();
  info["dualPairs"] = m.solid.pairs.size();
  info["wedges"] = m.solid.wedges.size();
  TriangleMesh mesh = tessellate(m.solid, cfg.level);
  VolumeArea va = volumeAndArea(mesh);
  info["meshLevel"] = cfg.level;
  info["volume"] = va.volume;
  info["area"] = va.area;
  DirectionSampler sampler;
  sampler.count = cfg.directions;
  info["width"] = widthJson(constantWidthCheck(m.solid, sampler, cfg.tol));
  emit(cfg, formatJson(info), out);
  return kOk;
}

int cmdGraph(const Config& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  if (in.kind == DocumentKind::Polygon) {
    emit(cfg, treeDot(farthestPointDiagram(polygonFromJson(in.doc))), out);
  } else if (in.kind == DocumentKind::Diagram) {
    emit(cfg, treeDot(diagramFromJson(in.doc)), out);
  } else {
    emit(cfg, graphDot(solidOf(in).phi), out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Constant-width bodies from Reuleaux polygons", "meissner-cli"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "Worker thread cap (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("gen", "Generate a Reuleaux polygon");
  gen->add_option("--n", cfg.n, "Vertex count (odd, >= 3)");
  gen->add_option("--kind", cfg.kind)->check(CLI::IsMember({"regular", "random"}));
  gen->add_option("--seed", cfg.seed);

  auto* build = app.add_subcommand(
      "build", "Lift a polygon (or points) to a Reuleaux polyhedron and surger it");
  build->add_option("input", cfg.input)->required();
  build->add_option("--stage", cfg.stage, "Last stage to run")
      ->check(CLI::IsMember({"diagram", "solid", "meissner"}));

  auto* surgery = app.add_subcommand("surgery", "Surger an existing polyhedron");
  surgery->add_option("input", cfg.input)->required();

  for (auto* sub : {build, surgery}) {
    sub->add_option("--surgery", cfg.surgery, "bottom, top or mask:<hex>");
    sub->add_option("--untouched", cfg.untouched,
                    "Leave this dual pair unsurgered (a control body)")
        ->check(CLI::NonNegativeNumber);
  }

  auto* verify = app.add_subcommand("verify", "Check every invariant");
  verify->add_option("input", cfg.input)->required();

  auto* mesh = app.add_subcommand("mesh", "Export a triangle mesh");
  mesh->add_option("input", cfg.input)->required();
  mesh->add_option("--format", cfg.format)->check(CLI::IsMember({"obj", "stl"}));

  auto* info = app.add_subcommand("info", "Counts, volume and width range");
  info->add_option("input", cfg.input)->required();

  auto* graph = app.add_subcommand("graph", "DOT export of the edge graph or tree");
  graph->add_option("input", cfg.input)->required();

  for (auto* sub : {verify, info})
    sub->add_option("--directions", cfg.directions)->check(CLI::PositiveNumber);
  verify->add_option("--tol", cfg.tol)->check(CLI::PositiveNumber);
  info->add_option("--tol", cfg.tol)->check(CLI::PositiveNumber);
  for (auto* sub : {mesh, info})
    sub->add_option("--level", cfg.level)->check(CLI::Range(0, 12));
  for (auto* sub : {gen, build, surgery, verify, mesh, info, graph})
    sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  setThreadLimit(cfg.threads);
  try {
    if (*gen) return cmdGen(cfg, out);
    if (*build) return cmdBuild(cfg, out);
    if (*surgery) return cmdSurgery(cfg, out);
    if (*verify) return cmdVerify(cfg, out, err);
    if (*mesh) return cmdMesh(cfg, out, err);
    if (*info) return cmdInfo(cfg, out);
    if (*graph) return cmdGraph(cfg, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return isUsageError(e.code()) ? kUsage : kFailed;
  }
  return kUsage;
}

}  // namespace meissner::cli
