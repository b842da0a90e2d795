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

#include "meissner/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace meissner {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string formatDouble(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool isScalar(const ordered_json& v) { return !v.is_structured(); }

void emit(const ordered_json& v, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (v.type()) {
    case ordered_json::value_t::number_float:
      out += formatDouble(v.get<double>());
      return;
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (std::all_of(v.begin(), v.end(), isScalar)) {
        out += '[';
        bool first = true;
        for (const auto& e : v) {
          if (!first) out += ", ";
          first = false;
          emit(e, indent, out);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < v.size(); ++k) {
        out += inner;
        emit(v[k], indent + 2, out);
        out += k + 1 < v.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      return;
    }
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t k = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++k) {
        out += inner + ordered_json(it.key()).dump() + ": ";
        emit(it.value(), indent + 2, out);
        out += k + 1 < v.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      return;
    }
    default:
      out += v.dump();
  }
}

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + " is not a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " is not an integer");
  return j.get<int>();
}

template <int D>
Eigen::Matrix<double, D, 1> vec(const json& j, const char* what) {
  if (!j.is_array() || j.size() != D)
    fail(std::string(what) + " must have " + std::to_string(D) + " coordinates");
  Eigen::Matrix<double, D, 1> v;
  for (int k = 0; k < D; ++k) v[k] = number(j[k], what);
  return v;
}

ordered_json coords(const Vec2& v) { return ordered_json::array({v.x(), v.y()}); }
ordered_json coords(const Vec3& v) {
  return ordered_json::array({v.x(), v.y(), v.z()});
}

void requireKind(const json& doc, DocumentKind expected, const char* name) {
  if (documentKind(doc) != expected)
    fail(std::string("expected a ") + name + " document");
}

ordered_json nodeJson(const TreeNode& node) {
  return node.kind == TreeNode::Kind::Center ? node.index : -(node.index + 1);
}

TreeNode nodeFromJson(const json& j, int faces, int n) {
  int v = integer(j, "tree node");
  TreeNode node;
  if (v >= 0) {
    if (v >= faces) fail("tree node " + std::to_string(v) + " out of range");
    node = {TreeNode::Kind::Center, v};
  } else {
    if (-v - 1 >= n) fail("tree leaf " + std::to_string(v) + " out of range");
    node = {TreeNode::Kind::Leaf, -v - 1};
  }
  return node;
}

ordered_json solidBody(const ReuleauxPolyhedron& phi) {
  ordered_json centers = ordered_json::array();
  for (const auto& c : phi.centers) centers.push_back(coords(c));
  ordered_json edges = ordered_json::array();
  for (const auto& e : phi.edges) {
    ordered_json je;
    je["vertices"] = {e.v0, e.v1};
    je["dual"] = {e.a, e.b};
    je["arc"] = arcJson(e.arc);
    edges.push_back(je);
  }
  ordered_json faces = ordered_json::array();
  for (const auto& f : phi.faces) {
    ordered_json jf;
    jf["center"] = f.center;
    jf["edges"] = f.edges;
    ordered_json fw = ordered_json::array();
    for (bool b : f.forward) fw.push_back(b);
    jf["forward"] = fw;
    faces.push_back(jf);
  }
  ordered_json tau = ordered_json::array();
  for (int i = 0; i < phi.vertexCount(); ++i) tau.push_back(i);
  ordered_json out;
  out["centers"] = centers;
  out["edges"] = edges;
  out["faces"] = faces;
  out["tau"] = tau;
  return out;
}

ReuleauxPolyhedron solidFromBody(const json& j) {
  ReuleauxPolyhedron phi;
  const json& centers = field(j, "centers");
  if (!centers.is_array()) fail("centers must be an array");
  for (const auto& c : centers) phi.centers.push_back(vec<3>(c, "center"));
  const int nv = phi.vertexCount();
  auto vertexIndex = [&](const json& v, const char* what) {
    int i = integer(v, what);
    if (i < 0 || i >= nv) fail(std::string(what) + " out of range");
    return i;
  };
  const json& edges = field(j, "edges");
  if (!edges.is_array()) fail("edges must be an array");
  for (const auto& je : edges) {
    PolyEdge e;
    const json& v = field(je, "vertices");
    const json& d = field(je, "dual");
    if (!v.is_array() || v.size() != 2 || !d.is_array() || d.size() != 2)
      fail("edge vertices and dual must be pairs");
    e.v0 = vertexIndex(v[0], "edge vertex");
    e.v1 = vertexIndex(v[1], "edge vertex");
    e.a = vertexIndex(d[0], "dual center");
    e.b = vertexIndex(d[1], "dual center");
    e.arc = arcFromJson(field(je, "arc"));
    phi.edges.push_back(e);
  }
  const int ne = phi.edgeCount();
  const json& faces = field(j, "faces");
  if (!faces.is_array()) fail("faces must be an array");
  for (const auto& jf : faces) {
    PolyFace f;
    f.center = vertexIndex(field(jf, "center"), "face center");
    const json& fe = field(jf, "edges");
    const json& fw = field(jf, "forward");
    if (!fe.is_array() || !fw.is_array() || fe.size() != fw.size())
      fail("face edges and forward flags differ in length");
    for (std::size_t k = 0; k < fe.size(); ++k) {
      int e = integer(fe[k], "face edge");
      if (e < 0 || e >= ne) fail("face edge out of range");
      if (!fw[k].is_boolean()) fail("forward flag is not a boolean");
      bool forward = fw[k].get<bool>();
      f.edges.push_back(e);
      f.forward.push_back(forward);
      f.vertices.push_back(forward ? phi.edges[e].v0 : phi.edges[e].v1);
    }
    phi.faces.push_back(f);
  }
  const json& tau = field(j, "tau");
  if (!tau.is_array() || static_cast<int>(tau.size()) != nv)
    fail("tau must map every vertex");
  if (phi.faceCount() != nv) fail("face count differs from vertex count");
  for (int v = 0; v < nv; ++v) {
    int f = integer(tau[v], "tau entry");
    if (f < 0 || f >= phi.faceCount() || phi.faces[f].center != v)
      fail("tau must send vertex " + std::to_string(v) +
           " to the face centered at it");
  }
  return phi;
}

std::optional<ReuleauxPolygon> optionalPolygon(const json& doc) {
  if (!doc.contains("polygon")) return std::nullopt;
  return polygonFromJson(doc.at("polygon"));
}

ordered_json curveJson(const BoundaryCurve& c) {
  ordered_json j;
  j["kind"] = c.kind == BoundaryCurve::Kind::EdgeArc ? "edge" : "trim";
  j["edge"] = c.edge;
  j["forward"] = c.forward;
  j["arc"] = arcJson(c.arc);
  return j;
}

ordered_json wedgeJson(const Wedge& w) {
  ordered_json j;
  j["pair"] = w.pair;
  j["surgered"] = w.surgeredEdge;
  j["retained"] = w.retainedEdge;
  j["x"] = w.x;
  j["y"] = w.y;
  j["a"] = w.a;
  j["b"] = w.b;
  j["dualArc"] = arcJson(w.dualArc);
  j["sigmaA"] = arcJson(w.sigmaA);
  j["sigmaB"] = arcJson(w.sigmaB);
  return j;
}

void put32(std::string& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out += static_cast<char>((v >> (8 * k)) & 0xff);
}

void putFloat(std::string& out, double v) {
  float f = static_cast<float>(v);
  std::uint32_t bits;
  std::memcpy(&bits, &f, 4);
  put32(out, bits);
}

std::uint32_t get32(const std::string& s, std::size_t at) {
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + k]))
         << (8 * k);
  return v;
}

float getFloat(const std::string& s, std::size_t at) {
  std::uint32_t bits = get32(s, at);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

}  // namespace

std::string formatJson(const ordered_json& value) {
  std::string out;
  emit(value, 0, out);
  out += '\n';
  return out;
}

json parseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    int line = 1;
    std::size_t lineStart = 0;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k)
      if (text[k] == '\n') {
        ++line;
        lineStart = k + 1;
      }
    fail("line " + std::to_string(line) + ", column " +
         std::to_string(byte - lineStart + 1) + " (offset " +
         std::to_string(byte) + "): " + e.what());
  }
}

DocumentKind documentKind(const json& doc) {
  if (!doc.is_object()) fail("document is not an object");
  if (!doc.contains("kind")) {
    if (doc.contains("n") && doc.contains("vertices")) return DocumentKind::Polygon;
    fail("document has no \"kind\" and is not a polygon");
  }
  const json& k = doc.at("kind");
  if (!k.is_string()) fail("\"kind\" is not a string");
  static const std::map<std::string, DocumentKind> kinds = {
      {"polygon", DocumentKind::Polygon}, {"diagram", DocumentKind::Diagram},
      {"solid", DocumentKind::Solid},     {"meissner", DocumentKind::Meissner},
      {"report", DocumentKind::Report},   {"points", DocumentKind::Points}};
  auto it = kinds.find(k.get<std::string>());
  if (it == kinds.end()) fail("unknown kind \"" + k.get<std::string>() + "\"");
  return it->second;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
  return ss.str();
}

void writeFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

ordered_json polygonJson(const ReuleauxPolygon& polygon) {
  ordered_json j;
  j["n"] = polygon.n();
  ordered_json vs = ordered_json::array();
  for (const auto& v : polygon.vertices) vs.push_back(coords(v));
  j["vertices"] = vs;
  return j;
}

ReuleauxPolygon polygonFromJson(const json& doc) {
  requireKind(doc, DocumentKind::Polygon, "polygon");
  int n = integer(field(doc, "n"), "n");
  const json& vs = field(doc, "vertices");
  if (!vs.is_array() || static_cast<int>(vs.size()) != n)
    fail("vertex count differs from n");
  ReuleauxPolygon p;
  for (const auto& v : vs) p.vertices.push_back(vec<2>(v, "vertex"));
  return p;
}

ordered_json diagramJson(const FarthestPointDiagram& d) {
  ordered_json j;
  j["kind"] = "diagram";
  j["polygon"] = polygonJson(d.polygon);
  ordered_json faces = ordered_json::array();
  for (const auto& f : d.faces) {
    ordered_json jf;
    ordered_json t = ordered_json::array();
    for (int v : f.vertices) t.push_back(v + 1);
    jf["T"] = t;
    jf["center"] = coords(f.center);
    jf["radius"] = f.radius;
    faces.push_back(jf);
  }
  j["faces"] = faces;
  ordered_json tree = ordered_json::array();
  for (const auto& e : d.treeEdges)
    tree.push_back(ordered_json::array({nodeJson(e.a), nodeJson(e.b)}));
  j["tree"] = tree;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : d.cellCorners) {
    ordered_json jc = ordered_json::array();
    for (const auto& c : cell) jc.push_back(coords(c));
    cells.push_back(jc);
  }
  j["cells"] = cells;
  return j;
}

FarthestPointDiagram diagramFromJson(const json& doc) {
  requireKind(doc, DocumentKind::Diagram, "diagram");
  FarthestPointDiagram d;
  d.polygon = polygonFromJson(field(doc, "polygon"));
  const int n = d.polygon.n();
  const json& faces = field(doc, "faces");
  if (!faces.is_array()) fail("faces must be an array");
  for (const auto& jf : faces) {
    DelaunayFace f;
    const json& t = field(jf, "T");
    if (!t.is_array() || t.size() < 3) fail("T needs at least three vertices");
    for (const auto& v : t) {
      int i = integer(v, "T entry");
      if (i < 1 || i > n) fail("T entry out of range");
      f.vertices.push_back(i - 1);
    }
    f.center = vec<2>(field(jf, "center"), "face center");
    f.radius = number(field(jf, "radius"), "radius");
    d.faces.push_back(f);
  }
  const int nf = static_cast<int>(d.faces.size());
  const json& tree = field(doc, "tree");
  if (!tree.is_array()) fail("tree must be an array");
  for (const auto& je : tree) {
    if (!je.is_array() || je.size() != 2) fail("tree edge must be a pair");
    d.treeEdges.push_back({nodeFromJson(je[0], nf, n), nodeFromJson(je[1], nf, n)});
  }
  const json& cells = field(doc, "cells");
  if (!cells.is_array() || static_cast<int>(cells.size()) != n)
    fail("one cell per vertex expected");
  for (const auto& jc : cells) {
    if (!jc.is_array()) fail("cell must be an array");
    std::vector<Vec2> cell;
    for (const auto& c : jc) cell.push_back(vec<2>(c, "cell corner"));
    d.cellCorners.push_back(cell);
  }
  return d;
}

ordered_json arcJson(const Arc3D& arc) {
  ordered_json j;
  j["center"] = coords(arc.center());
  j["radius"] = arc.radius();
  j["normal"] = coords(arc.normal().vec());
  j["start"] = arc.start();
  j["sweep"] = arc.sweep();
  return j;
}

Arc3D arcFromJson(const json& j) {
  Vec3 normal = vec<3>(field(j, "normal"), "arc normal");
  UnitVector3 n;
  try {
    n = UnitVector3::fromNormalized(normal);
  } catch (const Error&) {
    fail("arc normal is not a unit vector");
  }
  double radius = number(field(j, "radius"), "arc radius");
  double sweep = number(field(j, "sweep"), "arc sweep");
  if (!(radius > 0.0) || !(sweep >= 0.0)) fail("arc radius or sweep out of range");
  return Arc3D(vec<3>(field(j, "center"), "arc center"), radius, n,
               number(field(j, "start"), "arc start"), sweep);
}

ordered_json solidJson(const ReuleauxPolyhedron& phi,
                       const ReuleauxPolygon* polygon) {
  ordered_json j;
  j["kind"] = "solid";
  if (polygon) j["polygon"] = polygonJson(*polygon);
  ordered_json body = solidBody(phi);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

SolidDocument solidFromJson(const json& doc) {
  DocumentKind kind = documentKind(doc);
  if (kind == DocumentKind::Meissner) {
    SolidDocument out;
    out.phi = solidFromBody(field(doc, "base"));
    out.polygon = optionalPolygon(doc);
    return out;
  }
  if (kind != DocumentKind::Solid) fail("expected a solid document");
  return {solidFromBody(doc), optionalPolygon(doc)};
}

ordered_json meissnerJson(const MeissnerSolid& solid, const std::string& surgery,
                          const ReuleauxPolygon* polygon) {
  ordered_json j;
  j["kind"] = "meissner";
  j["surgery"] = surgery;
  if (polygon) j["polygon"] = polygonJson(*polygon);
  j["base"] = solidBody(solid.base);
  ordered_json pairs = ordered_json::array();
  for (const auto& p : solid.pairs)
    pairs.push_back(ordered_json::array({p.edgeA, p.edgeB}));
  j["pairs"] = pairs;
  j["surgered"] = solid.surgered;
  ordered_json wedges = ordered_json::array();
  for (const auto& w : solid.wedges) wedges.push_back(wedgeJson(w));
  j["wedges"] = wedges;
  ordered_json faces = ordered_json::array();
  for (const auto& f : solid.faces) {
    ordered_json jf;
    jf["center"] = f.center;
    ordered_json curves = ordered_json::array();
    for (const auto& c : f.boundary) curves.push_back(curveJson(c));
    jf["boundary"] = curves;
    faces.push_back(jf);
  }
  j["faces"] = faces;
  return j;
}

MeissnerDocument meissnerFromJson(const json& doc) {
  requireKind(doc, DocumentKind::Meissner, "meissner");
  MeissnerDocument out;
  ReuleauxPolyhedron phi = solidFromBody(field(doc, "base"));
  const json& s = field(doc, "surgered");
  if (!s.is_array()) fail("surgered must be an array");
  std::vector<int> surgered;
  for (const auto& v : s) surgered.push_back(integer(v, "surgered edge"));
  try {
    out.solid = assembleSurface(phi, surgered);
  } catch (const Error& e) {
    fail(std::string("cannot rebuild the surface: ") + e.what());
  }
  const json& pairs = field(doc, "pairs");
  bool same = pairs.is_array() && pairs.size() == out.solid.pairs.size();
  for (std::size_t k = 0; same && k < pairs.size(); ++k)
    same = pairs[k].is_array() && pairs[k].size() == 2 &&
           pairs[k][0] == out.solid.pairs[k].edgeA &&
           pairs[k][1] == out.solid.pairs[k].edgeB;
  if (!same) fail("stored dual pairs differ from those of the base solid");
  const json& label = field(doc, "surgery");
  if (!label.is_string()) fail("surgery is not a string");
  out.surgery = label.get<std::string>();
  out.polygon = optionalPolygon(doc);
  return out;
}

ordered_json pointsJson(const std::vector<Vec3>& points) {
  ordered_json j;
  j["kind"] = "points";
  ordered_json ps = ordered_json::array();
  for (const auto& p : points) ps.push_back(coords(p));
  j["points"] = ps;
  return j;
}

std::vector<Vec3> pointsFromJson(const json& doc) {
  requireKind(doc, DocumentKind::Points, "points");
  const json& ps = field(doc, "points");
  if (!ps.is_array()) fail("points must be an array");
  std::vector<Vec3> out;
  for (const auto& p : ps) out.push_back(vec<3>(p, "point"));
  return out;
}

std::string objText(const TriangleMesh& mesh) {
  std::string out = "# Meissner solid mesh\n";
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out += buf;
  }
  for (const auto& t : mesh.triangles) {
    std::snprintf(buf, sizeof buf, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    out += buf;
  }
  return out;
}

void writeObj(const TriangleMesh& mesh, const std::string& path) {
  writeFile(path, objText(mesh));
}

TriangleMesh readObj(const std::string& path) {
  std::istringstream in(readFile(path));
  TriangleMesh mesh;
  std::string line;
  int lineNo = 0;
  auto bad = [&](const std::string& what) {
    fail(path + ": line " + std::to_string(lineNo) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x() >> v.y() >> v.z())) bad("malformed vertex");
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<int> ids;
      std::string tok;
      while (ls >> tok) {
        int id = 0;
        try {
          id = std::stoi(tok.substr(0, tok.find('/')));
        } catch (const std::exception&) {
          bad("malformed face index \"" + tok + "\"");
        }
        if (id < 0) id += static_cast<int>(mesh.vertices.size()) + 1;
        if (id < 1 || id > static_cast<int>(mesh.vertices.size()))
          bad("face index out of range");
        ids.push_back(id - 1);
      }
      if (ids.size() < 3) bad("face with fewer than three vertices");
      for (std::size_t k = 1; k + 1 < ids.size(); ++k) {
        mesh.triangles.push_back({ids[0], ids[k], ids[k + 1]});
        mesh.provenance.push_back({});
      }
    }
  }
  return mesh;
}

std::string stlBytes(const TriangleMesh& mesh) {
  std::string out(80, '\0');
  const char header[] = "binary STL, Meissner solid";
  std::memcpy(out.data(), header, sizeof header - 1);
  put32(out, static_cast<std::uint32_t>(mesh.triangles.size()));
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    Vec3 n = (b - a).cross(c - a);
    double len = n.norm();
    if (len > 0.0) n /= len;
    for (const Vec3* p : std::array<const Vec3*, 4>{&n, &a, &b, &c})
      for (int k = 0; k < 3; ++k) putFloat(out, (*p)[k]);
    out += '\0';
    out += '\0';
  }
  return out;
}

void writeStl(const TriangleMesh& mesh, const std::string& path) {
  writeFile(path, stlBytes(mesh));
}

TriangleMesh readStl(const std::string& path) {
  std::string bytes = readFile(path);
  if (bytes.size() < 84) fail(path + ": offset 0: shorter than an STL header");
  std::uint32_t count = get32(bytes, 80);
  if (bytes.size() != 84 + 50 * static_cast<std::size_t>(count))
    fail(path + ": offset 80: triangle count " + std::to_string(count) +
         " does not match the file size");
  TriangleMesh mesh;
  std::map<std::array<float, 3>, int> index;
  for (std::uint32_t t = 0; t < count; ++t) {
    std::size_t base = 84 + 50 * static_cast<std::size_t>(t) + 12;
    std::array<int, 3> tri{};
    for (int c = 0; c < 3; ++c) {
      std::array<float, 3> p{};
      for (int k = 0; k < 3; ++k) p[k] = getFloat(bytes, base + 12 * c + 4 * k);
      auto [it, inserted] =
          index.emplace(p, static_cast<int>(mesh.vertices.size()));
      if (inserted) mesh.vertices.emplace_back(p[0], p[1], p[2]);
      tri[c] = it->second;
    }
    mesh.triangles.push_back(tri);
    mesh.provenance.push_back({});
  }
  return mesh;
}

std::string graphDot(const ReuleauxPolyhedron& phi) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < phi.vertexCount(); ++v)
    out << "  " << v << " [tau=" << v << "];\n";
  for (int e = 0; e < phi.edgeCount(); ++e) {
    const PolyEdge& edge = phi.edges[e];
    out << "  " << edge.v0 << " -- " << edge.v1 << " [edge=" << e << ", dual=\""
        << edge.a << "," << edge.b << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string treeDot(const FarthestPointDiagram& d) {
  auto name = [](const TreeNode& node) {
    return (node.kind == TreeNode::Kind::Center ? "c" : "p") +
           std::to_string(node.index);
  };
  std::ostringstream out;
  out << "graph V {\n";
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    out << "  c" << f << " [label=\"T={";
    for (std::size_t k = 0; k < d.faces[f].vertices.size(); ++k)
      out << (k ? "," : "") << d.faces[f].vertices[k] + 1;
    out << "}\"];\n";
  }
  for (int i = 0; i < d.polygon.n(); ++i)
    out << "  p" << i << " [shape=box, label=\"p" << i + 1 << "\"];\n";
  for (const auto& e : d.treeEdges)
    out << "  " << name(e.a) << " -- " << name(e.b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace meissner
