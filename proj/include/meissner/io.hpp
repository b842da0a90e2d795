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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "meissner/fpvd.hpp"
#include "meissner/mesh.hpp"
#include "meissner/surgery.hpp"

namespace meissner {

/// Serializes with every floating-point number written as %.17g, arrays of
/// scalars on one line and two-space indentation. Output ends with a newline.
std::string formatJson(const nlohmann::ordered_json& value);

/// Parses text; syntax errors become ParseError with line and column.
nlohmann::json parseJson(const std::string& text);

enum class DocumentKind { Polygon, Diagram, Solid, Meissner, Report, Points };

/// A polygon document is {"n", "vertices"} with no "kind"; every other
/// document names its kind. Throws ParseError.
DocumentKind documentKind(const nlohmann::json& doc);

/// Throws IoError.
std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& contents);

nlohmann::ordered_json polygonJson(const ReuleauxPolygon& polygon);
ReuleauxPolygon polygonFromJson(const nlohmann::json& doc);

/// Tree nodes: a face index (0-based) for c_T, -(i + 1) for the leaf p_i.
/// The vertex sets T are written 1-based.
nlohmann::ordered_json diagramJson(const FarthestPointDiagram& diagram);
FarthestPointDiagram diagramFromJson(const nlohmann::json& doc);

struct SolidDocument {
  ReuleauxPolyhedron phi;
  std::optional<ReuleauxPolygon> polygon;  // when lifted from a polygon
};

nlohmann::ordered_json solidJson(const ReuleauxPolyhedron& phi,
                                 const ReuleauxPolygon* polygon = nullptr);
/// Accepts a solid or a Meissner document (its base).
SolidDocument solidFromJson(const nlohmann::json& doc);

struct MeissnerDocument {
  MeissnerSolid solid;
  std::string surgery;  // label of the choice that produced it
  std::optional<ReuleauxPolygon> polygon;
};

/// Wedges and trimmed faces are written for consumers; reading rebuilds them
/// from the base and the per-pair selection.
nlohmann::ordered_json meissnerJson(const MeissnerSolid& solid,
                                    const std::string& surgery,
                                    const ReuleauxPolygon* polygon = nullptr);
MeissnerDocument meissnerFromJson(const nlohmann::json& doc);

nlohmann::ordered_json pointsJson(const std::vector<Vec3>& points);
std::vector<Vec3> pointsFromJson(const nlohmann::json& doc);

nlohmann::ordered_json arcJson(const Arc3D& arc);
Arc3D arcFromJson(const nlohmann::json& j);

std::string objText(const TriangleMesh& mesh);
void writeObj(const TriangleMesh& mesh, const std::string& path);
/// Reads v and f records; other records are skipped. Throws ParseError.
TriangleMesh readObj(const std::string& path);

/// Little-endian binary STL, float32.
std::string stlBytes(const TriangleMesh& mesh);
void writeStl(const TriangleMesh& mesh, const std::string& path);
/// Corners with identical float32 coordinates become one vertex.
TriangleMesh readStl(const std::string& path);

/// Edge graph with tau as a node attribute and the dual centers on edges.
std::string graphDot(const ReuleauxPolyhedron& phi);
std::string treeDot(const FarthestPointDiagram& diagram);

}  // namespace meissner
