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

#include <array>
#include <string>
#include <vector>

#include "meissner/surgery.hpp"

namespace meissner {

struct MeshTag {
  // SeamStrip is never emitted: adjacent patches share seam vertices, so no
  // stitching triangles are needed.
  enum class Kind { Cap, Wedge, SeamStrip, Sphere };
  Kind kind = Kind::Cap;
  int index = 0;  // face center for a cap, pair for a wedge

  bool operator==(const MeshTag&) const = default;
};

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise from outside
  std::vector<MeshTag> provenance;            // one per triangle
  std::vector<std::string> warnings;          // e.g. caps that fell back to ear clipping
};

/// Whether the closed boundary polyline of a cap on S(center, 1) winds once,
/// with strictly monotone angle, around `apex` in the gnomonic projection
/// from the center.
bool capStarShaped(const Vec3& center, const Vec3& apex,
                   const std::vector<Vec3>& ring);

/// Ear clipping of a cap boundary in the gnomonic projection about `apex`.
/// Returns index triples into ring. Throws DegenerateInput when the boundary
/// leaves the open hemisphere about apex or no ear can be found.
std::vector<std::array<int, 3>> earClipCap(const Vec3& center, const Vec3& apex,
                                           const std::vector<Vec3>& ring);

/// Caps are fans plus quad rings from a spherical centroid to the boundary
/// polyline, or an ear clipping of the polyline (with a warning) when the
/// centroid does not see all of it; wedges are (s, t) grids. Every curve gets 2^level + 1 samples
/// shared by both adjacent patches. The first vertices are the polyhedron
/// vertices, in order.
TriangleMesh tessellate(const MeissnerSolid& solid, int level);

/// Boundary of the ball polyhedron itself (no surgery).
TriangleMesh tessellate(const ReuleauxPolyhedron& phi, int level);

/// Octahedron subdivided `level` times, projected to the sphere.
TriangleMesh tessellateSphere(const Vec3& center, double radius, int level);

/// Checks: watertight, oriented, nondegenerate, euler (characteristic 2).
ValidationReport checkMesh(const TriangleMesh& mesh);

/// Largest distance between two mesh vertices.
double vertexDiameter(const TriangleMesh& mesh);

/// Distance from p to the closest point of the triangle surface.
double distanceToMesh(const TriangleMesh& mesh, const Vec3& p);

/// max u.v - min u.v over mesh vertices.
double meshWidth(const TriangleMesh& mesh, const Vec3& u);

}  // namespace meissner
