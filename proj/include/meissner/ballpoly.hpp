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

#include <utility>
#include <vector>

#include "meissner/fpvd.hpp"
#include "meissner/geom.hpp"
#include "meissner/reuleaux2d.hpp"

namespace meissner {

/// Edge of a Reuleaux polyhedron. The arc runs from vertex v0 to vertex v1 on
/// the circle S(a,1) ∩ S(b,1), a < b, counterclockwise about b - a.
struct PolyEdge {
  int v0 = 0;
  int v1 = 0;
  Arc3D arc;
  int a = 0;
  int b = 0;
};

/// Face lying on S(center, 1). Boundary edges are listed counterclockwise as
/// seen from outside; forward[k] says whether edges[k] is walked v0 -> v1.
/// vertices[k] is the vertex where edges[k] starts.
struct PolyFace {
  int center = 0;
  std::vector<int> edges;
  std::vector<bool> forward;
  std::vector<int> vertices;
};

/// Intersection of the unit balls about `centers`. The vertices coincide with
/// the centers, so a vertex index is also a center index, and face i is the
/// face on S(centers[i], 1), which makes the duality map the identity on
/// indices: vertex i <-> face i.
struct ReuleauxPolyhedron {
  std::vector<Vec3> centers;
  std::vector<PolyEdge> edges;
  std::vector<PolyFace> faces;

  int vertexCount() const { return static_cast<int>(centers.size()); }
  int edgeCount() const { return static_cast<int>(edges.size()); }
  int faceCount() const { return static_cast<int>(faces.size()); }
  const Vec3& vertex(int i) const { return centers[i]; }
  /// Index of the edge joining vertices u and v, or -1.
  int edgeBetween(int u, int v) const;
  /// Neighbors of vertex i in the edge graph, increasing.
  std::vector<int> neighbors(int i) const;
};

struct DiameterGraph {
  int nodeCount = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
};

struct LiftResult {
  std::vector<Vec3> top;     // (c_T, +sqrt(1 - r_T^2)) in face order
  std::vector<Vec3> points;  // p_i at z = 0, then the top points
};

/// Throws LiftImaginary if some r_T >= 1.
LiftResult lift(const FarthestPointDiagram& diagram);

/// Pairs at distance 1 within eqTol.
DiameterGraph diameterGraph(const std::vector<Vec3>& points,
                            double eqTol = kEqTol);

/// Every structural check on an assembled polyhedron. Check names:
/// vertices_are_centers, zero_singular, standard, involution,
/// metric_embedding, lattice, edge_count, euler, three_connected,
/// orientation.
ValidationReport checkReuleauxPolyhedron(const ReuleauxPolyhedron& phi,
                                         double eqTol = kEqTol);

/// Computes the face lattice of the intersection of unit balls about X.
/// Throws MetricEmbeddingViolation (a distance above 1, a point with fewer
/// than three diameters, or extracted vertices that differ from X),
/// NotStandard or NotInvolutive. Messages name the offending indices.
ReuleauxPolyhedron buildReuleauxPolyhedron(const std::vector<Vec3>& X,
                                           double eqTol = kEqTol);

struct BoundaryClass {
  enum class Kind { Regular, OneSingular, ZeroSingular, NotOnBoundary };
  Kind kind = Kind::NotOnBoundary;
  /// Center index for Regular, edge index for OneSingular, vertex index for
  /// ZeroSingular; -1 when no such element matches.
  int index = -1;
};

BoundaryClass classifyBoundaryPoint(const ReuleauxPolyhedron& phi,
                                    const Vec3& p, double eqTol = kEqTol);

/// Whether p lies in every ball B(x, 1 + slack).
bool insideBalls(const std::vector<Vec3>& centers, const Vec3& p,
                 double slack = kEqTol);

/// Whether the undirected graph stays connected after deleting any two
/// vertices.
bool isThreeConnected(int nodeCount,
                      const std::vector<std::pair<int, int>>& edges);

}  // namespace meissner
