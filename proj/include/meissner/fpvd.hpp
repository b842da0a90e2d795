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

#include <vector>

#include "meissner/reuleaux2d.hpp"

namespace meissner {

/// A face of the farthest-point Delaunay subdivision: the vertex subset T
/// (0-based, increasing, hence counterclockwise) whose circumscribed disk
/// contains every polygon vertex and touches exactly T.
struct DelaunayFace {
  std::vector<int> vertices;
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
};

/// Node of the farthest-point Voronoi tree: either a disk center c_T (index
/// into the face list) or a polygon vertex leaf.
struct TreeNode {
  enum class Kind { Center, Leaf };
  Kind kind = Kind::Center;
  int index = 0;

  bool operator==(const TreeNode&) const = default;
};

struct TreeEdge {
  TreeNode a;
  TreeNode b;
};

struct FarthestPointDiagram {
  ReuleauxPolygon polygon;
  std::vector<DelaunayFace> faces;
  std::vector<TreeEdge> treeEdges;
  /// Corners of the farthest-point cell of each vertex i, counterclockwise:
  /// the two ends of the arc centered at vertex i and every c_T with i in T.
  /// The cell itself is this polygon plus the bulge of that arc.
  std::vector<std::vector<Vec2>> cellCorners;

  Vec2 nodePosition(const TreeNode& node) const;
  int nodeCount() const {
    return static_cast<int>(faces.size()) + polygon.n();
  }
};

/// Farthest-point Delaunay family, by brute force over vertex triples.
/// Cocircular triples whose circumcircles agree within 10 eqTol are merged.
/// Sorted by smallest index, then lexicographically. Throws DegenerateInput on
/// ambiguous cocircularity, LiftImaginary when some radius reaches 1.
std::vector<DelaunayFace> delaunayFamily(const ReuleauxPolygon& polygon,
                                         double eqTol = kEqTol);

/// Builds the tree V(P) and the cells. Throws NotATree.
FarthestPointDiagram voronoiTree(const ReuleauxPolygon& polygon,
                                 std::vector<DelaunayFace> faces,
                                 double eqTol = kEqTol);

inline FarthestPointDiagram farthestPointDiagram(const ReuleauxPolygon& polygon,
                                                 double eqTol = kEqTol) {
  return voronoiTree(polygon, delaunayFamily(polygon, eqTol), eqTol);
}

/// Whether x is in the farthest-point cell of vertex i (within eqTol).
bool inFarthestCell(const ReuleauxPolygon& polygon, int i, const Vec2& x,
                    double eqTol = kEqTol);

/// Connected and |edges| = |nodes| - 1.
bool isTree(const FarthestPointDiagram& diagram);

double faceArea(const ReuleauxPolygon& polygon, const DelaunayFace& face);

}  // namespace meissner
