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

#include "meissner/fpvd.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace meissner {
namespace {

// Residuals between the merge threshold and this band are treated as
// ambiguous cocircularity rather than silently classified.
constexpr double kAmbiguityBand = 1e-6;

int findRoot(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

int nodeId(const FarthestPointDiagram& d, const TreeNode& node) {
  return node.kind == TreeNode::Kind::Center
             ? node.index
             : static_cast<int>(d.faces.size()) + node.index;
}

}  // namespace

std::vector<DelaunayFace> delaunayFamily(const ReuleauxPolygon& polygon,
                                         double eqTol) {
  const int n = polygon.n();
  const auto& p = polygon.vertices;
  const double mergeTol = 10.0 * eqTol;
  std::vector<DelaunayFace> faces;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Circle2 disk;
        try {
          disk = circumcircle(p[i], p[j], p[k], eqTol);
        } catch (const Error&) {
          continue;
        }
        double excess = -1.0;
        for (int m = 0; m < n && excess <= kAmbiguityBand; ++m) {
          excess = std::max(excess, (p[m] - disk.center).norm() - disk.radius);
        }
        if (excess > kAmbiguityBand) continue;
        if (excess > mergeTol) {
          std::ostringstream msg;
          msg << "vertex lies " << excess << " outside the circumcircle of ("
              << i << "," << j << "," << k << ")";
          throw Error(ErrorCode::DegenerateInput, msg.str());
        }

        DelaunayFace face{{}, disk.center, disk.radius};
        for (int m = 0; m < n; ++m) {
          const double gap = std::abs((p[m] - disk.center).norm() - disk.radius);
          if (gap <= mergeTol) {
            face.vertices.push_back(m);
          } else if (gap <= kAmbiguityBand) {
            std::ostringstream msg;
            msg << "vertex " << m << " is " << gap
                << " from the circle of (" << i << "," << j << "," << k << ")";
            throw Error(ErrorCode::DegenerateInput, msg.str());
          }
        }

        const auto same = std::find_if(faces.begin(), faces.end(), [&](const DelaunayFace& f) {
          return (f.center - face.center).norm() <= mergeTol &&
                 std::abs(f.radius - face.radius) <= mergeTol;
        });
        if (same != faces.end()) {
          if (same->vertices != face.vertices) {
            throw Error(ErrorCode::DegenerateInput,
                        "coincident disks with different touch sets");
          }
          continue;
        }
        if (face.radius >= 1.0) {
          std::ostringstream msg;
          msg << "disk radius " << face.radius << " >= 1 for face (" << i << ","
              << j << "," << k << ")";
          throw Error(ErrorCode::LiftImaginary, msg.str());
        }
        faces.push_back(std::move(face));
      }
    }
  }
  std::sort(faces.begin(), faces.end(), [](const DelaunayFace& a, const DelaunayFace& b) {
    return a.vertices < b.vertices;
  });
  return faces;
}

Vec2 FarthestPointDiagram::nodePosition(const TreeNode& node) const {
  return node.kind == TreeNode::Kind::Center ? faces[node.index].center
                                             : polygon.vertices[node.index];
}

FarthestPointDiagram voronoiTree(const ReuleauxPolygon& polygon,
                                 std::vector<DelaunayFace> faces,
                                 double eqTol) {
  const int n = polygon.n();
  FarthestPointDiagram diagram;
  diagram.polygon = polygon;
  diagram.faces = std::move(faces);

  std::map<std::pair<int, int>, std::vector<int>> sides;
  for (int f = 0; f < static_cast<int>(diagram.faces.size()); ++f) {
    const auto& t = diagram.faces[f].vertices;
    for (size_t a = 0; a < t.size(); ++a) {
      const int u = t[a];
      const int v = t[(a + 1) % t.size()];
      sides[{std::min(u, v), std::max(u, v)}].push_back(f);
    }
  }

  std::vector<bool> leafSeen(n, false);
  for (const auto& [side, owners] : sides) {
    const auto [u, v] = side;
    const bool hullEdge = (v == u + 1) || (u == 0 && v == n - 1);
    if (hullEdge) {
      if (owners.size() != 1) {
        throw Error(ErrorCode::NotATree, "hull edge shared by several faces");
      }
      const int j = (u == 0 && v == n - 1) ? n - 1 : u;
      const int leaf = polygon.opposite(j);
      const double du = (polygon.vertices[leaf] - polygon.vertices[u]).norm();
      const double dv = (polygon.vertices[leaf] - polygon.vertices[v]).norm();
      if (std::abs(du - 1.0) > eqTol || std::abs(dv - 1.0) > eqTol || leafSeen[leaf]) {
        std::ostringstream msg;
        msg << "cannot attach leaf " << leaf << " to hull edge (" << u << ","
            << v << ")";
        throw Error(ErrorCode::NotATree, msg.str());
      }
      leafSeen[leaf] = true;
      diagram.treeEdges.push_back({{TreeNode::Kind::Center, owners[0]},
                                   {TreeNode::Kind::Leaf, leaf}});
    } else {
      if (owners.size() != 2) {
        std::ostringstream msg;
        msg << "diagonal (" << u << "," << v << ") bounds " << owners.size()
            << " faces";
        throw Error(ErrorCode::NotATree, msg.str());
      }
      diagram.treeEdges.push_back({{TreeNode::Kind::Center, owners[0]},
                                   {TreeNode::Kind::Center, owners[1]}});
    }
  }
  if (!isTree(diagram)) {
    throw Error(ErrorCode::NotATree, "Voronoi adjacency is not a tree");
  }

  diagram.cellCorners.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& corners = diagram.cellCorners[i];
    corners.push_back(polygon.vertices[(i + (n - 1) / 2) % n]);
    corners.push_back(polygon.vertices[(i + (n + 1) / 2) % n]);
    for (const auto& face : diagram.faces) {
      if (std::binary_search(face.vertices.begin(), face.vertices.end(), i)) {
        corners.push_back(face.center);
      }
    }
    Vec2 mid = Vec2::Zero();
    for (const auto& c : corners) mid += c;
    mid /= static_cast<double>(corners.size());
    std::sort(corners.begin(), corners.end(), [&](const Vec2& a, const Vec2& b) {
      return std::atan2(a.y() - mid.y(), a.x() - mid.x()) <
             std::atan2(b.y() - mid.y(), b.x() - mid.x());
    });
  }
  return diagram;
}

bool inFarthestCell(const ReuleauxPolygon& polygon, int i, const Vec2& x,
                    double eqTol) {
  const double own = (x - polygon.vertices[i]).norm();
  for (const auto& p : polygon.vertices) {
    if ((x - p).norm() > own + eqTol) return false;
  }
  return true;
}

bool isTree(const FarthestPointDiagram& diagram) {
  const int nodes = diagram.nodeCount();
  if (static_cast<int>(diagram.treeEdges.size()) != nodes - 1) return false;
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  int components = nodes;
  for (const auto& e : diagram.treeEdges) {
    const int a = findRoot(parent, nodeId(diagram, e.a));
    const int b = findRoot(parent, nodeId(diagram, e.b));
    if (a == b) return false;
    parent[a] = b;
    --components;
  }
  return components == 1;
}

double faceArea(const ReuleauxPolygon& polygon, const DelaunayFace& face) {
  double twice = 0.0;
  const auto& t = face.vertices;
  for (size_t a = 0; a < t.size(); ++a) {
    const Vec2& p = polygon.vertices[t[a]];
    const Vec2& q = polygon.vertices[t[(a + 1) % t.size()]];
    twice += p.x() * q.y() - p.y() * q.x();
  }
  return 0.5 * twice;
}

}  // namespace meissner
