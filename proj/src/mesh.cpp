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

#include "meissner/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace meissner {
namespace {

using CurveKey = std::tuple<int, int, int>;  // (trim?, edge, sphere center)

class MeshBuilder {
 public:
  MeshBuilder(const MeissnerSolid& solid, int level)
      : solid_(solid), samples_(1 << level) {
    mesh_.vertices = solid.base.centers;
  }

  TriangleMesh build() {
    for (const auto& face : solid_.faces) cap(face);
    for (const auto& wedge : solid_.wedges) this->wedge(wedge);
    return std::move(mesh_);
  }

 private:
  int add(const Vec3& p) {
    mesh_.vertices.push_back(p);
    return static_cast<int>(mesh_.vertices.size()) - 1;
  }

  // Orients each triangle against the outward normal of its patch, which
  // points from `inner` (a sphere center) through the triangle.
  void triangle(int a, int b, int c, const Vec3& inner, const MeshTag& tag) {
    const Vec3& pa = mesh_.vertices[a];
    const Vec3& pb = mesh_.vertices[b];
    const Vec3& pc = mesh_.vertices[c];
    const Vec3 normal = (pb - pa).cross(pc - pa);
    if (normal.dot((pa + pb + pc) / 3.0 - inner) < 0.0) std::swap(b, c);
    mesh_.triangles.push_back({a, b, c});
    mesh_.provenance.push_back(tag);
  }

  // Samples of an edge arc or trim in canonical direction v0 -> v1.
  const std::vector<int>& curve(int edge, int trimCenter) {
    const CurveKey key{trimCenter >= 0 ? 1 : 0, edge, trimCenter};
    const auto found = curves_.find(key);
    if (found != curves_.end()) return found->second;
    const auto& e = solid_.base.edges[edge];
    const auto& X = solid_.base.centers;
    const Arc3D arc =
        trimCenter >= 0 ? Arc3D::geodesic(X[trimCenter], X[e.v0], X[e.v1]) : e.arc;
    std::vector<int> ids{e.v0};
    for (int k = 1; k < samples_; ++k) {
      ids.push_back(add(arc.at(static_cast<double>(k) / samples_)));
    }
    ids.push_back(e.v1);
    return curves_.emplace(key, std::move(ids)).first->second;
  }

  void cap(const TrimmedFace& face) {
    const Vec3& x = solid_.base.centers[face.center];
    std::vector<int> ring;
    for (const auto& c : face.boundary) {
      const bool trim = c.kind == BoundaryCurve::Kind::GeodesicTrim;
      std::vector<int> ids = curve(c.edge, trim ? face.center : -1);
      if (!c.forward) std::reverse(ids.begin(), ids.end());
      ring.insert(ring.end(), ids.begin(), ids.end() - 1);
    }
    Vec3 mean = Vec3::Zero();
    for (int id : ring) mean += (mesh_.vertices[id] - x).normalized();
    const Vec3 apexPoint = x + mean.normalized();
    const MeshTag tag{MeshTag::Kind::Cap, face.center};
    std::vector<Vec3> points;
    for (int id : ring) points.push_back(mesh_.vertices[id]);
    if (!capStarShaped(x, apexPoint, points)) {
      for (const auto& t : earClipCap(x, apexPoint, points))
        triangle(ring[t[0]], ring[t[1]], ring[t[2]], x, tag);
      mesh_.warnings.push_back("cap of face " + std::to_string(face.center) +
                               " is not star-shaped from its centroid; ear-clipped");
      return;
    }
    const int apex = add(apexPoint);
    const int rings = samples_;
    const int k = static_cast<int>(ring.size());

    // layers[j][i]: ring j (1..rings) at boundary sample i.
    std::vector<std::vector<int>> layers(rings + 1);
    for (int j = 1; j <= rings; ++j) {
      if (j == rings) {
        layers[j] = ring;
        continue;
      }
      const double t = static_cast<double>(j) / rings;
      for (int i = 0; i < k; ++i) {
        layers[j].push_back(add(slerpAbout(x, apexPoint, mesh_.vertices[ring[i]], t)));
      }
    }
    for (int i = 0; i < k; ++i) {
      const int n = (i + 1) % k;
      triangle(apex, layers[1][i], layers[1][n], x, tag);
      for (int j = 1; j < rings; ++j) {
        triangle(layers[j][i], layers[j + 1][i], layers[j + 1][n], x, tag);
        triangle(layers[j][i], layers[j + 1][n], layers[j][n], x, tag);
      }
    }
  }

  void wedge(const Wedge& w) {
    const int S = samples_;
    if (S < 2) return;  // both trims are the chord x-y; the caps meet there
    const auto& left = curve(w.surgeredEdge, w.a);
    const auto& right = curve(w.surgeredEdge, w.b);
    const MeshTag tag{MeshTag::Kind::Wedge, w.pair};
    // grid[i][j] for s = i/S, t = j/S; rows j = 0 and j = S are x and y.
    std::vector<std::vector<int>> grid(S + 1, std::vector<int>(S + 1));
    for (int i = 0; i <= S; ++i) {
      for (int j = 0; j <= S; ++j) {
        if (j == 0) {
          grid[i][j] = w.x;
        } else if (j == S) {
          grid[i][j] = w.y;
        } else if (i == 0) {
          grid[i][j] = left[j];
        } else if (i == S) {
          grid[i][j] = right[j];
        } else {
          grid[i][j] = add(w.at(static_cast<double>(i) / S, static_cast<double>(j) / S));
        }
      }
    }
    for (int i = 0; i < S; ++i) {
      const Vec3 inner = w.spine((i + 0.5) / S);
      triangle(w.x, grid[i][1], grid[i + 1][1], inner, tag);
      triangle(w.y, grid[i + 1][S - 1], grid[i][S - 1], inner, tag);
      for (int j = 1; j + 1 < S; ++j) {
        triangle(grid[i][j], grid[i + 1][j], grid[i + 1][j + 1], inner, tag);
        triangle(grid[i][j], grid[i + 1][j + 1], grid[i][j + 1], inner, tag);
      }
    }
  }

  const MeissnerSolid& solid_;
  int samples_;
  TriangleMesh mesh_;
  std::map<CurveKey, std::vector<int>> curves_;
};

// Gnomonic coordinates about apex; false when p is not in the open
// hemisphere facing apex.
bool gnomonic(const Vec3& center, const Vec3& n, const Vec3& e1, const Vec3& e2,
              const Vec3& p, Vec2& out) {
  const Vec3 d = p - center;
  const double h = d.dot(n);
  if (h <= 1e-12) return false;
  out = Vec2(d.dot(e1), d.dot(e2)) / h;
  return true;
}

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

std::uint64_t edgeKey(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Closest point on triangle abc to p.
Vec3 closestOnTriangle(const Vec3& p, const Vec3& a, const Vec3& b,
                       const Vec3& c) {
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 ap = p - a;
  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;
  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + (d1 / (d1 - d3)) * ab;
  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + (d2 / (d2 - d6)) * ac;
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
  }
  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

}  // namespace

bool capStarShaped(const Vec3& center, const Vec3& apex,
                   const std::vector<Vec3>& ring) {
  const Vec3 n = (apex - center).normalized();
  const auto [e1, e2] = planeBasis(n);
  std::vector<Vec2> q(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!gnomonic(center, n, e1, e2, ring[i], q[i])) return false;
  double total = 0.0;
  int sign = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Vec2& a = q[i];
    const Vec2& b = q[(i + 1) % q.size()];
    const double turn = std::atan2(cross2(a, b), a.dot(b));
    const int s = turn > 0.0 ? 1 : (turn < 0.0 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
    total += turn;
  }
  return std::abs(std::abs(total) - kTwoPi) < 1e-9;
}

std::vector<std::array<int, 3>> earClipCap(const Vec3& center, const Vec3& apex,
                                           const std::vector<Vec3>& ring) {
  const Vec3 n = (apex - center).normalized();
  const auto [e1, e2] = planeBasis(n);
  std::vector<Vec2> q(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!gnomonic(center, n, e1, e2, ring[i], q[i]))
      throw Error(ErrorCode::DegenerateInput, "cap boundary leaves the hemisphere");
  std::vector<int> left(ring.size());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = static_cast<int>(i);
  double area = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) area += cross2(q[i], q[(i + 1) % q.size()]);
  const double orient = area > 0.0 ? 1.0 : -1.0;

  std::vector<std::array<int, 3>> out;
  while (left.size() > 3) {
    const int m = static_cast<int>(left.size());
    bool clipped = false;
    for (int k = 0; k < m && !clipped; ++k) {
      const int a = left[(k + m - 1) % m], b = left[k], c = left[(k + 1) % m];
      if (orient * cross2(q[b] - q[a], q[c] - q[b]) <= 0.0) continue;  // reflex
      bool empty = true;
      for (int v : left) {
        if (v == a || v == b || v == c) continue;
        if (orient * cross2(q[b] - q[a], q[v] - q[a]) >= 0.0 &&
            orient * cross2(q[c] - q[b], q[v] - q[b]) >= 0.0 &&
            orient * cross2(q[a] - q[c], q[v] - q[c]) >= 0.0) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      out.push_back({a, b, c});
      left.erase(left.begin() + k);
      clipped = true;
    }
    if (!clipped) throw Error(ErrorCode::DegenerateInput, "cap boundary has no ear");
  }
  out.push_back({left[0], left[1], left[2]});
  return out;
}

TriangleMesh tessellate(const MeissnerSolid& solid, int level) {
  if (level < 0 || level > 12) {
    throw Error(ErrorCode::DegenerateInput,
                "mesh level must lie in [0, 12], got " + std::to_string(level));
  }
  return MeshBuilder(solid, level).build();
}

TriangleMesh tessellate(const ReuleauxPolyhedron& phi, int level) {
  const std::vector<int> untouched(phi.edgeCount() / 2, -1);
  return tessellate(assembleSurface(phi, untouched), level);
}

TriangleMesh tessellateSphere(const Vec3& center, double radius, int level) {
  TriangleMesh mesh;
  std::vector<Vec3> dirs{Vec3::UnitX(), -Vec3::UnitX(), Vec3::UnitY(),
                         -Vec3::UnitY(), Vec3::UnitZ(), -Vec3::UnitZ()};
  std::vector<std::array<int, 3>> tris{{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                                       {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  for (int l = 0; l < level; ++l) {
    std::unordered_map<std::uint64_t, int> mid;
    const auto midpoint = [&](int a, int b) {
      const auto key = edgeKey(std::min(a, b), std::max(a, b));
      const auto found = mid.find(key);
      if (found != mid.end()) return found->second;
      dirs.push_back((dirs[a] + dirs[b]).normalized());
      const int id = static_cast<int>(dirs.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(4 * tris.size());
    for (const auto& [a, b, c] : tris) {
      const int ab = midpoint(a, b);
      const int bc = midpoint(b, c);
      const int ca = midpoint(c, a);
      next.push_back({a, ab, ca});
      next.push_back({ab, b, bc});
      next.push_back({ca, bc, c});
      next.push_back({ab, bc, ca});
    }
    tris.swap(next);
  }
  for (const auto& d : dirs) mesh.vertices.push_back(center + radius * d);
  mesh.triangles = std::move(tris);
  mesh.provenance.assign(mesh.triangles.size(), {MeshTag::Kind::Sphere, 0});
  return mesh;
}

ValidationReport checkMesh(const TriangleMesh& mesh) {
  ValidationReport report;
  std::unordered_map<std::uint64_t, int> directed;
  std::unordered_map<std::uint64_t, int> undirected;
  std::vector<bool> used(mesh.vertices.size(), false);
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& t : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[k];
      const int b = t[(k + 1) % 3];
      ++directed[edgeKey(a, b)];
      ++undirected[edgeKey(std::min(a, b), std::max(a, b))];
      used[a] = true;
    }
    const Vec3& p = mesh.vertices[t[0]];
    const double area =
        0.5 * (mesh.vertices[t[1]] - p).cross(mesh.vertices[t[2]] - p).norm();
    smallest = std::min(smallest, area);
  }
  int badShared = 0;
  for (const auto& [key, count] : undirected) badShared += count != 2;
  int badDirected = 0;
  for (const auto& [key, count] : directed) badDirected += count != 1;
  report.checks.push_back({"watertight", badShared == 0 && !mesh.triangles.empty(),
                           static_cast<double>(badShared),
                           badShared ? std::to_string(badShared) + " edges not shared by two triangles" : ""});
  report.checks.push_back({"oriented", badDirected == 0, static_cast<double>(badDirected),
                           badDirected ? std::to_string(badDirected) + " directed edges repeated" : ""});
  report.checks.push_back({"nondegenerate", smallest > 0.0, smallest,
                           smallest > 0.0 ? "" : "zero-area triangle"});
  const long v = std::count(used.begin(), used.end(), true);
  const long euler = v - static_cast<long>(undirected.size()) +
                     static_cast<long>(mesh.triangles.size());
  report.checks.push_back({"euler", euler == 2, static_cast<double>(euler - 2),
                           euler == 2 ? "" : "characteristic " + std::to_string(euler)});
  return report;
}

double vertexDiameter(const TriangleMesh& mesh) {
  const auto& pts = mesh.vertices;
  if (pts.size() < 2) return 0.0;
  Vec3 lo = pts[0];
  Vec3 hi = pts[0];
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const int grid = std::clamp(static_cast<int>(std::cbrt(static_cast<double>(pts.size()))), 1, 64);
  const Vec3 extent = (hi - lo).cwiseMax(Vec3::Constant(1e-12));
  std::map<std::array<int, 3>, std::vector<int>> cells;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    std::array<int, 3> key;
    for (int a = 0; a < 3; ++a) {
      key[a] = std::min(grid - 1, static_cast<int>(grid * (pts[i][a] - lo[a]) / extent[a]));
    }
    cells[key].push_back(i);
  }
  struct Cell {
    Vec3 lo, hi;
    std::vector<int> ids;
  };
  std::vector<Cell> list;
  for (auto& [key, ids] : cells) {
    Cell c{pts[ids[0]], pts[ids[0]], std::move(ids)};
    for (int id : c.ids) {
      c.lo = c.lo.cwiseMin(pts[id]);
      c.hi = c.hi.cwiseMax(pts[id]);
    }
    list.push_back(std::move(c));
  }

  // Two sweeps give a good lower bound before pruning.
  double best2 = 0.0;
  int far = 0;
  for (int sweep = 0; sweep < 2; ++sweep) {
    const Vec3 from = pts[far];
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const double d = (pts[i] - from).squaredNorm();
      if (d > best2) {
        best2 = d;
        far = i;
      }
    }
  }
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = i; j < list.size(); ++j) {
      const Vec3 span = (list[i].hi - list[j].lo).cwiseAbs().cwiseMax(
          (list[j].hi - list[i].lo).cwiseAbs());
      if (span.squaredNorm() <= best2) continue;
      for (int a : list[i].ids) {
        for (int b : list[j].ids) {
          best2 = std::max(best2, (pts[a] - pts[b]).squaredNorm());
        }
      }
    }
  }
  return std::sqrt(best2);
}

double distanceToMesh(const TriangleMesh& mesh, const Vec3& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    // Cheap rejection: distance to a vertex minus the longest side.
    const double bound = (p - a).norm() - std::max((b - a).norm(), (c - a).norm());
    if (bound >= best) continue;
    best = std::min(best, (p - closestOnTriangle(p, a, b, c)).norm());
  }
  return best;
}

double meshWidth(const TriangleMesh& mesh, const Vec3& u) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& v : mesh.vertices) {
    const double d = v.dot(u);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo;
}

}  // namespace meissner
