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

#include "meissner/ballpoly.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace meissner {
namespace {

// Surviving circle pieces shorter than this are point contacts, not edges.
constexpr double kMinEdgeLength = 1e-7;
// Smallest singular value of {c - x} accepted as three independent normals.
constexpr double kRankTol = 1e-6;

struct Interval {
  double lo;
  double hi;
};

// Removes [lo, hi] from a sorted list of disjoint intervals in [0, 2pi].
void subtract(std::vector<Interval>& allowed, double lo, double hi) {
  std::vector<Interval> out;
  out.reserve(allowed.size() + 1);
  for (const auto& piece : allowed) {
    if (hi <= piece.lo || lo >= piece.hi) {
      out.push_back(piece);
      continue;
    }
    if (lo > piece.lo) out.push_back({piece.lo, lo});
    if (hi < piece.hi) out.push_back({hi, piece.hi});
  }
  allowed.swap(out);
}

struct CirclePiece {
  double start;
  double sweep;
};

// Pieces of S(a,1) ∩ S(b,1) inside every other ball, as (start, sweep) in the
// basis planeBasis(normal) of the circle.
std::vector<CirclePiece> clipCircle(const std::vector<Vec3>& X, int a, int b,
                                    const Vec3& m, double rho, const Vec3& e1,
                                    const Vec3& e2) {
  std::vector<Interval> allowed{{0.0, kTwoPi}};
  for (int c = 0; c < static_cast<int>(X.size()) && !allowed.empty(); ++c) {
    if (c == a || c == b) continue;
    const Vec3 d = m - X[c];
    const double A = 2.0 * rho * d.dot(e1);
    const double B = 2.0 * rho * d.dot(e2);
    const double K = 1.0 - d.squaredNorm() - rho * rho;
    const double R = std::hypot(A, B);
    if (R <= K) continue;
    if (K <= -R) return {};
    const double w = std::acos(K / R);
    const double lo = normalizeAngle(std::atan2(B, A) - w);
    const double hi = lo + 2.0 * w;
    subtract(allowed, lo, std::min(hi, kTwoPi));
    if (hi > kTwoPi) subtract(allowed, 0.0, hi - kTwoPi);
  }
  std::vector<CirclePiece> pieces;
  if (allowed.empty()) return pieces;
  if (allowed.size() == 1 && allowed[0].lo == 0.0 && allowed[0].hi == kTwoPi) {
    return {{0.0, kTwoPi}};
  }
  if (allowed.size() >= 2 && allowed.front().lo == 0.0 &&
      allowed.back().hi == kTwoPi) {
    allowed.back().hi = kTwoPi + allowed.front().hi;
    allowed.erase(allowed.begin());
  }
  for (const auto& piece : allowed) pieces.push_back({piece.lo, piece.hi - piece.lo});
  return pieces;
}

int nearestCenter(const std::vector<Vec3>& X, const Vec3& p, double& dist) {
  int best = -1;
  dist = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(X.size()); ++i) {
    const double d = (X[i] - p).norm();
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  return best;
}

std::vector<std::set<int>> faceVertexSets(const ReuleauxPolyhedron& phi) {
  std::vector<std::set<int>> sets(phi.faceCount());
  for (int f = 0; f < phi.faceCount(); ++f) {
    sets[f].insert(phi.faces[f].vertices.begin(), phi.faces[f].vertices.end());
  }
  return sets;
}

double smallestSingularValue(const std::vector<Vec3>& dirs) {
  if (dirs.size() < 3) return 0.0;
  Eigen::Matrix<double, 3, Eigen::Dynamic> M(3, dirs.size());
  for (size_t k = 0; k < dirs.size(); ++k) M.col(k) = dirs[k];
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, Eigen::Dynamic>> svd(M);
  return svd.singularValues()[2];
}

std::string pairName(const char* what, int i, int j) {
  std::ostringstream msg;
  msg << what << " (" << i << "," << j << ")";
  return msg.str();
}

// Chains the edges on S(X[x], 1) into one boundary cycle, oriented
// counterclockwise seen from outside.
PolyFace chainFace(const std::vector<Vec3>& X, const std::vector<PolyEdge>& edges,
                   int x) {
  PolyFace face;
  face.center = x;
  std::map<int, std::vector<int>> incident;
  std::vector<int> own;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (edges[e].a != x && edges[e].b != x) continue;
    own.push_back(e);
    incident[edges[e].v0].push_back(e);
    incident[edges[e].v1].push_back(e);
  }
  if (own.size() < 3) {
    std::ostringstream msg;
    msg << "face " << x << " has " << own.size() << " edges";
    throw Error(ErrorCode::NotStandard, msg.str());
  }
  for (const auto& [v, list] : incident) {
    if (list.size() != 2) {
      std::ostringstream msg;
      msg << "vertex " << v << " has " << list.size() << " edges on face " << x;
      throw Error(ErrorCode::NotStandard, msg.str());
    }
  }
  int edge = own.front();
  int at = edges[edge].v0;
  for (size_t k = 0; k < own.size(); ++k) {
    const bool forward = edges[edge].v0 == at;
    face.edges.push_back(edge);
    face.forward.push_back(forward);
    face.vertices.push_back(at);
    at = forward ? edges[edge].v1 : edges[edge].v0;
    const auto& pair = incident[at];
    edge = pair[0] == edge ? pair[1] : pair[0];
    if (k + 1 < own.size() && at == face.vertices.front()) break;
  }
  if (face.edges.size() != own.size() || at != face.vertices.front()) {
    std::ostringstream msg;
    msg << "boundary of face " << x << " is not a single cycle";
    throw Error(ErrorCode::NotStandard, msg.str());
  }

  Vec3 mean = Vec3::Zero();
  for (int v : face.vertices) mean += X[v];
  const Vec3 normal = mean / face.vertices.size() - X[x];
  double turn = 0.0;
  for (size_t k = 0; k < face.vertices.size(); ++k) {
    const Vec3 p = X[face.vertices[k]] - X[x];
    const Vec3 q = X[face.vertices[(k + 1) % face.vertices.size()]] - X[x];
    turn += p.cross(q).dot(normal);
  }
  if (turn < 0.0) {
    std::reverse(face.edges.begin(), face.edges.end());
    std::reverse(face.forward.begin(), face.forward.end());
    face.forward.flip();
    face.vertices.clear();
    for (size_t k = 0; k < face.edges.size(); ++k) {
      const auto& e = edges[face.edges[k]];
      face.vertices.push_back(face.forward[k] ? e.v0 : e.v1);
    }
  }
  return face;
}

}  // namespace

int ReuleauxPolyhedron::edgeBetween(int u, int v) const {
  for (int e = 0; e < edgeCount(); ++e) {
    if ((edges[e].v0 == u && edges[e].v1 == v) ||
        (edges[e].v0 == v && edges[e].v1 == u)) {
      return e;
    }
  }
  return -1;
}

std::vector<int> ReuleauxPolyhedron::neighbors(int i) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.v0 == i) out.push_back(e.v1);
    if (e.v1 == i) out.push_back(e.v0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> DiameterGraph::degrees() const {
  std::vector<int> deg(nodeCount, 0);
  for (const auto& [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

LiftResult lift(const FarthestPointDiagram& diagram) {
  LiftResult out;
  for (const auto& p : diagram.polygon.vertices) {
    out.points.emplace_back(p.x(), p.y(), 0.0);
  }
  for (size_t f = 0; f < diagram.faces.size(); ++f) {
    const auto& face = diagram.faces[f];
    if (!(face.radius < 1.0)) {
      std::ostringstream msg;
      msg << "face " << f << " has disk radius " << face.radius;
      throw Error(ErrorCode::LiftImaginary, msg.str());
    }
    out.top.emplace_back(face.center.x(), face.center.y(),
                         std::sqrt(1.0 - face.radius * face.radius));
  }
  out.points.insert(out.points.end(), out.top.begin(), out.top.end());
  return out;
}

DiameterGraph diameterGraph(const std::vector<Vec3>& points, double eqTol) {
  DiameterGraph g;
  g.nodeCount = static_cast<int>(points.size());
  for (int i = 0; i < g.nodeCount; ++i) {
    for (int j = i + 1; j < g.nodeCount; ++j) {
      if (std::abs((points[i] - points[j]).norm() - 1.0) <= eqTol) {
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

bool insideBalls(const std::vector<Vec3>& centers, const Vec3& p,
                 double slack) {
  const double limit = (1.0 + slack) * (1.0 + slack);
  for (const auto& c : centers) {
    if ((p - c).squaredNorm() > limit) return false;
  }
  return true;
}

bool isThreeConnected(int nodeCount,
                      const std::vector<std::pair<int, int>>& edges) {
  if (nodeCount < 4) return false;
  std::vector<std::vector<int>> adj(nodeCount);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> stack;
  std::vector<char> seen(nodeCount);
  for (int r1 = 0; r1 < nodeCount; ++r1) {
    for (int r2 = r1 + 1; r2 < nodeCount; ++r2) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[r1] = seen[r2] = 1;
      int start = 0;
      while (start == r1 || start == r2) ++start;
      stack.assign(1, start);
      seen[start] = 1;
      int reached = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != nodeCount - 2) return false;
    }
  }
  return true;
}

ValidationReport checkReuleauxPolyhedron(const ReuleauxPolyhedron& phi,
                                         double eqTol) {
  ValidationReport report;
  const int nv = phi.vertexCount();
  const int ne = phi.edgeCount();
  const int nf = phi.faceCount();
  const auto& X = phi.centers;
  const auto sets = faceVertexSets(phi);

  {
    std::vector<bool> used(nv, false);
    for (const auto& e : phi.edges) used[e.v0] = used[e.v1] = true;
    const auto missing = std::find(used.begin(), used.end(), false);
    ValidationCheck c{"vertices_are_centers", missing == used.end(), 0.0, ""};
    if (!c.pass) {
      c.residual = 1.0;
      c.detail = "center " + std::to_string(missing - used.begin()) +
                 " is not a vertex";
    }
    report.checks.push_back(c);
  }

  {
    ValidationCheck c{"edge_geometry", true, 0.0, ""};
    for (int e = 0; e < ne; ++e) {
      const auto& edge = phi.edges[e];
      const Vec3 mid = 0.5 * (X[edge.a] + X[edge.b]);
      double r = (edge.arc.center() - mid).norm();
      r = std::max(r, std::abs(edge.arc.normal().vec().cross(X[edge.b] - X[edge.a]).norm()));
      for (double s : {0.0, 0.5, 1.0}) {
        const Vec3 q = edge.arc.at(s);
        r = std::max({r, std::abs((q - X[edge.a]).norm() - 1.0),
                      std::abs((q - X[edge.b]).norm() - 1.0)});
      }
      r = std::max({r, (edge.arc.startPoint() - X[edge.v0]).norm(),
                    (edge.arc.endPoint() - X[edge.v1]).norm()});
      if (r > c.residual) {
        c.residual = r;
        if (r > eqTol) c.detail = "edge " + std::to_string(e);
      }
    }
    c.pass = c.residual <= eqTol;
    report.checks.push_back(c);
  }

  {
    ValidationCheck c{"zero_singular", true, std::numeric_limits<double>::infinity(), ""};
    for (int v = 0; v < nv; ++v) {
      std::vector<Vec3> normals;
      for (int f = 0; f < nf; ++f) {
        if (sets[f].count(v)) normals.push_back(X[phi.faces[f].center] - X[v]);
      }
      const double sigma = smallestSingularValue(normals);
      c.residual = std::min(c.residual, sigma);
      if (sigma <= kRankTol && c.pass) {
        c.pass = false;
        c.detail = "vertex " + std::to_string(v) + " is not 0-singular";
      }
    }
    report.checks.push_back(c);
  }

  {
    ValidationCheck c{"standard", true, 0.0, ""};
    for (int f = 0; f < nf && c.pass; ++f) {
      for (int g = f + 1; g < nf && c.pass; ++g) {
        std::vector<int> common;
        std::set_intersection(sets[f].begin(), sets[f].end(), sets[g].begin(),
                              sets[g].end(), std::back_inserter(common));
        if (common.size() <= 1) continue;
        const int e = common.size() == 2 ? phi.edgeBetween(common[0], common[1]) : -1;
        const bool ok = e >= 0 && ((phi.edges[e].a == phi.faces[f].center &&
                                    phi.edges[e].b == phi.faces[g].center) ||
                                   (phi.edges[e].a == phi.faces[g].center &&
                                    phi.edges[e].b == phi.faces[f].center));
        if (!ok) {
          c.pass = false;
          c.residual = static_cast<double>(common.size());
          c.detail = pairName("faces meet in more than one edge:", f, g);
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    ValidationCheck c{"involution", true, 0.0, ""};
    for (int x = 0; x < nv && c.pass; ++x) {
      for (int y = 0; y < nv && c.pass; ++y) {
        if (sets[y].count(x) != sets[x].count(y)) {
          c.pass = false;
          c.residual = 1.0;
          c.detail = pairName("x in tau(y) but not y in tau(x) for (x,y) =", x, y);
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    ValidationCheck c{"metric_embedding", true, 0.0, ""};
    for (int x = 0; x < nv; ++x) {
      for (int y = x + 1; y < nv; ++y) {
        const double d = (X[x] - X[y]).norm();
        const bool unit = std::abs(d - 1.0) <= eqTol;
        const bool dual = sets[y].count(x) > 0;
        c.residual = std::max(c.residual, d - 1.0);
        if ((d > 1.0 + eqTol || unit != dual) && c.pass) {
          c.pass = false;
          std::ostringstream msg;
          msg << "pair (" << x << "," << y << ") at distance " << d
              << (dual ? " is dual" : " is not dual");
          c.detail = msg.str();
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    const auto graph = diameterGraph(X, eqTol);
    std::vector<std::set<int>> diam(nv);
    for (const auto& [i, j] : graph.edges) {
      diam[i].insert(j);
      diam[j].insert(i);
    }
    ValidationCheck c{"lattice", true, 0.0, ""};
    const auto deg = graph.degrees();
    for (int x = 0; x < nv && c.pass; ++x) {
      if (sets[x] != diam[x] ||
          static_cast<int>(phi.neighbors(x).size()) != deg[x]) {
        c.pass = false;
        c.residual = 1.0;
        c.detail = "face " + std::to_string(x) +
                   " does not match the diameters of its center";
      }
    }
    report.checks.push_back(c);
  }

  report.checks.push_back({"edge_count", ne == 2 * nv - 2,
                           static_cast<double>(ne - (2 * nv - 2)),
                           ne == 2 * nv - 2 ? "" : "|E| = " + std::to_string(ne)});
  const int euler = nv - ne + nf;
  report.checks.push_back({"euler", euler == 2, static_cast<double>(euler - 2),
                           euler == 2 ? "" : "v - e + f = " + std::to_string(euler)});

  {
    std::vector<std::pair<int, int>> graph;
    for (const auto& e : phi.edges) graph.emplace_back(e.v0, e.v1);
    const bool ok = isThreeConnected(nv, graph);
    report.checks.push_back({"three_connected", ok, ok ? 0.0 : 1.0,
                             ok ? "" : "a pair of vertices disconnects the graph"});
  }

  {
    std::vector<int> forwardUses(ne, 0);
    std::vector<int> backwardUses(ne, 0);
    for (const auto& face : phi.faces) {
      for (size_t k = 0; k < face.edges.size(); ++k) {
        ++(face.forward[k] ? forwardUses : backwardUses)[face.edges[k]];
      }
    }
    ValidationCheck c{"orientation", true, 0.0, ""};
    for (int e = 0; e < ne && c.pass; ++e) {
      if (forwardUses[e] != 1 || backwardUses[e] != 1) {
        c.pass = false;
        c.residual = 1.0;
        c.detail = "edge " + std::to_string(e) +
                   " is not used once in each direction";
      }
    }
    report.checks.push_back(c);
  }
  return report;
}

ReuleauxPolyhedron buildReuleauxPolyhedron(const std::vector<Vec3>& X,
                                           double eqTol) {
  const int n = static_cast<int>(X.size());
  if (n < 4) {
    throw Error(ErrorCode::MetricEmbeddingViolation,
                "at least four points are required");
  }
  for (int i = 0; i < n; ++i) {
    if (!X[i].allFinite()) {
      throw Error(ErrorCode::MetricEmbeddingViolation,
                  "point " + std::to_string(i) + " is not finite");
    }
    for (int j = i + 1; j < n; ++j) {
      const double d = (X[i] - X[j]).norm();
      if (d > 1.0 + eqTol) {
        std::ostringstream msg;
        msg << "points (" << i << "," << j << ") are at distance " << d;
        throw Error(ErrorCode::MetricEmbeddingViolation, msg.str());
      }
      if (d <= 10.0 * eqTol) {
        throw Error(ErrorCode::MetricEmbeddingViolation,
                    pairName("coincident points", i, j));
      }
    }
  }
  const auto degrees = diameterGraph(X, eqTol).degrees();
  for (int i = 0; i < n; ++i) {
    if (degrees[i] < 3) {
      std::ostringstream msg;
      msg << "point " << i << " has " << degrees[i] << " diameters (need 3)";
      throw Error(ErrorCode::MetricEmbeddingViolation, msg.str());
    }
  }

  ReuleauxPolyhedron phi;
  phi.centers = X;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Vec3 axis = X[b] - X[a];
      const double half = 0.5 * axis.norm();
      const Vec3 m = 0.5 * (X[a] + X[b]);
      const double rho = std::sqrt(1.0 - half * half);
      const UnitVector3 normal = UnitVector3::normalize(axis);
      const auto [e1, e2] = planeBasis(normal.vec());
      const auto pieces = clipCircle(X, a, b, m, rho, e1, e2);

      std::vector<CirclePiece> real;
      for (const auto& piece : pieces) {
        if (rho * piece.sweep >= kMinEdgeLength) real.push_back(piece);
      }
      if (real.empty()) continue;
      if (real.size() > 1 || real[0].sweep >= kTwoPi) {
        std::ostringstream msg;
        msg << "circle of centers (" << a << "," << b << ") leaves "
            << (real[0].sweep >= kTwoPi ? "a full circle" : "several arcs")
            << " on the boundary";
        throw Error(ErrorCode::NotStandard, msg.str());
      }
      const auto& piece = real[0];
      const auto endpoint = [&](double angle) {
        return Vec3(m + rho * (std::cos(angle) * e1 + std::sin(angle) * e2));
      };
      double d0 = 0.0;
      double d1 = 0.0;
      const int v0 = nearestCenter(X, endpoint(piece.start), d0);
      const int v1 = nearestCenter(X, endpoint(piece.start + piece.sweep), d1);
      if (d0 > 10.0 * eqTol || d1 > 10.0 * eqTol) {
        std::ostringstream msg;
        msg << "edge on the circle of centers (" << a << "," << b
            << ") ends at a 0-singular point that is not in X (distance "
            << std::max(d0, d1) << ")";
        throw Error(ErrorCode::MetricEmbeddingViolation, msg.str());
      }
      if (v0 == v1) {
        throw Error(ErrorCode::NotStandard,
                    pairName("edge loop on the circle of centers", a, b));
      }
      phi.edges.push_back(
          {v0, v1, Arc3D::between(m, normal, X[v0], X[v1]), a, b});
    }
  }
  for (int x = 0; x < n; ++x) phi.faces.push_back(chainFace(X, phi.edges, x));

  const auto report = checkReuleauxPolyhedron(phi, eqTol);
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    ErrorCode code = ErrorCode::NotStandard;
    if (c.name == "involution") code = ErrorCode::NotInvolutive;
    if (c.name == "metric_embedding" || c.name == "vertices_are_centers" ||
        c.name == "lattice" || c.name == "zero_singular") {
      code = ErrorCode::MetricEmbeddingViolation;
    }
    throw Error(code, c.name + ": " + c.detail);
  }
  return phi;
}

BoundaryClass classifyBoundaryPoint(const ReuleauxPolyhedron& phi,
                                    const Vec3& p, double eqTol) {
  BoundaryClass out;
  std::vector<int> active;
  for (int x = 0; x < phi.vertexCount(); ++x) {
    const double d = (p - phi.centers[x]).norm();
    if (d > 1.0 + eqTol) return out;
    if (d >= 1.0 - eqTol) active.push_back(x);
  }
  if (active.empty()) return out;
  if (active.size() == 1) {
    out.kind = BoundaryClass::Kind::Regular;
    out.index = active[0];
    return out;
  }
  std::vector<Vec3> normals;
  for (int x : active) normals.push_back(phi.centers[x] - p);
  if (smallestSingularValue(normals) > kRankTol) {
    out.kind = BoundaryClass::Kind::ZeroSingular;
    double dist = 0.0;
    const int v = nearestCenter(phi.centers, p, dist);
    if (dist <= 1e3 * eqTol) out.index = v;
    return out;
  }
  out.kind = BoundaryClass::Kind::OneSingular;
  for (int e = 0; e < phi.edgeCount(); ++e) {
    const auto& edge = phi.edges[e];
    if (std::binary_search(active.begin(), active.end(), edge.a) &&
        std::binary_search(active.begin(), active.end(), edge.b)) {
      out.index = e;
      break;
    }
  }
  return out;
}

}  // namespace meissner
