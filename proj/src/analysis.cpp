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

#include "meissner/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace meissner {
namespace {

std::atomic<int> gThreadLimit{0};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest distance from p to the skeleton; exactly 1 on the boundary.
double farthestDistance(const Skeleton& n, const Vec3& p) {
  double best = 0.0;
  for (const auto& c : n.points) best = std::max(best, (p - c).norm());
  for (const auto& arc : n.arcs) best = std::max(best, arcMaxDistance(arc, p));
  return best;
}

struct Worst {
  double residual = 0.0;
  std::string detail;

  void update(double r, const std::string& where) {
    if (r > residual) {
      residual = r;
      detail = where;
    }
  }
};

}  // namespace

void setThreadLimit(int threads) { gThreadLimit = std::max(0, threads); }

int threadLimit() {
  const int limit = gThreadLimit;
  const int hardware = std::max(1u, std::thread::hardware_concurrency());
  return limit > 0 ? limit : hardware;
}

void parallelFor(int count, const std::function<void(int, int, int)>& body) {
  if (count <= 0) return;
  const int chunks = std::min(threadLimit(), count);
  if (chunks == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> workers;
  for (int c = 0; c < chunks; ++c) {
    const int begin = static_cast<int>(static_cast<long>(count) * c / chunks);
    const int end = static_cast<int>(static_cast<long>(count) * (c + 1) / chunks);
    workers.emplace_back(body, begin, end, c);
  }
  for (auto& w : workers) w.join();
}

std::vector<Vec3> DirectionSampler::directions() const {
  std::vector<Vec3> out;
  out.reserve(std::max(count, 0));
  if (scheme == Scheme::Fibonacci) {
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return out;
  }
  std::mt19937_64 gen(seed);
  const auto uniform = [&gen] {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < count; ++i) {
    const double z = 2.0 * uniform() - 1.0;
    const double phi = kTwoPi * uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

SkeletonWidth::SkeletonWidth(const Skeleton& skeleton, double slack)
    : points_(skeleton.points), limit2_((1.0 + slack) * (1.0 + slack)) {
  for (const auto& arc : skeleton.arcs) {
    arcs_.push_back({arc, arc.center(), arc.e1(), arc.e2(), arc.radius()});
  }
}

void SkeletonWidth::extremes(const Vec3& u, double& hi, double& lo,
                             Vec3& argLo, Vec3& argHi) const {
  hi = -kInf;
  lo = kInf;
  for (const auto& p : points_) {
    const double d = p.dot(u);
    if (d > hi) {
      hi = d;
      argHi = p;
    }
    if (d < lo) {
      lo = d;
      argLo = p;
    }
  }
  for (const auto& a : arcs_) {
    const double ca = u.dot(a.e1);
    const double cb = u.dot(a.e2);
    const double r = std::hypot(ca, cb);
    const double mid = a.center.dot(u);
    if (r <= 1e-15) {
      if (mid > hi) {
        hi = mid;
        argHi = a.arc.startPoint();
      }
      if (mid < lo) {
        lo = mid;
        argLo = a.arc.startPoint();
      }
      continue;
    }
    const double s = a.arc.startPoint().dot(u);
    const double e = a.arc.endPoint().dot(u);
    if (a.arc.spansDirection(ca, cb)) {
      const double v = mid + a.radius * r;
      if (v > hi) {
        hi = v;
        argHi = a.center + (a.radius / r) * (ca * a.e1 + cb * a.e2);
      }
    } else if (std::max(s, e) > hi) {
      hi = std::max(s, e);
      argHi = s >= e ? a.arc.startPoint() : a.arc.endPoint();
    }
    if (a.arc.spansDirection(-ca, -cb)) {
      const double v = mid - a.radius * r;
      if (v < lo) {
        lo = v;
        argLo = a.center - (a.radius / r) * (ca * a.e1 + cb * a.e2);
      }
    } else if (std::min(s, e) < lo) {
      lo = std::min(s, e);
      argLo = s <= e ? a.arc.startPoint() : a.arc.endPoint();
    }
  }
}

bool SkeletonWidth::contains(const Vec3& p) const {
  for (const auto& c : points_) {
    if ((p - c).squaredNorm() > limit2_) return false;
  }
  for (const auto& a : arcs_) {
    // |p - m - r w|^2 = |p - m|^2 + r^2 + 2 r (m - p).w, maximized over w.
    const Vec3 d = a.center - p;
    const double ca = d.dot(a.e1);
    const double cb = d.dot(a.e2);
    double best;
    if (a.arc.spansDirection(ca, cb)) {
      best = a.radius * std::hypot(ca, cb);
    } else {
      best = std::max((a.arc.startPoint() - a.center).dot(d),
                      (a.arc.endPoint() - a.center).dot(d));
    }
    if (d.squaredNorm() + a.radius * a.radius + 2.0 * best > limit2_) return false;
  }
  return true;
}

double SkeletonWidth::support(const Vec3& u) const {
  double hi, lo;
  Vec3 argLo, argHi;
  extremes(u, hi, lo, argLo, argHi);
  return contains(argLo + u) ? std::max(hi, 1.0 + lo) : hi;
}

double SkeletonWidth::width(const Vec3& u) const {
  double hi, lo;
  Vec3 argLo, argHi;
  extremes(u, hi, lo, argLo, argHi);
  const double up = contains(argLo + u) ? std::max(hi, 1.0 + lo) : hi;
  const double down = contains(argHi - u) ? std::max(-lo, 1.0 - hi) : -lo;
  return up + down;
}

double SkeletonWidth::naiveWidth(const Vec3& u) const {
  double hi, lo;
  Vec3 argLo, argHi;
  extremes(u, hi, lo, argLo, argHi);
  return hi - lo;
}

double skeletonWidth(const Skeleton& skeleton, const Vec3& u) {
  return SkeletonWidth(skeleton).width(u);
}

WidthReport widthReport(const Skeleton& skeleton,
                        const std::vector<Vec3>& directions, double tol) {
  const SkeletonWidth evaluator(skeleton);
  const int count = static_cast<int>(directions.size());
  struct Partial {
    double lo = kInf, hi = -kInf, worst = -1.0;
    Vec3 worstDir = Vec3::UnitZ();
  };
  std::vector<Partial> parts(std::min(threadLimit(), std::max(count, 1)));
  parallelFor(count, [&](int begin, int end, int chunk) {
    Partial p;
    for (int i = begin; i < end; ++i) {
      const double w = evaluator.width(directions[i]);
      p.lo = std::min(p.lo, w);
      p.hi = std::max(p.hi, w);
      if (std::abs(w - 1.0) > p.worst) {
        p.worst = std::abs(w - 1.0);
        p.worstDir = directions[i];
      }
    }
    parts[chunk] = p;
  });
  WidthReport report;
  report.directionsSampled = count;
  report.tolerance = tol;
  report.minWidth = kInf;
  report.maxWidth = -kInf;
  double worst = -1.0;
  for (const auto& p : parts) {
    report.minWidth = std::min(report.minWidth, p.lo);
    report.maxWidth = std::max(report.maxWidth, p.hi);
    if (p.worst > worst) {
      worst = p.worst;
      report.worstDirection = p.worstDir;
    }
  }
  report.pass = count > 0 && report.minWidth >= 1.0 - tol &&
                report.maxWidth <= 1.0 + tol;
  return report;
}

WidthReport constantWidthCheck(const MeissnerSolid& solid,
                               const DirectionSampler& sampler, double tol) {
  return widthReport(skeleton(solid), sampler.directions(), tol);
}

ValidationCheck antipodeCheck(const MeissnerSolid& solid, int samples,
                              double eqTol) {
  const Skeleton n = skeleton(solid);
  const auto& X = solid.base.centers;
  Worst worst;
  const auto pairUp = [&](const Vec3& p, const Vec3& q, const std::string& where) {
    worst.update(std::abs((p - q).norm() - 1.0), where);
    worst.update(std::abs(farthestDistance(n, p) - 1.0), where + " (P off surface)");
    worst.update(std::abs(farthestDistance(n, q) - 1.0), where + " (Q off surface)");
  };

  for (const auto& face : solid.faces) {
    const Vec3& x = X[face.center];
    std::vector<Vec3> ring;
    for (const auto& c : face.boundary) {
      for (int k = 0; k < samples; ++k) ring.push_back(c.arc.at(static_cast<double>(k) / samples));
    }
    Vec3 mean = Vec3::Zero();
    for (const auto& b : ring) mean += (b - x).normalized();
    const Vec3 apex = x + mean.normalized();
    const std::string where = "cap " + std::to_string(face.center);
    pairUp(apex, x, where);
    for (const auto& b : ring) {
      for (int j = 1; j <= samples; ++j) {
        pairUp(slerpAbout(x, apex, b, static_cast<double>(j) / samples), x, where);
      }
    }
  }
  for (const auto& w : solid.wedges) {
    const std::string where = "wedge " + std::to_string(w.pair);
    for (int i = 0; i <= samples; ++i) {
      const double s = static_cast<double>(i) / samples;
      for (int j = 1; j < samples; ++j) {
        pairUp(w.at(s, static_cast<double>(j) / samples), w.spine(s), where);
      }
      // Retained-arc points pair with the wedge arc they center.
      pairUp(w.spine(s), w.at(s, 0.5), "retained arc " + std::to_string(w.pair));
    }
    for (int k = 0; k <= samples; ++k) {
      const double t = static_cast<double>(k) / samples;
      pairUp(w.sigmaA.at(t), X[w.a], "seam A " + std::to_string(w.pair));
      pairUp(w.sigmaB.at(t), X[w.b], "seam B " + std::to_string(w.pair));
    }
  }
  for (int v = 0; v < solid.base.vertexCount(); ++v) {
    const auto& dual = solid.base.faces[v].vertices;
    if (dual.empty()) {
      worst.update(1.0, "vertex " + std::to_string(v) + " has an empty dual face");
      continue;
    }
    pairUp(X[v], X[dual.front()], "vertex " + std::to_string(v));
  }
  ValidationCheck check{"antipode", worst.residual <= eqTol, worst.residual, ""};
  if (!check.pass) check.detail = worst.detail;
  return check;
}

int diameterCount(const std::vector<Vec3>& X, double eqTol) {
  return static_cast<int>(diameterGraph(X, eqTol).edges.size());
}

DiameterReport halfBodyDiameterCheck(const FarthestPointDiagram& diagram,
                                     int samples, double scale, double eqTol) {
  std::vector<Vec3> base;
  for (const auto& p : diagram.polygon.vertices) base.emplace_back(p.x(), p.y(), 0.0);
  const Vec2 c2 = centroid(diagram.polygon);
  double far = 0.0;
  for (const auto& p : diagram.polygon.vertices) far = std::max(far, (p - c2).norm());
  const Vec3 origin(c2.x(), c2.y(), 0.5 * std::sqrt(std::max(0.0, 1.0 - far * far)));

  std::vector<Vec3> pts = base;
  for (const auto& v : lift(diagram).top) pts.push_back(v);
  DirectionSampler sampler;
  sampler.count = samples;
  for (const auto& d : sampler.directions()) {
    double t = kInf;
    for (const auto& p : base) {
      const Vec3 o = origin - p;
      const double b = d.dot(o);
      const double c = o.squaredNorm() - 1.0;
      t = std::min(t, -b + std::sqrt(std::max(0.0, b * b - c)));
    }
    if (d.z() < 0.0) t = std::min(t, -origin.z() / d.z());
    pts.push_back(origin + t * d);
  }
  for (auto& p : pts) p *= scale;

  DiameterReport report;
  report.samples = static_cast<int>(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const double d = (pts[i] - pts[j]).norm();
      report.maxDistance = std::max(report.maxDistance, d);
      if (std::abs(d - 1.0) <= eqTol) ++report.unitPairs;
    }
  }
  report.pass = report.maxDistance <= 1.0 + eqTol && report.unitPairs > 0;
  return report;
}

VolumeArea volumeAndArea(const TriangleMesh& mesh) {
  const auto check = checkMesh(mesh);
  for (const char* name : {"watertight", "oriented"}) {
    const auto* c = check.find(name);
    if (!c->pass) throw Error(ErrorCode::NotWatertight, c->detail);
  }
  VolumeArea out;
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    out.volume += a.dot(b.cross(c)) / 6.0;
    out.area += 0.5 * (b - a).cross(c - a).norm();
  }
  return out;
}

ValidationCheck eulerCheck(const ReuleauxPolyhedron& phi) {
  const int chi = phi.vertexCount() - phi.edgeCount() + phi.faceCount();
  std::ostringstream msg;
  msg << phi.vertexCount() << " - " << phi.edgeCount() << " + "
      << phi.faceCount() << " = " << chi;
  return {"euler", chi == 2, static_cast<double>(chi - 2), msg.str()};
}

double edgeArcDiameter(const ReuleauxPolyhedron& phi, int samplesPerArc) {
  double best = 0.0;
  const int m = std::max(samplesPerArc, 2);
  for (const auto& e : phi.edges) {
    for (int k = 0; k < m; ++k) {
      const Vec3 p = e.arc.at(static_cast<double>(k) / (m - 1));
      for (const auto& other : phi.edges) {
        best = std::max(best, arcMaxDistance(other.arc, p));
      }
    }
  }
  return best;
}

ValidationCheck sliceCheck(const MeissnerSolid& solid,
                           const ReuleauxPolygon& polygon, int rays,
                           double eqTol) {
  const SkeletonWidth body(skeleton(solid), 0.0);
  const Vec2 origin = centroid(polygon);
  Worst worst;
  for (int k = 0; k < rays; ++k) {
    const double theta = kTwoPi * k / rays;
    const Vec2 exact = radialBoundaryPoint(polygon, origin, theta);
    const Vec3 o(origin.x(), origin.y(), 0.0);
    const Vec3 dir(std::cos(theta), std::sin(theta), 0.0);
    double lo = 0.0;
    double hi = 1.01;
    for (int it = 0; it < 64 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (body.contains(o + mid * dir) ? lo : hi) = mid;
    }
    std::ostringstream where;
    where << "ray " << k << " (theta=" << theta << ")";
    worst.update(std::abs(0.5 * (lo + hi) - (exact - origin).norm()), where.str());
  }
  ValidationCheck check{"slice", worst.residual <= eqTol, worst.residual, ""};
  if (!check.pass) check.detail = worst.detail;
  return check;
}

double meshWidthDisagreement(const TriangleMesh& mesh, const Skeleton& skeleton,
                             const std::vector<Vec3>& directions) {
  const SkeletonWidth evaluator(skeleton);
  double worst = 0.0;
  for (const auto& u : directions) {
    worst = std::max(worst, std::abs(meshWidth(mesh, u) - evaluator.width(u)));
  }
  return worst;
}

}  // namespace meissner
