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

#include <cstdint>
#include <functional>
#include <vector>

#include "meissner/mesh.hpp"
#include "meissner/surgery.hpp"

namespace meissner {

/// Upper bound on worker threads for the direction loops; 0 means the
/// hardware concurrency.
void setThreadLimit(int threads);
int threadLimit();

/// Runs body(begin, end, chunk) over [0, count) split into contiguous chunks,
/// one per worker. Chunk boundaries depend only on count and the limit.
void parallelFor(int count, const std::function<void(int, int, int)>& body);

struct DirectionSampler {
  enum class Scheme { Fibonacci, UniformRandom };
  int count = 100000;
  Scheme scheme = Scheme::Fibonacci;
  std::uint64_t seed = 0;

  std::vector<Vec3> directions() const;
};

/// Support function and width of the body ∩_{c ∈ N} B(c, 1).
///
/// Two bounds bracket the support h(u) of that body: every skeleton point is
/// in the body, so h(u) >= S_N(u) = max_{c in N} c.u; and the body lies in
/// B(c, 1) for every c, so h(u) <= 1 - S_N(-u). The upper bound is attained
/// exactly when q = c_min + u is in the body, c_min being the minimizer of
/// c.u over N. support() returns the upper bound when that membership test
/// passes and S_N(u) otherwise, so it never exceeds h(u) by more than the
/// membership slack.
class SkeletonWidth {
 public:
  explicit SkeletonWidth(const Skeleton& skeleton, double slack = 1e-12);

  double support(const Vec3& u) const;
  double width(const Vec3& u) const;
  /// S_N(u) + S_N(-u), which is not the width of the body in general.
  double naiveWidth(const Vec3& u) const;
  /// Whether p is inside every ball B(c, 1 + slack), c in N.
  bool contains(const Vec3& p) const;

 private:
  struct ArcData {
    Arc3D arc;
    Vec3 center;
    Vec3 e1;
    Vec3 e2;
    double radius;
  };
  // max and min of c.u over N, with their minimizer.
  void extremes(const Vec3& u, double& hi, double& lo, Vec3& argLo,
                Vec3& argHi) const;

  std::vector<Vec3> points_;
  std::vector<ArcData> arcs_;
  double limit2_;
};

double skeletonWidth(const Skeleton& skeleton, const Vec3& u);

struct WidthReport {
  int directionsSampled = 0;
  double minWidth = 0.0;
  double maxWidth = 0.0;
  Vec3 worstDirection = Vec3::UnitZ();
  double tolerance = 0.0;
  bool pass = false;
};

WidthReport constantWidthCheck(const MeissnerSolid& solid,
                               const DirectionSampler& sampler, double tol);
WidthReport widthReport(const Skeleton& skeleton,
                        const std::vector<Vec3>& directions, double tol);

/// Every sampled boundary point has a point of the surface at distance 1:
/// caps pair with their center vertex, wedge points with the dual-arc point,
/// seam points with the sphere center, and vertices with a neighbor in their
/// dual face. `samples` per patch side.
ValidationCheck antipodeCheck(const MeissnerSolid& solid, int samples = 16,
                              double eqTol = kEqTol);

int diameterCount(const std::vector<Vec3>& X, double eqTol = kEqTol);

struct DiameterReport {
  int samples = 0;
  double maxDistance = 0.0;
  int unitPairs = 0;  // pairs at distance 1 within eqTol
  bool pass = false;
};

/// Diameter of P+ = ∩ B(p_i, 1) ∩ {z >= 0}, sampled by ray casting from an
/// interior point plus its vertices, then scaled about the origin by `scale`.
/// Passes when the maximum is at most 1 + eqTol and some pair reaches 1.
DiameterReport halfBodyDiameterCheck(const FarthestPointDiagram& diagram,
                                     int samples = 1000, double scale = 1.0,
                                     double eqTol = kEqTol);

struct VolumeArea {
  double volume = 0.0;
  double area = 0.0;
};

/// Throws NotWatertight.
VolumeArea volumeAndArea(const TriangleMesh& mesh);

ValidationCheck eulerCheck(const ReuleauxPolyhedron& phi);

/// Largest distance between two points of the edge arcs of phi, each arc
/// sampled at `samplesPerArc` points against exact arc maxima.
double edgeArcDiameter(const ReuleauxPolyhedron& phi, int samplesPerArc = 2000);

/// The z = 0 section of the solid against the polygon it was lifted from:
/// radial boundary distance by bisection versus the exact polygon boundary.
ValidationCheck sliceCheck(const MeissnerSolid& solid,
                           const ReuleauxPolygon& polygon, int rays = 256,
                           double eqTol = kEqTol);

/// max |meshWidth - skeleton width| over the directions.
double meshWidthDisagreement(const TriangleMesh& mesh, const Skeleton& skeleton,
                             const std::vector<Vec3>& directions);

}  // namespace meissner
