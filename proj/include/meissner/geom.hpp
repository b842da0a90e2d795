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

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <numbers>
#include <utility>

#include "meissner/error.hpp"

namespace meissner {

// All lengths are in units of the body width, which is fixed to 1.
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEqTol = 1e-9;

struct Tolerance {
  double eq = kEqTol;   // distance-equality tests
  double mesh = 1e-3;   // discretization-dependent comparisons

  /// Throws DegenerateInput unless 0 < eq < 1e-3 and mesh > 0.
  void validate() const;
};

/// Wraps an angle into [0, 2pi).
double normalizeAngle(double angle);

/// A direction with Euclidean norm 1 (to within 1e-12).
class UnitVector3 {
 public:
  UnitVector3() : v_(Vec3::UnitZ()) {}

  /// Normalizes v; throws DegenerateInput for a zero or non-finite vector.
  static UnitVector3 normalize(const Vec3& v);
  /// Keeps v bit for bit; throws DegenerateInput unless |v| = 1 within 1e-12.
  static UnitVector3 fromNormalized(const Vec3& v);

  const Vec3& vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  double dot(const Vec3& w) const { return v_.dot(w); }
  UnitVector3 operator-() const { return UnitVector3(-v_); }

 private:
  explicit UnitVector3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// Deterministic right-handed orthonormal basis (e1, e2) of the plane
/// orthogonal to n. Depends only on n, so arcs serialized with 17 significant
/// digits recover the same basis.
std::pair<Vec3, Vec3> planeBasis(const Vec3& n);

struct Sphere {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
};

/// Circular arc in 3-D: points center + radius (cos a e1 + sin a e2) for
/// a in [start, start + sweep], (e1, e2) = planeBasis(normal). The arc runs
/// counterclockwise about the normal.
class Arc3D {
 public:
  Arc3D() = default;
  Arc3D(const Vec3& center, double radius, const UnitVector3& normal,
        double start, double sweep);

  static Arc3D circle(const Vec3& center, double radius,
                      const UnitVector3& normal);
  /// Counterclockwise (about normal) arc from `from` to `to`. The radius is
  /// |from - center|; `to` is projected onto the circle's angle.
  static Arc3D between(const Vec3& center, const UnitVector3& normal,
                       const Vec3& from, const Vec3& to);
  /// Minor great-circle arc on the sphere about `sphereCenter` from `from` to
  /// `to`. The two points must not be parallel or antipodal as seen from the
  /// center.
  static Arc3D geodesic(const Vec3& sphereCenter, const Vec3& from,
                        const Vec3& to);

  const Vec3& center() const { return center_; }
  double radius() const { return radius_; }
  const UnitVector3& normal() const { return normal_; }
  double start() const { return start_; }
  double sweep() const { return sweep_; }
  const Vec3& e1() const { return e1_; }
  const Vec3& e2() const { return e2_; }

  double length() const { return radius_ * sweep_; }
  bool isFullCircle() const { return sweep_ >= kTwoPi; }

  Vec3 pointAtAngle(double angle) const;
  /// Point at fraction s in [0, 1] of the sweep.
  Vec3 at(double s) const { return pointAtAngle(start_ + s * sweep_); }
  const Vec3& startPoint() const { return startPoint_; }
  const Vec3& endPoint() const { return endPoint_; }
  Vec3 midpoint() const { return at(0.5); }

  /// Whether the in-plane direction with components (a, b) in (e1, e2) falls
  /// within the angular span.
  bool spansDirection(double a, double b) const;

  /// Same point set traversed in the opposite direction.
  Arc3D reversed() const;

 private:
  void cache();

  Vec3 center_ = Vec3::Zero();
  double radius_ = 1.0;
  UnitVector3 normal_;
  double start_ = 0.0;
  double sweep_ = kTwoPi;
  Vec3 e1_ = Vec3::UnitX();
  Vec3 e2_ = Vec3::UnitY();
  double cosStart_ = 1.0, sinStart_ = 0.0, cosEnd_ = 1.0, sinEnd_ = 0.0;
  Vec3 startPoint_ = Vec3::Zero();
  Vec3 endPoint_ = Vec3::Zero();
};

struct SupportPoint {
  double value = 0.0;
  Vec3 argmax = Vec3::Zero();
};

/// max over arc points c of c.u, and a maximizing point. The maximizer is the
/// in-plane projection point when its angle lies in the span, otherwise an
/// endpoint.
SupportPoint arcSupport(const Arc3D& arc, const UnitVector3& u);

/// max over arc points c of c.d for an arbitrary (not necessarily unit) d.
double arcMaxDot(const Arc3D& arc, const Vec3& d);

/// max over arc points c of |c - q|.
double arcMaxDistance(const Arc3D& arc, const Vec3& q);

struct Circle2 {
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
};

/// Circle through three points. Throws CollinearInput when the points are
/// collinear within eqTol.
Circle2 circumcircle(const Vec2& p, const Vec2& q, const Vec2& r,
                     double eqTol = kEqTol);

/// Spherical linear interpolation on the sphere about `center` from `from`
/// to `to` along the minor great circle; t = 0 and t = 1 return the
/// endpoints exactly.
Vec3 slerpAbout(const Vec3& center, const Vec3& from, const Vec3& to,
                double t);

/// Point at parameter t of the unit-radius minor arc from x to y centered at
/// dualArc.at(s). Throws BadDualArc unless the dual arc lies on
/// S(x,1) and S(y,1) within eqTol.
Vec3 pointOnWedgeArcFamily(const Vec3& x, const Vec3& y, const Arc3D& dualArc,
                           double s, double t, double eqTol = kEqTol);

}  // namespace meissner
