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

#include "meissner/geom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace meissner {

void Tolerance::validate() const {
  if (!(eq > 0.0 && eq < 1e-3) || !(mesh > 0.0)) {
    std::ostringstream msg;
    msg << "tolerance out of range (eq=" << eq << ", mesh=" << mesh << ")";
    throw Error(ErrorCode::DegenerateInput, msg.str());
  }
}

double normalizeAngle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

UnitVector3 UnitVector3::normalize(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::DegenerateInput, "cannot normalize a zero vector");
  }
  return UnitVector3(v / n);
}

UnitVector3 UnitVector3::fromNormalized(const Vec3& v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::DegenerateInput, "direction is not a unit vector");
  }
  return UnitVector3(v);
}

std::pair<Vec3, Vec3> planeBasis(const Vec3& n) {
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(n[i]) < std::abs(n[axis])) axis = i;
  }
  Vec3 helper = Vec3::Zero();
  helper[axis] = 1.0;
  Vec3 e1 = (helper - helper.dot(n) * n).normalized();
  Vec3 e2 = n.cross(e1);
  return {e1, e2};
}

Arc3D::Arc3D(const Vec3& center, double radius, const UnitVector3& normal,
             double start, double sweep)
    : center_(center), radius_(radius), normal_(normal) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !center.allFinite()) {
    throw Error(ErrorCode::DegenerateInput, "arc radius must be positive");
  }
  if (!(sweep > 0.0) || sweep > kTwoPi + 1e-12 || !std::isfinite(start)) {
    throw Error(ErrorCode::DegenerateInput, "arc sweep must lie in (0, 2pi]");
  }
  start_ = normalizeAngle(start);
  sweep_ = std::min(sweep, kTwoPi);
  cache();
}

void Arc3D::cache() {
  std::tie(e1_, e2_) = planeBasis(normal_.vec());
  cosStart_ = std::cos(start_);
  sinStart_ = std::sin(start_);
  cosEnd_ = std::cos(start_ + sweep_);
  sinEnd_ = std::sin(start_ + sweep_);
  startPoint_ = center_ + radius_ * (cosStart_ * e1_ + sinStart_ * e2_);
  endPoint_ = center_ + radius_ * (cosEnd_ * e1_ + sinEnd_ * e2_);
}

Arc3D Arc3D::circle(const Vec3& center, double radius,
                    const UnitVector3& normal) {
  return Arc3D(center, radius, normal, 0.0, kTwoPi);
}

Arc3D Arc3D::between(const Vec3& center, const UnitVector3& normal,
                     const Vec3& from, const Vec3& to) {
  const auto [e1, e2] = planeBasis(normal.vec());
  const Vec3 a = from - center;
  const Vec3 b = to - center;
  const double angleFrom = std::atan2(a.dot(e2), a.dot(e1));
  const double angleTo = std::atan2(b.dot(e2), b.dot(e1));
  double sweep = normalizeAngle(angleTo - angleFrom);
  if (sweep == 0.0) sweep = kTwoPi;
  return Arc3D(center, a.norm(), normal, angleFrom, sweep);
}

Arc3D Arc3D::geodesic(const Vec3& sphereCenter, const Vec3& from,
                      const Vec3& to) {
  const Vec3 n = (from - sphereCenter).cross(to - sphereCenter);
  if (n.norm() <= 1e-14 * (from - sphereCenter).squaredNorm()) {
    throw Error(ErrorCode::DegenerateInput,
                "geodesic endpoints are parallel or antipodal");
  }
  return between(sphereCenter, UnitVector3::normalize(n), from, to);
}

Vec3 Arc3D::pointAtAngle(double angle) const {
  return center_ + radius_ * (std::cos(angle) * e1_ + std::sin(angle) * e2_);
}

bool Arc3D::spansDirection(double a, double b) const {
  if (isFullCircle()) return true;
  if (sweep_ <= kPi) {
    return cosStart_ * b - sinStart_ * a >= 0.0 &&
           a * sinEnd_ - b * cosEnd_ >= 0.0;
  }
  // Complement is shorter than pi: reject strictly inside it.
  const bool afterEnd = cosEnd_ * b - sinEnd_ * a > 0.0;
  const bool beforeStart = a * sinStart_ - b * cosStart_ > 0.0;
  return !(afterEnd && beforeStart);
}

Arc3D Arc3D::reversed() const {
  const UnitVector3 flipped = -normal_;
  if (isFullCircle()) return Arc3D(center_, radius_, flipped, 0.0, kTwoPi);
  const auto [e1, e2] = planeBasis(flipped.vec());
  const Vec3 a = endPoint_ - center_;
  return Arc3D(center_, radius_, flipped, std::atan2(a.dot(e2), a.dot(e1)),
               sweep_);
}

SupportPoint arcSupport(const Arc3D& arc, const UnitVector3& u) {
  const Vec3& d = u.vec();
  const double a = d.dot(arc.e1());
  const double b = d.dot(arc.e2());
  const double inPlane = std::hypot(a, b);
  if (inPlane <= 1e-15) {
    return {arc.center().dot(d), arc.startPoint()};
  }
  if (arc.spansDirection(a, b)) {
    const Vec3 w = (a * arc.e1() + b * arc.e2()) / inPlane;
    return {arc.center().dot(d) + arc.radius() * inPlane,
            arc.center() + arc.radius() * w};
  }
  const double vs = arc.startPoint().dot(d);
  const double ve = arc.endPoint().dot(d);
  if (vs >= ve) return {vs, arc.startPoint()};
  return {ve, arc.endPoint()};
}

double arcMaxDot(const Arc3D& arc, const Vec3& d) {
  const double a = d.dot(arc.e1());
  const double b = d.dot(arc.e2());
  if (arc.spansDirection(a, b)) {
    return arc.center().dot(d) + arc.radius() * std::hypot(a, b);
  }
  return std::max(arc.startPoint().dot(d), arc.endPoint().dot(d));
}

double arcMaxDistance(const Arc3D& arc, const Vec3& q) {
  // |q - m - r w|^2 = |q - m|^2 + r^2 + 2 r (m - q).w
  const Vec3 d = arc.center() - q;
  const double a = d.dot(arc.e1());
  const double b = d.dot(arc.e2());
  double best;
  if (arc.spansDirection(a, b)) {
    best = arc.radius() * std::hypot(a, b);
  } else {
    best = std::max((arc.startPoint() - arc.center()).dot(d),
                    (arc.endPoint() - arc.center()).dot(d));
  }
  const double sq =
      d.squaredNorm() + arc.radius() * arc.radius() + 2.0 * best;
  return std::sqrt(std::max(sq, 0.0));
}

Circle2 circumcircle(const Vec2& p, const Vec2& q, const Vec2& r,
                     double eqTol) {
  const Vec2 b = q - p;
  const Vec2 c = r - p;
  const double d = 2.0 * (b.x() * c.y() - b.y() * c.x());
  const double scale = std::max({b.squaredNorm(), c.squaredNorm(), 1e-300});
  if (std::abs(d) <= eqTol * scale) {
    throw Error(ErrorCode::CollinearInput, "circumcircle of collinear points");
  }
  const double b2 = b.squaredNorm();
  const double c2 = c.squaredNorm();
  const Vec2 offset((c.y() * b2 - b.y() * c2) / d, (b.x() * c2 - c.x() * b2) / d);
  return {p + offset, offset.norm()};
}

Vec3 slerpAbout(const Vec3& center, const Vec3& from, const Vec3& to,
                double t) {
  if (t == 0.0) return from;
  if (t == 1.0) return to;
  const Vec3 a = from - center;
  const Vec3 b = to - center;
  const double ra = a.norm();
  const double rb = b.norm();
  const double cosw = std::clamp(a.dot(b) / (ra * rb), -1.0, 1.0);
  const double omega = std::acos(cosw);
  const double radius = (1.0 - t) * ra + t * rb;
  if (omega < 1e-12) {
    return center + radius * ((1.0 - t) * a + t * b).normalized();
  }
  const double s = std::sin(omega);
  const Vec3 dir =
      (std::sin((1.0 - t) * omega) / ra) * a + (std::sin(t * omega) / rb) * b;
  return center + radius * dir / s;
}

Vec3 pointOnWedgeArcFamily(const Vec3& x, const Vec3& y, const Arc3D& dualArc,
                           double s, double t, double eqTol) {
  for (double probe : {0.0, 0.5, 1.0, s}) {
    const Vec3 c = dualArc.at(probe);
    const double dx = (c - x).norm();
    const double dy = (c - y).norm();
    if (std::abs(dx - 1.0) > eqTol || std::abs(dy - 1.0) > eqTol) {
      std::ostringstream msg;
      msg << "dual arc point at s=" << probe << " has distances " << dx
          << ", " << dy << " to the wedge endpoints";
      throw Error(ErrorCode::BadDualArc, msg.str());
    }
  }
  if (t == 0.0) return x;
  if (t == 1.0) return y;
  return slerpAbout(dualArc.at(s), x, y, t);
}

}  // namespace meissner
