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

#include "meissner/reuleaux2d.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace meissner {
namespace {

void requireOddN(int n) {
  if (n < 3 || n % 2 == 0) {
    std::ostringstream msg;
    msg << "n must be odd and at least 3, got " << n;
    throw Error(ErrorCode::EvenOrTooSmallN, msg.str());
  }
}

// Portable uniform double in [0, 1) from the raw engine output; std::
// distributions are implementation-defined and would break reproducibility.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

constexpr double kConditionMargin = 1e-5;

Vec2 unitAt(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Rotating-diameter chain. The diameter through pivot k turns clockwise by
// turn[k-1]; the chain closes when the alternating sum of its directions
// vanishes. Free parameters are the first n - 1 turns; the last one makes the
// total rotation pi.
struct DiameterChain {
  int n;

  std::vector<double> lineAngles(const Eigen::VectorXd& turns) const {
    std::vector<double> phi(n);
    phi[0] = 0.0;
    for (int k = 1; k < n; ++k) phi[k] = phi[k - 1] - turns[k - 1];
    return phi;
  }

  Vec2 closure(const Eigen::VectorXd& turns) const {
    const auto phi = lineAngles(turns);
    Vec2 sum = Vec2::Zero();
    for (int k = 0; k < n; ++k) sum += (k % 2 == 0 ? 1.0 : -1.0) * unitAt(phi[k]);
    return sum;
  }

  Eigen::Matrix<double, 2, Eigen::Dynamic> jacobian(
      const Eigen::VectorXd& turns) const {
    const auto phi = lineAngles(turns);
    Eigen::Matrix<double, 2, Eigen::Dynamic> jac(2, n - 1);
    Vec2 suffix = Vec2::Zero();
    for (int k = n - 1; k >= 1; --k) {
      const double sign = (k % 2 == 0 ? 1.0 : -1.0);
      suffix += sign * Vec2(std::sin(phi[k]), -std::cos(phi[k]));
      jac.col(k - 1) = suffix;
    }
    return jac;
  }

  // Least-norm Newton projection onto the closure manifold.
  bool project(Eigen::VectorXd& turns) const {
    for (int iter = 0; iter < 40; ++iter) {
      const Vec2 g = closure(turns);
      if (g.norm() < 1e-15) return true;
      const auto jac = jacobian(turns);
      const Eigen::Matrix2d jjt = jac * jac.transpose();
      if (std::abs(jjt.determinant()) < 1e-14) return false;
      turns -= jac.transpose() * jjt.inverse() * g;
    }
    return closure(turns).norm() < 1e-13;
  }

  std::vector<Vec2> vertices(const Eigen::VectorXd& turns) const {
    const auto phi = lineAngles(turns);
    std::vector<Vec2> v(n);
    v[0] = Vec2::Zero();
    for (int k = 0; k + 1 < n; ++k) {
      v[k + 1] = v[k] + (k % 2 == 0 ? 1.0 : -1.0) * unitAt(phi[k]);
    }
    return v;
  }
};

ReuleauxPolygon toBoundaryOrder(std::vector<Vec2> starOrder) {
  Vec2 c = Vec2::Zero();
  for (const auto& p : starOrder) c += p;
  c /= static_cast<double>(starOrder.size());
  std::vector<int> order(starOrder.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> angle(starOrder.size());
  for (size_t i = 0; i < starOrder.size(); ++i) {
    angle[i] = std::atan2(starOrder[i].y() - c.y(), starOrder[i].x() - c.x());
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return angle[a] < angle[b]; });
  const auto first = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), first, order.end());
  ReuleauxPolygon polygon;
  for (int idx : order) polygon.vertices.push_back(starOrder[idx]);
  polygon.vertices[0] = Vec2::Zero();
  return polygon;
}

// Smallest gap |d - r| between a vertex and a circumcircle that (almost)
// encloses every vertex. Small gaps mean nearly cocircular quadruples, which
// make the farthest-point Delaunay family ill-conditioned.
double cocircularityMargin(const std::vector<Vec2>& p) {
  const int n = static_cast<int>(p.size());
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Circle2 disk;
        try {
          disk = circumcircle(p[i], p[j], p[k]);
        } catch (const Error&) {
          return 0.0;
        }
        double excess = -kConditionMargin;
        double gap = std::numeric_limits<double>::infinity();
        for (int m = 0; m < n; ++m) {
          if (m == i || m == j || m == k) continue;
          const double d = (p[m] - disk.center).norm() - disk.radius;
          excess = std::max(excess, d);
          gap = std::min(gap, std::abs(d));
        }
        if (excess <= kConditionMargin) margin = std::min(margin, gap);
      }
    }
  }
  return margin;
}

}  // namespace

bool ValidationReport::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.pass; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ReuleauxPolygon makeRegular(int n) {
  requireOddN(n);
  const double radius = 1.0 / (2.0 * std::cos(kPi / (2.0 * n)));
  ReuleauxPolygon polygon;
  polygon.vertices.reserve(n);
  for (int k = 0; k < n; ++k) {
    polygon.vertices.push_back(radius * unitAt(kTwoPi * k / n));
  }
  return polygon;
}

double minArcAngle(int n) { return std::min(0.05, 0.5 * kPi / n); }

ReuleauxPolygon makeRandom(int n, std::uint64_t seed) {
  requireOddN(n);
  std::mt19937_64 gen(seed);
  const DiameterChain chain{n};
  const double minAngle = minArcAngle(n);
  const double floor = std::min(2.0 * minAngle, 0.75 * kPi / n);
  const double regular = kPi / n;

  for (int attempt = 0; attempt < 100; ++attempt) {
    // Uniform point of the simplex, shifted so every turn starts above floor.
    Eigen::VectorXd weights(n);
    for (int k = 0; k < n; ++k) weights[k] = -std::log1p(-uniform01(gen));
    weights /= weights.sum();
    const Eigen::VectorXd target =
        Eigen::VectorXd::Constant(n, floor) + (kPi - n * floor) * weights;

    // Continuation from the regular polygon, which closes exactly.
    Eigen::VectorXd turns = Eigen::VectorXd::Constant(n - 1, regular);
    bool ok = true;
    constexpr int kSteps = 10;
    for (int step = 1; step <= kSteps && ok; ++step) {
      const double delta = 1.0 / kSteps;
      turns += delta * (target.head(n - 1) -
                        Eigen::VectorXd::Constant(n - 1, regular));
      ok = chain.project(turns);
    }
    if (!ok) continue;
    const double last = kPi - turns.sum();
    if (turns.minCoeff() < minAngle || last < minAngle) continue;

    ReuleauxPolygon polygon = toBoundaryOrder(chain.vertices(turns));
    if (!validate(polygon).pass()) continue;
    const auto angles = arcAngles(polygon);
    if (*std::min_element(angles.begin(), angles.end()) < minAngle) continue;
    if (cocircularityMargin(polygon.vertices) < kConditionMargin) continue;
    return polygon;
  }
  std::ostringstream msg;
  msg << "no valid Reuleaux polygon with n=" << n << " after 100 attempts (seed "
      << seed << ")";
  throw Error(ErrorCode::GenerationFailed, msg.str());
}

std::vector<double> arcAngles(const ReuleauxPolygon& polygon) {
  const int n = polygon.n();
  std::vector<double> angles(n);
  for (int i = 0; i < n; ++i) {
    const Vec2& c = polygon.vertices[polygon.opposite(i)];
    const Vec2 a = polygon.vertices[i] - c;
    const Vec2 b = polygon.vertices[polygon.next(i)] - c;
    angles[i] = normalizeAngle(std::atan2(b.y(), b.x()) - std::atan2(a.y(), a.x()));
  }
  return angles;
}

double support2D(const ReuleauxPolygon& polygon, const Vec2& u) {
  const int n = polygon.n();
  double best = -std::numeric_limits<double>::infinity();
  const double dirAngle = std::atan2(u.y(), u.x());
  for (int i = 0; i < n; ++i) {
    const Vec2& p = polygon.vertices[i];
    best = std::max(best, p.dot(u));
    const Vec2& c = polygon.vertices[polygon.opposite(i)];
    const Vec2 a = p - c;
    const Vec2 b = polygon.vertices[polygon.next(i)] - c;
    const double a0 = std::atan2(a.y(), a.x());
    const double sweep = normalizeAngle(std::atan2(b.y(), b.x()) - a0);
    if (normalizeAngle(dirAngle - a0) <= sweep) {
      best = std::max(best, c.dot(u) + a.norm() * u.norm());
    }
  }
  return best;
}

ValidationReport validate(const ReuleauxPolygon& polygon, double eqTol) {
  ValidationReport report;
  const int n = polygon.n();
  const bool parity = n >= 3 && n % 2 == 1;
  report.checks.push_back({"parity", parity, parity ? 0.0 : 1.0, ""});
  if (n < 3) return report;

  double overDiameter = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      overDiameter = std::max(
          overDiameter, (polygon.vertices[i] - polygon.vertices[j]).norm() - 1.0);
    }
  }
  report.checks.push_back({"diameter_bound", overDiameter <= eqTol, overDiameter, ""});

  double centerResidual = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2& c = polygon.vertices[polygon.opposite(i)];
    centerResidual = std::max(
        {centerResidual, std::abs((polygon.vertices[i] - c).norm() - 1.0),
         std::abs((polygon.vertices[polygon.next(i)] - c).norm() - 1.0)});
  }
  report.checks.push_back({"arc_centers", centerResidual <= eqTol, centerResidual, ""});

  // Strictly convex, counterclockwise vertex order.
  double worstTurn = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const Vec2 a = polygon.vertices[polygon.next(i)] - polygon.vertices[i];
    const Vec2 b =
        polygon.vertices[polygon.next(polygon.next(i))] - polygon.vertices[polygon.next(i)];
    worstTurn = std::min(worstTurn, a.x() * b.y() - a.y() * b.x());
  }
  report.checks.push_back(
      {"orientation", worstTurn > 0.0, worstTurn > 0.0 ? 0.0 : -worstTurn, ""});

  double widthResidual = 0.0;
  for (int k = 0; k < 360; ++k) {
    const Vec2 u = unitAt(kTwoPi * k / 360.0);
    const double width = support2D(polygon, u) + support2D(polygon, -u);
    widthResidual = std::max(widthResidual, std::abs(width - 1.0));
  }
  report.checks.push_back({"width", widthResidual <= eqTol, widthResidual, ""});
  return report;
}

std::vector<std::pair<int, int>> diameterPairs(const ReuleauxPolygon& polygon,
                                               double eqTol) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < polygon.n(); ++i) {
    for (int j = i + 1; j < polygon.n(); ++j) {
      if (std::abs((polygon.vertices[i] - polygon.vertices[j]).norm() - 1.0) <= eqTol) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return pairs;
}

double hullArea(const ReuleauxPolygon& polygon) {
  double twice = 0.0;
  for (int i = 0; i < polygon.n(); ++i) {
    const Vec2& a = polygon.vertices[i];
    const Vec2& b = polygon.vertices[polygon.next(i)];
    twice += a.x() * b.y() - a.y() * b.x();
  }
  return 0.5 * twice;
}

Vec2 centroid(const ReuleauxPolygon& polygon) {
  Vec2 c = Vec2::Zero();
  for (const auto& p : polygon.vertices) c += p;
  return c / static_cast<double>(polygon.n());
}

Vec2 radialBoundaryPoint(const ReuleauxPolygon& polygon, const Vec2& origin,
                         double theta) {
  const Vec2 d = unitAt(theta);
  double exit = std::numeric_limits<double>::infinity();
  for (const auto& p : polygon.vertices) {
    const Vec2 w = origin - p;
    const double b = d.dot(w);
    const double disc = b * b - (w.squaredNorm() - 1.0);
    exit = std::min(exit, -b + std::sqrt(std::max(disc, 0.0)));
  }
  return origin + exit * d;
}

}  // namespace meissner
