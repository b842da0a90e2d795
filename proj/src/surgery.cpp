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

#include "meissner/surgery.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace meissner {
namespace {

int hexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return 10 + c - 'a';
  return -1;
}

// Orientation of the (s, t) chart against the outward normal P - spine(s).
bool wedgeChartPositive(const Wedge& w) {
  constexpr double h = 1e-4;
  const Vec3 p = w.at(0.5, 0.5);
  const Vec3 ds = w.at(0.5 + h, 0.5) - w.at(0.5 - h, 0.5);
  const Vec3 dt = w.at(0.5, 0.5 + h) - w.at(0.5, 0.5 - h);
  return ds.cross(dt).dot(p - w.spine(0.5)) > 0.0;
}

bool insideSkeleton(const Skeleton& n, const Vec3& q, double slack) {
  for (const auto& c : n.points) {
    if ((q - c).norm() > 1.0 + slack) return false;
  }
  for (const auto& arc : n.arcs) {
    if (arcMaxDistance(arc, q) > 1.0 + slack) return false;
  }
  return true;
}

}  // namespace

SurgeryChoice SurgeryChoice::parse(const std::string& text) {
  SurgeryChoice choice;
  if (text == "bottom") return choice;
  if (text == "top") {
    choice.mode = Mode::Top;
    return choice;
  }
  const std::string prefix = "mask:";
  if (text.rfind(prefix, 0) != 0) {
    throw Error(ErrorCode::BadMask,
                "surgery must be bottom, top or mask:<hex>, got '" + text + "'");
  }
  choice.mode = Mode::Mask;
  choice.mask = text.substr(prefix.size());
  if (choice.mask.empty()) throw Error(ErrorCode::BadMask, "empty mask");
  for (char c : choice.mask) {
    if (hexValue(c) < 0) {
      throw Error(ErrorCode::BadMask, "mask '" + choice.mask + "' is not hex");
    }
  }
  return choice;
}

std::string SurgeryChoice::toString() const {
  switch (mode) {
    case Mode::Bottom:
      return "bottom";
    case Mode::Top:
      return "top";
    case Mode::Mask:
      return "mask:" + mask;
  }
  return "";
}

Vec3 Wedge::at(double s, double t) const {
  if (t == 0.0) return xPoint;
  if (t == 1.0) return yPoint;
  return slerpAbout(dualArc.at(s), xPoint, yPoint, t);
}

bool MeissnerSolid::complete() const {
  return std::none_of(surgered.begin(), surgered.end(),
                      [](int e) { return e < 0; });
}

const Wedge* MeissnerSolid::wedgeOfPair(int pair) const {
  for (const auto& w : wedges) {
    if (w.pair == pair) return &w;
  }
  return nullptr;
}

std::vector<DualEdgePair> dualPairs(const ReuleauxPolyhedron& phi,
                                    double eqTol) {
  std::vector<DualEdgePair> pairs;
  const auto& X = phi.centers;
  for (int e = 0; e < phi.edgeCount(); ++e) {
    const auto& edge = phi.edges[e];
    const int partner = phi.edgeBetween(edge.a, edge.b);
    if (partner == e) {
      throw Error(ErrorCode::SelfDualEdge,
                  "edge " + std::to_string(e) + " is its own dual");
    }
    const auto& other = partner >= 0 ? phi.edges[partner] : edge;
    const bool matches =
        partner >= 0 && std::min(other.a, other.b) == std::min(edge.v0, edge.v1) &&
        std::max(other.a, other.b) == std::max(edge.v0, edge.v1);
    if (!matches) {
      throw Error(ErrorCode::NotInvolutive,
                  "edge " + std::to_string(e) + " has no dual edge");
    }
    for (int p : {edge.v0, edge.v1}) {
      for (int q : {edge.a, edge.b}) {
        const double d = (X[p] - X[q]).norm();
        if (std::abs(d - 1.0) > eqTol) {
          std::ostringstream msg;
          msg << "edges " << e << " and " << partner << ": d(" << p << "," << q
              << ") = " << d;
          throw Error(ErrorCode::NotInvolutive, msg.str());
        }
      }
    }
    if (e < partner) pairs.push_back({e, partner});
  }
  if (2 * static_cast<int>(pairs.size()) != phi.edgeCount()) {
    throw Error(ErrorCode::NotInvolutive, "edge duality is not a perfect matching");
  }
  return pairs;
}

std::vector<int> resolveChoice(const ReuleauxPolyhedron& phi,
                               const std::vector<DualEdgePair>& pairs,
                               const SurgeryChoice& choice, double eqTol) {
  const int count = static_cast<int>(pairs.size());
  std::vector<int> out(count);
  if (choice.mode == SurgeryChoice::Mode::Mask) {
    const size_t digits = (count + 3) / 4;
    if (choice.mask.size() != digits) {
      std::ostringstream msg;
      msg << "mask has " << choice.mask.size() << " hex digits, expected "
          << digits << " for " << count << " dual pairs";
      throw Error(ErrorCode::BadMask, msg.str());
    }
    for (int k = 0; k < 4 * static_cast<int>(digits); ++k) {
      const char c = choice.mask[digits - 1 - k / 4];
      const int value = hexValue(c);
      if (value < 0) throw Error(ErrorCode::BadMask, "mask is not hex");
      const bool bit = (value >> (k % 4)) & 1;
      if (k >= count) {
        if (bit) {
          throw Error(ErrorCode::BadMask,
                      "mask sets bit " + std::to_string(k) + " beyond the pairs");
        }
        continue;
      }
      out[k] = bit ? pairs[k].edgeB : pairs[k].edgeA;
    }
    return out;
  }
  const bool bottom = choice.mode == SurgeryChoice::Mode::Bottom;
  for (int k = 0; k < count; ++k) {
    const double za = phi.edges[pairs[k].edgeA].arc.midpoint().z();
    const double zb = phi.edges[pairs[k].edgeB].arc.midpoint().z();
    if (std::abs(za - zb) <= eqTol) {
      std::ostringstream msg;
      msg << "pair " << k << " (edges " << pairs[k].edgeA << ", "
          << pairs[k].edgeB << ") has equal midpoint heights; use a mask";
      throw Error(ErrorCode::AmbiguousBottom, msg.str());
    }
    const bool aLower = za < zb;
    out[k] = (aLower == bottom) ? pairs[k].edgeA : pairs[k].edgeB;
  }
  return out;
}

MeissnerSolid assembleSurface(const ReuleauxPolyhedron& phi,
                              const std::vector<int>& surgeredPerPair,
                              double eqTol) {
  MeissnerSolid solid;
  solid.base = phi;
  solid.pairs = dualPairs(phi, eqTol);
  if (surgeredPerPair.size() != solid.pairs.size()) {
    std::ostringstream msg;
    msg << surgeredPerPair.size() << " selections for " << solid.pairs.size()
        << " dual pairs";
    throw Error(ErrorCode::BadMask, msg.str());
  }
  solid.surgered = surgeredPerPair;
  const auto& X = phi.centers;

  std::vector<bool> isSurgered(phi.edgeCount(), false);
  for (int k = 0; k < static_cast<int>(solid.pairs.size()); ++k) {
    const int e = surgeredPerPair[k];
    if (e < 0) continue;
    const auto& pair = solid.pairs[k];
    if (e != pair.edgeA && e != pair.edgeB) {
      throw Error(ErrorCode::BadMask, "selection for pair " + std::to_string(k) +
                                          " is not one of its edges");
    }
    isSurgered[e] = true;
    const int kept = e == pair.edgeA ? pair.edgeB : pair.edgeA;
    const auto& cut = phi.edges[e];
    const auto& retained = phi.edges[kept];

    Wedge w;
    w.pair = k;
    w.surgeredEdge = e;
    w.retainedEdge = kept;
    w.x = cut.v0;
    w.y = cut.v1;
    w.a = cut.a;
    w.b = cut.b;
    w.xPoint = X[w.x];
    w.yPoint = X[w.y];
    w.dualArc = retained.v0 == w.a ? retained.arc : retained.arc.reversed();
    // Validates that the dual arc lies on S(x,1) ∩ S(y,1).
    pointOnWedgeArcFamily(w.xPoint, w.yPoint, w.dualArc, 0.5, 0.5, eqTol);
    w.sigmaA = Arc3D::geodesic(X[w.a], w.xPoint, w.yPoint);
    w.sigmaB = Arc3D::geodesic(X[w.b], w.xPoint, w.yPoint);
    solid.wedges.push_back(w);
  }

  for (const auto& face : phi.faces) {
    TrimmedFace trimmed;
    trimmed.center = face.center;
    for (size_t k = 0; k < face.edges.size(); ++k) {
      const int e = face.edges[k];
      const auto& edge = phi.edges[e];
      BoundaryCurve curve;
      curve.edge = e;
      curve.forward = face.forward[k];
      if (isSurgered[e]) {
        curve.kind = BoundaryCurve::Kind::GeodesicTrim;
        const Vec3& from = curve.forward ? X[edge.v0] : X[edge.v1];
        const Vec3& to = curve.forward ? X[edge.v1] : X[edge.v0];
        curve.arc = Arc3D::geodesic(X[face.center], from, to);
      } else {
        curve.arc = curve.forward ? edge.arc : edge.arc.reversed();
      }
      trimmed.boundary.push_back(curve);
    }
    solid.faces.push_back(std::move(trimmed));
  }
  return solid;
}

MeissnerSolid performSurgery(const ReuleauxPolyhedron& phi,
                             const SurgeryChoice& choice, double eqTol) {
  const auto pairs = dualPairs(phi, eqTol);
  return assembleSurface(phi, resolveChoice(phi, pairs, choice, eqTol), eqTol);
}

Skeleton skeleton(const MeissnerSolid& solid) {
  Skeleton n;
  n.points = solid.base.centers;
  for (int k = 0; k < static_cast<int>(solid.pairs.size()); ++k) {
    const auto& pair = solid.pairs[k];
    const int e = solid.surgered[k];
    if (e < 0) {
      n.arcs.push_back(solid.base.edges[pair.edgeA].arc);
      n.arcs.push_back(solid.base.edges[pair.edgeB].arc);
    } else {
      const int kept = e == pair.edgeA ? pair.edgeB : pair.edgeA;
      n.arcs.push_back(solid.base.edges[kept].arc);
    }
  }
  return n;
}

ValidationCheck wedgeContainmentCheck(const MeissnerSolid& solid, int grid,
                                      double slack) {
  ValidationCheck check{"wedge_containment", true, 0.0, ""};
  const auto& X = solid.base.centers;
  for (const auto& w : solid.wedges) {
    for (int i = 0; i < grid; ++i) {
      const double s = grid == 1 ? 0.5 : static_cast<double>(i) / (grid - 1);
      for (int j = 0; j < grid; ++j) {
        const double t = grid == 1 ? 0.5 : static_cast<double>(j) / (grid - 1);
        const Vec3 p = w.at(s, t);
        for (size_t c = 0; c < X.size(); ++c) {
          const double excess = (p - X[c]).norm() - 1.0;
          if (excess > check.residual) {
            check.residual = excess;
            if (excess > slack) {
              std::ostringstream msg;
              msg << "wedge of pair " << w.pair << " at (s,t)=(" << s << ","
                  << t << ") leaves the ball of center " << c;
              check.detail = msg.str();
            }
          }
        }
      }
    }
  }
  check.pass = check.residual <= slack;
  return check;
}

ValidationCheck geodesicTrimCheck(const MeissnerSolid& solid, int samples,
                                  double eqTol) {
  ValidationCheck check{"geodesic_trim", true, 0.0, ""};
  const auto& X = solid.base.centers;
  for (const auto& w : solid.wedges) {
    for (const auto& [sigma, center] :
         {std::pair{&w.sigmaA, w.a}, std::pair{&w.sigmaB, w.b}}) {
      double r = std::max((sigma->startPoint() - w.xPoint).norm(),
                          (sigma->endPoint() - w.yPoint).norm());
      for (int k = 0; k <= samples; ++k) {
        const Vec3 q = sigma->at(static_cast<double>(k) / samples);
        r = std::max(r, std::abs((q - X[center]).norm() - 1.0));
        for (const auto& c : X) r = std::max(r, (q - c).norm() - 1.0);
      }
      if (r > check.residual) {
        check.residual = r;
        if (r > eqTol) {
          check.detail = "trim on the sphere of center " +
                         std::to_string(center) + " of pair " +
                         std::to_string(w.pair);
        }
      }
    }
  }
  check.pass = check.residual <= eqTol;
  return check;
}

ValidationCheck closureCheck(const MeissnerSolid& solid, double eqTol) {
  ValidationCheck check{"surface_closure", true, 0.0, ""};
  const auto fail = [&](const std::string& why) {
    if (check.pass) check.detail = why;
    check.pass = false;
    check.residual = 1.0;
  };

  for (const auto& face : solid.faces) {
    const size_t m = face.boundary.size();
    for (size_t k = 0; k < m; ++k) {
      const Vec3& end = face.boundary[k].arc.endPoint();
      const Vec3& next = face.boundary[(k + 1) % m].arc.startPoint();
      if ((end - next).norm() > eqTol) {
        fail("boundary of face " + std::to_string(face.center) + " is open");
      }
    }
  }

  for (const auto& w : solid.wedges) {
    // Positive chart: the counterclockwise boundary walks sigmaB x -> y and
    // sigmaA y -> x.
    const bool positive = wedgeChartPositive(w);
    const bool wedgeAForward = !positive;
    const bool wedgeBForward = positive;
    int usesA = 0;
    int usesB = 0;
    for (const auto& face : solid.faces) {
      for (const auto& curve : face.boundary) {
        if (curve.kind != BoundaryCurve::Kind::GeodesicTrim ||
            curve.edge != w.surgeredEdge) {
          continue;
        }
        const bool forward = curve.forward;
        if (face.center == w.a) {
          ++usesA;
          if (forward == wedgeAForward) fail("trim A of pair " + std::to_string(w.pair) + " has matching orientation");
        } else if (face.center == w.b) {
          ++usesB;
          if (forward == wedgeBForward) fail("trim B of pair " + std::to_string(w.pair) + " has matching orientation");
        } else {
          fail("trim of pair " + std::to_string(w.pair) + " on a foreign face");
        }
      }
    }
    if (usesA != 1 || usesB != 1) {
      fail("trims of pair " + std::to_string(w.pair) + " are not used once each");
    }
  }
  return check;
}

ValidationCheck normalChordCheck(const MeissnerSolid& solid, int samples,
                                 double eqTol) {
  ValidationCheck check{"normal_chord", true, 0.0, ""};
  const Skeleton n = skeleton(solid);
  constexpr int kConeSteps = 8;
  for (const auto& w : solid.wedges) {
    for (int i = 1; i <= samples; ++i) {
      const double s = static_cast<double>(i) / (samples + 1);
      const Vec3 p = w.dualArc.at(s);
      const Vec3 nx = p - w.xPoint;
      const Vec3 ny = p - w.yPoint;
      const Vec3 plane = nx.cross(ny).normalized();
      for (int j = 0; j <= kConeSteps; ++j) {
        const double t = static_cast<double>(j) / kConeSteps;
        const Vec3 nu = ((1.0 - t) * nx + t * ny).normalized();
        const Vec3 q = p - nu;
        double r = std::abs(plane.dot(q - p));
        const bool vertex = (q - w.xPoint).norm() <= eqTol ||
                            (q - w.yPoint).norm() <= eqTol;
        // Inside the minor arc from x to y: on the same side of both ends.
        if (!vertex) {
          const Vec3 dq = q - p;
          const double toX = (-nx).cross(dq).dot(plane);
          const double toY = dq.cross(-ny).dot(plane);
          if (toX < -eqTol || toY < -eqTol) r = std::max(r, std::max(-toX, -toY));
        }
        if (!insideSkeleton(n, q, eqTol)) r = std::max(r, 1.0);
        if (r > check.residual) {
          check.residual = r;
          if (r > eqTol) {
            std::ostringstream msg;
            msg << "chord from the retained arc of pair " << w.pair
                << " at s=" << s << " misses the wedge";
            check.detail = msg.str();
          }
        }
      }
    }
  }
  check.pass = check.residual <= eqTol;
  return check;
}

}  // namespace meissner
