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
#include <string>
#include <vector>

#include "meissner/geom.hpp"

namespace meissner {

/// Reuleaux polygon of width 1 in the plane z = 0. Vertices are stored in
/// counterclockwise boundary order; the boundary arc following vertex i is a
/// unit arc centered at vertex opposite(i). The struct itself does not enforce
/// the invariants: use validate().
struct ReuleauxPolygon {
  std::vector<Vec2> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
  /// Index of the center of the arc from vertex i to vertex i + 1.
  int opposite(int i) const { return (i + (n() + 1) / 2) % n(); }
  int next(int i) const { return (i + 1) % n(); }
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string detail;  // witness of a failure, empty on success
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool pass() const;
  /// nullptr when no check has that name.
  const ValidationCheck* find(const std::string& name) const;
};

/// Regular Reuleaux n-gon centered at the origin, first vertex on +x.
/// Throws EvenOrTooSmallN.
ReuleauxPolygon makeRegular(int n);

/// Smallest arc angle accepted by makeRandom for n vertices.
double minArcAngle(int n);

/// Random Reuleaux n-gon, deterministic in seed, in canonical pose: first
/// vertex at the origin and a diameter from it along +x.
/// Throws EvenOrTooSmallN, or GenerationFailed after 100 rejected attempts.
ReuleauxPolygon makeRandom(int n, std::uint64_t seed);

/// Angle of each boundary arc (arc i runs from vertex i to vertex i + 1).
std::vector<double> arcAngles(const ReuleauxPolygon& polygon);

/// Checks: parity, diameter bound, arc centers, orientation and width over 360
/// directions. Failures are reported, never thrown.
ValidationReport validate(const ReuleauxPolygon& polygon,
                          double eqTol = kEqTol);

/// max of u.x over the boundary, evaluated per arc with vertex candidates.
/// The arc radius is the distance from its center to its first endpoint, so
/// malformed polygons still produce a meaningful value.
double support2D(const ReuleauxPolygon& polygon, const Vec2& u);

/// Pairs (i, j), i < j, at distance 1 within eqTol.
std::vector<std::pair<int, int>> diameterPairs(const ReuleauxPolygon& polygon,
                                               double eqTol = kEqTol);

double hullArea(const ReuleauxPolygon& polygon);

/// Boundary point of the polygon at angle theta as seen from `origin`, which
/// must be interior. Exact: the first unit circle exit along the ray.
Vec2 radialBoundaryPoint(const ReuleauxPolygon& polygon, const Vec2& origin,
                         double theta);

Vec2 centroid(const ReuleauxPolygon& polygon);

}  // namespace meissner
