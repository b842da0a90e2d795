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

#include <string>
#include <vector>

#include "meissner/ballpoly.hpp"

namespace meissner {

/// Edges edgeA < edgeB where the endpoints of each are the dual centers of
/// the other.
struct DualEdgePair {
  int edgeA = 0;
  int edgeB = 0;
};

struct SurgeryChoice {
  enum class Mode { Bottom, Top, Mask };
  Mode mode = Mode::Bottom;
  /// Hex digits read as one big-endian number; bit k selects edgeB of pair k.
  std::string mask;

  /// "bottom", "top" or "mask:<hex>". Throws BadMask.
  static SurgeryChoice parse(const std::string& text);
  std::string toString() const;
};

/// Surface of revolution swept by the unit arcs from x to y centered on the
/// retained dual arc. Parameters: s along dualArc (a -> b), t along the arc
/// from x to y.
struct Wedge {
  int pair = 0;
  int surgeredEdge = 0;
  int retainedEdge = 0;
  int x = 0;  // vertex indices, surgered edge v0 and v1
  int y = 0;
  int a = 0;  // retained edge endpoints; dual centers of the surgered edge
  int b = 0;
  Arc3D dualArc;  // oriented a -> b
  Arc3D sigmaA;   // geodesic on S(a, 1) from x to y
  Arc3D sigmaB;   // geodesic on S(b, 1) from x to y
  Vec3 xPoint = Vec3::Zero();
  Vec3 yPoint = Vec3::Zero();

  Vec3 at(double s, double t) const;
  /// Center of the arc through at(s, .).
  Vec3 spine(double s) const { return dualArc.at(s); }
};

struct BoundaryCurve {
  enum class Kind { EdgeArc, GeodesicTrim };
  Kind kind = Kind::EdgeArc;
  /// Edge of the base polyhedron; for a trim, the surgered edge it replaces.
  int edge = 0;
  /// Whether the curve runs in its canonical direction (edge v0 -> v1, which
  /// for a trim is x -> y).
  bool forward = true;
  Arc3D arc;  // oriented along the face boundary
};

struct TrimmedFace {
  int center = 0;
  std::vector<BoundaryCurve> boundary;  // counterclockwise seen from outside
};

struct MeissnerSolid {
  ReuleauxPolyhedron base;
  std::vector<DualEdgePair> pairs;
  /// Per pair, the surgered edge, or -1 for a pair left untouched.
  std::vector<int> surgered;
  /// One per surgered pair, in pair order.
  std::vector<Wedge> wedges;
  /// Indexed like the faces of the base polyhedron.
  std::vector<TrimmedFace> faces;

  bool complete() const;
  /// Wedge built on the given pair, or nullptr.
  const Wedge* wedgeOfPair(int pair) const;
};

/// The center set N whose unit balls intersect to the solid.
struct Skeleton {
  std::vector<Vec3> points;
  std::vector<Arc3D> arcs;
};

/// Throws SelfDualEdge, or NotInvolutive when some edge has no dual partner.
std::vector<DualEdgePair> dualPairs(const ReuleauxPolyhedron& phi,
                                    double eqTol = kEqTol);

/// Surgered edge per pair. Throws AmbiguousBottom or BadMask.
std::vector<int> resolveChoice(const ReuleauxPolyhedron& phi,
                               const std::vector<DualEdgePair>& pairs,
                               const SurgeryChoice& choice,
                               double eqTol = kEqTol);

/// Assembles the surface for an explicit per-pair selection. Entries of -1
/// leave that pair as it is in the base polyhedron, which yields a body that
/// is not of constant width; that is only useful as a control.
MeissnerSolid assembleSurface(const ReuleauxPolyhedron& phi,
                              const std::vector<int>& surgeredPerPair,
                              double eqTol = kEqTol);

MeissnerSolid performSurgery(const ReuleauxPolyhedron& phi,
                             const SurgeryChoice& choice,
                             double eqTol = kEqTol);

/// Vertices, the retained arc of each surgered pair and both arcs of any
/// untouched pair.
Skeleton skeleton(const MeissnerSolid& solid);

/// Every wedge sampled on a grid x grid (s, t) lattice lies in all unit balls
/// of the base centers, up to slack.
ValidationCheck wedgeContainmentCheck(const MeissnerSolid& solid,
                                      int grid = 64, double slack = 1e-12);

/// Trims end exactly at x and y, lie on their sphere and inside the base body.
ValidationCheck geodesicTrimCheck(const MeissnerSolid& solid,
                                  int samples = 64, double eqTol = kEqTol);

/// Each trim is used once by a face and once by a wedge, in opposite
/// directions, and every face boundary is a closed chain.
ValidationCheck closureCheck(const MeissnerSolid& solid, double eqTol = kEqTol);

/// For points P inside retained arcs and directions in their normal cone, the
/// chord of length 1 against the normal ends at a vertex or on the wedge.
ValidationCheck normalChordCheck(const MeissnerSolid& solid, int samples = 100,
                                 double eqTol = kEqTol);

}  // namespace meissner
