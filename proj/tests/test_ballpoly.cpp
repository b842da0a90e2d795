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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace meissner;
using fixtures::errorOf;
using fixtures::liftedPhi;

namespace {

void checkStructure(const ReuleauxPolyhedron& phi) {
  const int v = phi.vertexCount(), e = phi.edgeCount(), f = phi.faceCount();
  CHECK(e == 2 * v - 2);
  CHECK(v - e + f == 2);
  CHECK(checkReuleauxPolyhedron(phi).pass());

  // Edge arcs: on S(a,1) ∩ S(b,1), centered at the midpoint, orthogonal to ab.
  for (const auto& edge : phi.edges) {
    const Vec3& a = phi.centers[edge.a];
    const Vec3& b = phi.centers[edge.b];
    CHECK((edge.arc.center() - 0.5 * (a + b)).norm() < 1e-12);
    CHECK(edge.arc.normal().vec().cross(b - a).norm() < 1e-12);
    for (double s : {0.0, 0.25, 0.5, 1.0}) {
      CHECK(std::abs((edge.arc.at(s) - a).norm() - 1.0) < 1e-12);
      CHECK(std::abs((edge.arc.at(s) - b).norm() - 1.0) < 1e-12);
    }
    CHECK((edge.arc.startPoint() - phi.centers[edge.v0]).norm() < 1e-9);
    CHECK((edge.arc.endPoint() - phi.centers[edge.v1]).norm() < 1e-9);
  }

  // Each edge bounds two faces, once in each direction.
  std::map<int, std::vector<bool>> uses;
  for (const auto& face : phi.faces)
    for (std::size_t k = 0; k < face.edges.size(); ++k)
      uses[face.edges[k]].push_back(face.forward[k]);
  CHECK(static_cast<int>(uses.size()) == e);
  for (const auto& [edge, dirs] : uses) {
    REQUIRE(dirs.size() == 2);
    CHECK(dirs[0] != dirs[1]);
  }

  // Face i lies on S(x_i, 1) and its vertices are the diameter partners of x_i.
  DiameterGraph g = diameterGraph(phi.centers);
  CHECK(static_cast<int>(g.edges.size()) == e);
  CHECK(diameterCount(phi.centers) == e);
  std::vector<int> degrees = g.degrees();
  std::vector<std::vector<int>> partners(v);
  for (const auto& [i, j] : g.edges) {
    partners[i].push_back(j);
    partners[j].push_back(i);
  }
  for (int x = 0; x < v; ++x) {
    std::vector<int> faceVertices = phi.faces[x].vertices;
    std::sort(faceVertices.begin(), faceVertices.end());
    std::sort(partners[x].begin(), partners[x].end());
    CHECK(phi.faces[x].center == x);
    CHECK(faceVertices == partners[x]);
    // Vertex degree equals the size of the dual face.
    CHECK(static_cast<int>(phi.neighbors(x).size()) == degrees[x]);
  }
  CHECK(isThreeConnected(v, g.edges));
}

}  // namespace

TEST_SUITE("ballpoly") {

TEST_CASE("lift of the Reuleaux triangle is the unit tetrahedron") {
  LiftResult l = lift(farthestPointDiagram(makeRegular(3)));
  REQUIRE(l.points.size() == 4);
  REQUIRE(l.top.size() == 1);
  CHECK(std::abs(l.top[0].z() - std::sqrt(2.0 / 3.0)) < 1e-12);
  CHECK(l.top[0].z() == doctest::Approx(0.8164966).epsilon(1e-7));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(std::abs((l.points[i] - l.points[j]).norm() - 1.0) < 1e-12);
}

TEST_CASE("lift of the regular pentagon") {
  LiftResult l = lift(farthestPointDiagram(makeRegular(5)));
  REQUIRE(l.points.size() == 6);
  CHECK(l.top[0].z() == doctest::Approx(0.8506508).epsilon(1e-7));
  CHECK(l.top[0].z() == doctest::Approx(std::sqrt(1.0 - 0.2763932)).epsilon(1e-7));
}

TEST_CASE("lift of generic pentagons") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    LiftResult l = lift(farthestPointDiagram(makeRandom(5, s)));
    CHECK(l.points.size() == 8);
    for (int i = 0; i < 5; ++i) CHECK(l.points[i].z() == 0.0);
  }
}

TEST_CASE("imaginary lift") {
  FarthestPointDiagram d = farthestPointDiagram(makeRegular(3));
  d.faces[0].radius = 1.2;
  CHECK(errorOf([&] { lift(d); }) == ErrorCode::LiftImaginary);
}

TEST_CASE("tetrahedron is K4") {
  ReuleauxPolyhedron phi = fixtures::tetrahedron();
  CHECK(phi.vertexCount() == 4);
  CHECK(phi.edgeCount() == 6);
  CHECK(phi.faceCount() == 4);
  for (int i = 0; i < 4; ++i) CHECK(phi.neighbors(i).size() == 3);
  checkStructure(phi);
}

TEST_CASE("regular pentagon gives the wheel") {
  ReuleauxPolyhedron phi = liftedPhi(makeRegular(5));
  CHECK(phi.vertexCount() == 6);
  CHECK(phi.edgeCount() == 10);
  CHECK(phi.faceCount() == 6);
  std::vector<int> degrees = diameterGraph(phi.centers).degrees();
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{3, 3, 3, 3, 3, 5});
  CHECK(diameterCount(phi.centers) == 10);
  checkStructure(phi);
}

TEST_CASE("generic pentagon counts") {
  ReuleauxPolyhedron phi = liftedPhi(makeRandom(5, 42));
  CHECK(phi.vertexCount() == 8);
  CHECK(phi.edgeCount() == 14);
  CHECK(phi.faceCount() == 8);
  CHECK(diameterCount(phi.centers) == 14);
  checkStructure(phi);
}

TEST_CASE("structure over the lifted corpus") {
  for (int n : {3, 5, 7, 9, 11}) {
    for (int s = -1; s < 20; ++s) {
      ReuleauxPolygon p = s < 0 ? makeRegular(n) : makeRandom(n, s);
      INFO("n=" << n << " seed=" << s);
      FarthestPointDiagram d = farthestPointDiagram(p);
      ReuleauxPolyhedron phi = liftedPhi(p);
      CHECK(phi.vertexCount() == n + static_cast<int>(d.faces.size()));
      checkStructure(phi);
      // Upper vertices of face i project into the farthest cell of p_i.
      for (int i = 0; i < n; ++i)
        for (int v : phi.faces[i].vertices)
          if (phi.centers[v].z() > 0.0)
            CHECK(inFarthestCell(p, i, phi.centers[v].head<2>()));
    }
  }
}

TEST_CASE("diameter graphs") {
  CHECK(diameterGraph(fixtures::tetrahedron().centers).edges.size() == 6);
  DiameterGraph two = diameterGraph({Vec3::Zero(), Vec3::UnitX()});
  CHECK(two.edges.size() == 1);
  CHECK(two.degrees() == std::vector<int>{1, 1});
}

TEST_CASE("boundary classification") {
  ReuleauxPolyhedron phi = fixtures::tetrahedron();
  for (int v = 0; v < 4; ++v) {
    BoundaryClass c = classifyBoundaryPoint(phi, phi.centers[v]);
    CHECK(c.kind == BoundaryClass::Kind::ZeroSingular);
    CHECK(c.index == v);
  }
  for (int e = 0; e < phi.edgeCount(); ++e) {
    BoundaryClass c = classifyBoundaryPoint(phi, phi.edges[e].arc.midpoint());
    CHECK(c.kind == BoundaryClass::Kind::OneSingular);
    CHECK(c.index == e);
  }
  for (int x = 0; x < 4; ++x) {
    Vec3 mean = Vec3::Zero();
    for (int v : phi.faces[x].vertices) mean += phi.centers[v];
    Vec3 p = phi.centers[x] + (mean / 3.0 - phi.centers[x]).normalized();
    BoundaryClass c = classifyBoundaryPoint(phi, p);
    CHECK(c.kind == BoundaryClass::Kind::Regular);
    CHECK(c.index == x);
  }
  CHECK(classifyBoundaryPoint(phi, Vec3(5, 5, 5)).kind ==
        BoundaryClass::Kind::NotOnBoundary);
  Vec3 inner = Vec3::Zero();
  for (const auto& c : phi.centers) inner += c / 4.0;
  CHECK(classifyBoundaryPoint(phi, inner).kind == BoundaryClass::Kind::NotOnBoundary);
}

TEST_CASE("random boundary points are regular") {
  ReuleauxPolyhedron phi = liftedPhi(makeRandom(7, 1));
  Vec3 inner = Vec3::Zero();
  for (const auto& c : phi.centers) inner += c / phi.vertexCount();
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  int regular = 0;
  for (int k = 0; k < 1000; ++k) {
    Vec3 d = Vec3(g(rng), g(rng), g(rng)).normalized();
    double lo = 0.0, hi = 2.0;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      (insideBalls(phi.centers, inner + mid * d, 0.0) ? lo : hi) = mid;
    }
    if (classifyBoundaryPoint(phi, inner + lo * d).kind == BoundaryClass::Kind::Regular)
      ++regular;
  }
  CHECK(regular == 1000);
}

TEST_CASE("metric embedding violations") {
  std::vector<Vec3> X = fixtures::tetrahedron().centers;
  std::vector<Vec3> scaled = X;
  for (auto& x : scaled) x *= 1.01;
  CHECK(errorOf([&] { buildReuleauxPolyhedron(scaled); }) ==
        ErrorCode::MetricEmbeddingViolation);

  // A point on an edge arc sees only two diameters.
  ReuleauxPolyhedron phi = fixtures::tetrahedron();
  std::vector<Vec3> withArcPoint = X;
  withArcPoint.push_back(phi.edges[0].arc.midpoint());
  CHECK(errorOf([&] { buildReuleauxPolyhedron(withArcPoint); }) ==
        ErrorCode::MetricEmbeddingViolation);

  std::vector<Vec3> few(X.begin(), X.begin() + 3);
  CHECK(errorOf([&] { buildReuleauxPolyhedron(few); }).has_value());

  std::vector<Vec3> twice = X;
  twice.push_back(X[0]);
  CHECK(errorOf([&] { buildReuleauxPolyhedron(twice); }).has_value());
}

TEST_CASE("broken structures fail their checks") {
  ReuleauxPolyhedron phi = liftedPhi(makeRegular(5));
  ReuleauxPolyhedron swapped = phi;
  PolyEdge& e0 = swapped.edges[0];
  e0.a = (e0.a + 1) % 5 == e0.b ? (e0.a + 2) % 5 : (e0.a + 1) % 5;
  CHECK_FALSE(fixtures::require(checkReuleauxPolyhedron(swapped), "edge_geometry").pass);

  ReuleauxPolyhedron moved = phi;
  moved.centers[0] *= 1.05;
  CHECK_FALSE(fixtures::require(checkReuleauxPolyhedron(moved), "metric_embedding").pass);

  ReuleauxPolyhedron dropped = phi;
  dropped.faces[0].edges.pop_back();
  dropped.faces[0].forward.pop_back();
  dropped.faces[0].vertices.pop_back();
  CHECK_FALSE(checkReuleauxPolyhedron(dropped).pass());
}

TEST_CASE("connectivity") {
  CHECK(isThreeConnected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK_FALSE(isThreeConnected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
}

}  // TEST_SUITE
