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
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"

using namespace meissner;
using fixtures::errorOf;

namespace {

double maxDistance(const ReuleauxPolygon& p, const Vec2& q) {
  double d = 0.0;
  for (const auto& v : p.vertices) d = std::max(d, (v - q).norm());
  return d;
}

Vec2 dir(double a) { return {std::cos(a), std::sin(a)}; }

}  // namespace

TEST_SUITE("reuleaux2d") {

TEST_CASE("regular triangle") {
  ReuleauxPolygon p = makeRegular(3);
  CHECK(p.n() == 3);
  CHECK(p.vertices[0].norm() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(std::abs(p.vertices[0].y()) < 1e-15);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(std::abs((p.vertices[i] - p.vertices[j]).norm() - 1.0) < 1e-15);
  CHECK(validate(p).pass());
  CHECK(hullArea(p) == doctest::Approx(std::sqrt(3.0) / 4));
}

TEST_CASE("regular pentagon") {
  ReuleauxPolygon p = makeRegular(5);
  double R = 1.0 / (2.0 * std::cos(kPi / 10));
  CHECK(R == doctest::Approx(0.5257311).epsilon(1e-7));
  for (const auto& v : p.vertices) CHECK(std::abs(v.norm() - R) < 1e-15);
  int unit = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (std::abs((p.vertices[i] - p.vertices[j]).norm() - 1.0) < 1e-12) ++unit;
  CHECK(unit == 5);
  ValidationReport r = validate(p);
  CHECK(r.pass());
  CHECK(fixtures::require(r, "width").residual < 1e-9);
}

TEST_CASE("parity guard") {
  CHECK(errorOf([] { makeRegular(4); }) == ErrorCode::EvenOrTooSmallN);
  CHECK(errorOf([] { makeRegular(1); }) == ErrorCode::EvenOrTooSmallN);
  CHECK(errorOf([] { makeRandom(6, 0); }) == ErrorCode::EvenOrTooSmallN);
}

TEST_CASE("validation failures are reported") {
  ReuleauxPolygon big = makeRegular(5);
  for (auto& v : big.vertices) v *= 1.1;
  ValidationReport r = validate(big);
  CHECK_FALSE(r.pass());
  ValidationCheck w = fixtures::require(r, "width");
  CHECK_FALSE(w.pass);
  CHECK(w.residual == doctest::Approx(0.1).epsilon(1e-6));

  ReuleauxPolygon square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  ValidationReport s = validate(square);
  CHECK_FALSE(s.pass());
  CHECK_FALSE(fixtures::require(s, "parity").pass);
  CHECK(s.find("no_such_check") == nullptr);
}

TEST_CASE("random polygons are valid, canonical and seeded") {
  for (int n : {3, 5, 7, 9, 11, 21}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      ReuleauxPolygon p = makeRandom(n, seed);
      INFO("n=" << n << " seed=" << seed);
      REQUIRE(p.n() == n);
      CHECK(validate(p).pass());
      CHECK(p.vertices[0].norm() == 0.0);
      bool axis = std::any_of(p.vertices.begin(), p.vertices.end(),
                              [](const Vec2& v) { return (v - Vec2(1, 0)).norm() < 1e-12; });
      CHECK(axis);
      std::vector<double> a = arcAngles(p);
      CHECK(std::accumulate(a.begin(), a.end(), 0.0) == doctest::Approx(kPi).epsilon(1e-12));
      CHECK(*std::min_element(a.begin(), a.end()) >= minArcAngle(n) - 1e-12);
    }
  }
  ReuleauxPolygon a = makeRandom(7, 0), b = makeRandom(7, 0), c = makeRandom(7, 1);
  CHECK(a.vertices == b.vertices);
  CHECK(a.vertices != c.vertices);
}

TEST_CASE("random triangles are the Reuleaux triangle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ReuleauxPolygon p = makeRandom(3, seed);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs((p.vertices[i] - p.vertices[(i + 1) % 3]).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("diameters form a star cycle") {
  for (int n : {3, 5, 7, 9, 11, 21}) {
    for (const ReuleauxPolygon& p : {makeRegular(n), makeRandom(n, 5)}) {
      auto pairs = diameterPairs(p);
      CHECK(static_cast<int>(pairs.size()) == n);
      std::vector<int> degree(n, 0);
      for (auto [i, j] : pairs) {
        ++degree[i];
        ++degree[j];
        int gap = (j - i + n) % n;
        CHECK((gap == (n - 1) / 2 || gap == (n + 1) / 2));
      }
      CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }));
    }
  }
}

TEST_CASE("support widths") {
  ReuleauxPolygon tri = makeRegular(3);
  CHECK(support2D(tri, {1, 0}) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(support2D(tri, {0, 1}) + support2D(tri, {0, -1}) == doctest::Approx(1.0).epsilon(1e-12));
  for (const ReuleauxPolygon& p : {makeRandom(5, 42), makeRandom(11, 3), makeRegular(9)})
    for (int k = 0; k < 360; ++k) {
      Vec2 u = dir(kTwoPi * (k + 0.37) / 360);
      CHECK(std::abs(support2D(p, u) + support2D(p, -u) - 1.0) < 1e-9);
    }
}

TEST_CASE("radial boundary points lie on the boundary") {
  for (const ReuleauxPolygon& p : {makeRegular(5), makeRandom(7, 0)}) {
    Vec2 o = centroid(p);
    for (int k = 0; k < 100; ++k) {
      Vec2 b = radialBoundaryPoint(p, o, kTwoPi * k / 100);
      CHECK(std::abs(maxDistance(p, b) - 1.0) < 1e-12);
      Vec2 d = (b - o).normalized();
      CHECK(std::abs(d.x() - std::cos(kTwoPi * k / 100)) < 1e-12);
    }
  }
}

}  // TEST_SUITE
