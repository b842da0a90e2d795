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

#include <cmath>
#include <optional>

#include "doctest.h"
#include "meissner/analysis.hpp"

namespace fixtures {

using namespace meissner;

inline ReuleauxPolyhedron liftedPhi(const ReuleauxPolygon& p) {
  return buildReuleauxPolyhedron(lift(farthestPointDiagram(p)).points);
}

inline ReuleauxPolyhedron tetrahedron() { return liftedPhi(makeRegular(3)); }

inline MeissnerSolid bottom(const ReuleauxPolygon& p) {
  return performSurgery(liftedPhi(p), SurgeryChoice{});
}

/// Index of the dual pair with the largest total arc length.
inline int longestPair(const MeissnerSolid& m) {
  int best = 0;
  double bestLength = -1.0;
  for (int k = 0; k < static_cast<int>(m.pairs.size()); ++k) {
    double len = m.base.edges[m.pairs[k].edgeA].arc.length() +
                 m.base.edges[m.pairs[k].edgeB].arc.length();
    if (len > bestLength) {
      bestLength = len;
      best = k;
    }
  }
  return best;
}

inline MeissnerSolid withUntouched(const MeissnerSolid& m, int pair) {
  std::vector<int> selection = m.surgered;
  selection[pair] = -1;
  return assembleSurface(m.base, selection);
}

/// Code of the Error thrown by f, or nothing.
template <class F>
std::optional<ErrorCode> errorOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline ValidationCheck require(const ValidationReport& r, const char* name) {
  const ValidationCheck* c = r.find(name);
  return c ? *c : ValidationCheck{name, false, 0.0, "missing"};
}

}  // namespace fixtures

namespace doctest {

template <>
struct StringMaker<meissner::ErrorCode> {
  static String convert(meissner::ErrorCode code) {
    return String(std::string(meissner::errorName(code)).c_str());
  }
};

template <>
struct StringMaker<std::optional<meissner::ErrorCode>> {
  static String convert(const std::optional<meissner::ErrorCode>& code) {
    return code ? StringMaker<meissner::ErrorCode>::convert(*code) : String("no error");
  }
};

}  // namespace doctest
