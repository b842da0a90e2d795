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


// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "meissner/analysis.hpp"
#include "meissner/io.hpp"
#include "oracles.hpp"

using namespace meissner;

namespace {

struct Instance {
  std::string name;
  ReuleauxPolygon polygon;
  FarthestPointDiagram diagram;
  ReuleauxPolyhedron phi;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (int n : {3, 5, 7, 9, 11}) {
    std::vector<std::pair<std::string, ReuleauxPolygon>> polys;
    polys.emplace_back("n=" + std::to_string(n) + " regular", makeRegular(n));
    for (int seed = 0; seed < 20; ++seed)
      polys.emplace_back("n=" + std::to_string(n) + " seed " + std::to_string(seed),
                         makeRandom(n, seed));
    for (auto& [name, p] : polys) {
      Instance in{name, p, farthestPointDiagram(p), {}};
      in.phi = buildReuleauxPolyhedron(lift(in.diagram).points);
      out.push_back(std::move(in));
    }
  }
  return out;
}

std::string randomMask(int pairs, std::mt19937_64& rng) {
  const int digits = (pairs + 3) / 4;
  std::string hex;
  for (int d = 0; d < digits; ++d) {
    int bits = std::min(4, pairs - 4 * (digits - 1 - d));
    hex += "0123456789ABCDEF"[rng() % (1u << bits)];
  }
  return "mask:" + hex;
}

int longestPair(const MeissnerSolid& m) {
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

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail,
            double seconds) {
  if (!pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.1f s)\n", pass ? "PASS" : "FAIL", id, title.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <class F>
void criterion(int id, const std::string& title, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" threw: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, pass, title, detail, secs);
}

int cliRun(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

}  // namespace

int main() {
  std::vector<Instance> all;
  try {
    all = instances();
  } catch (const std::exception& e) {
    std::printf("instance generation failed: %s\n", e.what());
    return 1;
  }
  std::vector<MeissnerSolid> bottoms;
  for (const auto& in : all) bottoms.push_back(performSurgery(in.phi, SurgeryChoice{}));

  criterion(1, "tetrahedron from the Reuleaux triangle", [&](std::string& d) {
    LiftResult l = lift(farthestPointDiagram(makeRegular(3)));
    if (l.points.size() != 4 || l.top.size() != 1) return false;
    double apexErr = std::abs(l.top[0].z() - std::sqrt(2.0 / 3.0));
    double edgeErr = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        edgeErr = std::max(edgeErr, std::abs((l.points[i] - l.points[j]).norm() - 1.0));
    ReuleauxPolyhedron phi = buildReuleauxPolyhedron(l.points);
    bool k4 = phi.edgeCount() == 6;
    for (int v = 0; v < 4; ++v) k4 = k4 && phi.neighbors(v).size() == 3;
    d = fmt("apex error %.2e", apexErr) + fmt(", edge length error %.2e", edgeErr) +
        ", edges " + std::to_string(phi.edgeCount());
    return apexErr <= 1e-12 && edgeErr <= 1e-12 && k4;
  });

  criterion(2, "Reuleaux polyhedron structure", [&](std::string& d) {
    int bad = 0;
    for (const auto& in : all) {
      ValidationReport r = checkReuleauxPolyhedron(in.phi);
      const int v = in.phi.vertexCount(), e = in.phi.edgeCount(), f = in.phi.faceCount();
      bool ok = r.pass() && v - e + f == 2 && e == 2 * v - 2 &&
                diameterCount(in.phi.centers) == e;
      for (const char* name : {"involution", "metric_embedding", "euler", "edge_count",
                               "three_connected"}) {
        const ValidationCheck* c = r.find(name);
        ok = ok && c && c->pass;
      }
      if (!ok) {
        ++bad;
        d += " [" + in.name + "]";
      }
    }
    d = std::to_string(all.size() - bad) + "/" + std::to_string(all.size()) +
        " instances pass" + d;
    return bad == 0;
  });

  criterion(3, "constant width after surgery", [&](std::string& d) {
    DirectionSampler sampler;  // 1e5 Fibonacci directions
    std::mt19937_64 rng(2024);
    double lo = 2.0, hi = 0.0, surfaceErr = 0.0;
    int bodies = 0, bad = 0;
    // Cross-check against the support of the assembled surface patches.
    const std::vector<Vec3> probe = oracle::spiral(200);
    for (std::size_t k = 0; k < all.size(); ++k) {
      std::vector<MeissnerSolid> solids{bottoms[k]};
      for (int r = 0; r < 5; ++r)
        solids.push_back(performSurgery(
            all[k].phi, SurgeryChoice::parse(randomMask(bottoms[k].pairs.size(), rng))));
      for (const auto& m : solids) {
        WidthReport w = constantWidthCheck(m, sampler, 1e-9);
        lo = std::min(lo, w.minWidth);
        hi = std::max(hi, w.maxWidth);
        for (const auto& u : probe)
          surfaceErr = std::max(surfaceErr, std::abs(oracle::surfaceWidth(m, u) - 1.0));
        ++bodies;
        if (!w.pass) ++bad;
      }
    }
    // Negative control: the tetrahedron with its longest pair left as it is.
    std::vector<int> sel = bottoms[0].surgered;
    sel[longestPair(bottoms[0])] = -1;
    WidthReport control = constantWidthCheck(assembleSurface(bottoms[0].base, sel), sampler, 1e-9);
    d = std::to_string(bodies - bad) + "/" + std::to_string(bodies) + " bodies" +
        fmt(", width in [1 %+.1e", lo - 1.0) + fmt(", 1 %+.1e]", hi - 1.0) +
        fmt(", surface oracle within %.1e", surfaceErr) +
        fmt("; control max %.6f", control.maxWidth);
    return bad == 0 && surfaceErr <= 1e-9 && !control.pass && control.maxWidth >= 1.0 + 1e-4;
  });

  criterion(4, "ball tetrahedron is not of constant width", [&](std::string& d) {
    const ReuleauxPolyhedron& phi = all[0].phi;
    // Independent oracle: dense samples of every edge arc from its
    // endpoints and dual centers.
    std::vector<Vec3> pts;
    for (const auto& e : phi.edges) {
      const Vec3 a = phi.centers[e.a], b = phi.centers[e.b];
      const Vec3 m = 0.5 * (a + b);
      const Vec3 p0 = phi.centers[e.v0] - m, p1 = phi.centers[e.v1] - m;
      const double r = p0.norm();
      const Vec3 axis = (b - a).normalized();
      double angle = std::atan2(axis.dot(p0.cross(p1)), p0.dot(p1));
      if (angle < 0) angle += 2.0 * M_PI;
      const Vec3 e1 = p0 / r, e2 = axis.cross(e1);
      for (int s = 0; s <= 600; ++s) {
        double t = angle * s / 600.0;
        pts.push_back(m + r * (std::cos(t) * e1 + std::sin(t) * e2));
      }
    }
    double oracle = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        oracle = std::max(oracle, (pts[i] - pts[j]).norm());
    const double exact = std::sqrt(3.0) - std::sqrt(2.0) / 2.0;
    double lib = edgeArcDiameter(phi);
    d = fmt("library %.7f", lib) + fmt(", sampled oracle %.7f", oracle) +
        fmt(", expected %.7f", exact);
    return std::abs(lib - exact) <= 1e-3 && std::abs(oracle - exact) <= 1e-3;
  });

  criterion(5, "half body diameter", [&](std::string& d) {
    int bad = 0, controlsCaught = 0;
    double worst = 0.0;
    for (const auto& in : all) {
      DiameterReport r = halfBodyDiameterCheck(in.diagram, 1000);
      worst = std::max(worst, std::abs(r.maxDistance - 1.0));
      if (!r.pass) {
        ++bad;
        d += " [" + in.name + "]";
      }
      if (!halfBodyDiameterCheck(in.diagram, 1000, 1.01).pass) ++controlsCaught;
    }
    d = std::to_string(all.size() - bad) + "/" + std::to_string(all.size()) +
        fmt(" pass, max |diam - 1| %.1e", worst) + ", scaled controls failing " +
        std::to_string(controlsCaught) + "/" + std::to_string(all.size()) + d;
    return bad == 0 && controlsCaught == static_cast<int>(all.size());
  });

  criterion(6, "volume of the Meissner tetrahedron", [&](std::string& d) {
    const double exact = oracle::meissnerTetrahedronVolume();
    double v6 = volumeAndArea(tessellate(bottoms[0], 6)).volume;
    double v7 = volumeAndArea(tessellate(bottoms[0], 7)).volume;
    double ball = volumeAndArea(tessellateSphere(Vec3::Zero(), 1.0, 7)).volume;
    double e6 = std::abs(v6 - exact), e7 = std::abs(v7 - exact);
    double eb = std::abs(ball - 4.0 * M_PI / 3.0);
    d = fmt("oracle %.7f", exact) + fmt(", level 6 %.7f", v6) + fmt(", level 7 %.7f", v7) +
        fmt(", unit ball error %.1e", eb);
    return std::abs(exact - 0.4198600) < 1e-6 && e6 <= 2e-3 && e7 < e6 && eb <= 1e-3;
  });

  criterion(7, "mesh integrity", [&](std::string& d) {
    int meshes = 0, bad = 0;
    double diam = 0.0, disagreement = 0.0;
    std::vector<Vec3> dirs = oracle::spiral(1000);
    for (std::size_t k = 0; k < all.size(); ++k) {
      const bool fine = k % 21 < 2;  // regular and seed 0 of every n
      TriangleMesh mesh = tessellate(bottoms[k], fine ? 6 : 3);
      ++meshes;
      double vd = vertexDiameter(mesh);
      diam = std::max(diam, vd);
      if (!checkMesh(mesh).pass() || vd > 1.0 + 1e-9) {
        ++bad;
        d += " [" + all[k].name + "]";
      }
      if (fine)
        disagreement = std::max(
            disagreement, meshWidthDisagreement(mesh, skeleton(bottoms[k]), dirs));
    }
    d = std::to_string(meshes - bad) + "/" + std::to_string(meshes) +
        " meshes sound" + fmt(", max vertex diameter 1 + %.1e", diam - 1.0) +
        fmt(", level 6 width disagreement %.1e", disagreement) + d;
    return bad == 0 && disagreement <= 5e-3;
  });

  criterion(8, "z = 0 section matches the polygon", [&](std::string& d) {
    int bad = 0;
    double worst = 0.0;
    for (std::size_t k = 0; k < all.size(); ++k) {
      ValidationCheck c = sliceCheck(bottoms[k], all[k].polygon, 256);
      worst = std::max(worst, c.residual);
      if (!c.pass) {
        ++bad;
        d += " [" + all[k].name + "]";
      }
    }
    d = std::to_string(all.size() - bad) + "/" + std::to_string(all.size()) +
        fmt(" sections match, max radial error %.1e", worst) + d;
    return bad == 0;
  });

  criterion(9, "wedges lie in the ball polyhedron", [&](std::string& d) {
    int bad = 0, wedges = 0;
    double worst = 0.0;
    for (std::size_t k = 0; k < all.size(); ++k) {
      // Independent of the library check: test the sampled points directly.
      for (const auto& w : bottoms[k].wedges) {
        ++wedges;
        double excess = 0.0;
        for (int i = 0; i <= 63; ++i)
          for (int j = 0; j <= 63; ++j) {
            Vec3 p = w.at(i / 63.0, j / 63.0);
            for (const auto& c : all[k].phi.centers)
              excess = std::max(excess, (p - c).norm() - 1.0);
          }
        worst = std::max(worst, excess);
        if (excess > 1e-12) ++bad;
      }
      if (!wedgeContainmentCheck(bottoms[k], 64, 1e-12).pass) ++bad;
    }
    d = std::to_string(wedges) + " wedges" + fmt(", max excess %.1e", worst) +
        ", failures " + std::to_string(bad);
    return bad == 0;
  });

  criterion(10, "deterministic output", [&](std::string& d) {
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "meissner_acceptance";
    fs::remove_all(base);
    std::vector<std::string> texts[2];
    for (int run = 0; run < 2; ++run) {
      fs::path dir = base / std::to_string(run);
      fs::create_directories(dir);
      auto at = [&](const char* f) { return (dir / f).string(); };
      bool ok = cliRun({"gen", "--n", "9", "--kind", "random", "--seed", "11", "-o",
                        at("poly.json")}) == 0 &&
                cliRun({"build", at("poly.json"), "--stage", "diagram", "-o",
                        at("diagram.json")}) == 0 &&
                cliRun({"build", at("poly.json"), "--surgery", "mask:5A3C", "-o",
                        at("body.json")}) == 0 &&
                cliRun({"verify", at("body.json"), "-o", at("report.json")}) == 0 &&
                cliRun({"mesh", at("body.json"), "--level", "4", "-o", at("body.obj")}) == 0;
      if (!ok) {
        d = "pipeline failed in run " + std::to_string(run);
        return false;
      }
      for (const char* f : {"poly.json", "diagram.json", "body.json", "report.json", "body.obj"})
        texts[run].push_back(readFile(at(f)));
    }
    fs::remove_all(base);
    bool same = texts[0] == texts[1];
    std::size_t bytes = 0;
    for (const auto& t : texts[0]) bytes += t.size();
    d = std::to_string(texts[0].size()) + " files, " + std::to_string(bytes) +
        (same ? " bytes, identical" : " bytes, differ");
    return same;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
