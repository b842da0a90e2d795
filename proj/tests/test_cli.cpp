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


#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "meissner/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = meissner::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "meissner_cli_test";
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("end to end") {
  TempDir dir;
  std::string poly = dir / "poly.json", body = dir / "body.json", rep = dir / "report.json";
  CHECK(cli({"gen", "--n", "7", "--kind", "random", "--seed", "42", "-o", poly}).code == 0);
  CHECK(cli({"build", poly, "--surgery", "bottom", "-o", body}).code == 0);
  Result v = cli({"verify", body, "--directions", "20000", "-o", rep});
  CHECK(v.code == 0);
  CHECK(v.err.empty());
  nlohmann::json report = meissner::parseJson(meissner::readFile(rep));
  CHECK(report["pass"] == true);
  CHECK(report["surgery"] == "bottom");
  CHECK(report["width"]["directions"] == 20000);
  for (const auto& c : report["checks"]) CHECK_MESSAGE(c["pass"] == true, c["name"]);
}

TEST_CASE("stages") {
  TempDir dir;
  std::string poly = dir / "poly.json";
  cli({"gen", "--n", "5", "--kind", "regular", "-o", poly});
  Result d = cli({"build", poly, "--stage", "diagram"});
  CHECK(d.code == 0);
  CHECK(d.out.find("\"kind\": \"diagram\"") != std::string::npos);
  std::string solid = dir / "solid.json";
  CHECK(cli({"build", poly, "--stage", "solid", "-o", solid}).code == 0);
  Result s = cli({"surgery", solid, "--surgery", "top"});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"surgery\": \"top\"") != std::string::npos);
  CHECK(cli({"verify", solid}).code == 0);
  CHECK(cli({"verify", poly}).code == 0);
  CHECK(cli({"surgery", poly}).code == 2);
}

TEST_CASE("untouched pair fails verification") {
  TempDir dir;
  std::string poly = dir / "poly.json", body = dir / "body.json", rep = dir / "report.json";
  cli({"gen", "--n", "5", "--kind", "regular", "-o", poly});
  CHECK(cli({"build", poly, "--untouched", "0", "-o", body}).code == 0);
  Result v = cli({"verify", body, "--directions", "5000", "-o", rep});
  CHECK(v.code == 1);
  CHECK(v.err.find("worst direction") != std::string::npos);
  nlohmann::json report = meissner::parseJson(meissner::readFile(rep));
  CHECK(report["pass"] == false);
  CHECK(report["width"]["pass"] == false);
  CHECK(report["width"]["max"].get<double>() > 1.0 + 1e-4);
  CHECK(report["width"]["worstDirection"].size() == 3);
}

TEST_CASE("usage errors") {
  TempDir dir;
  std::string tetra = dir / "tetra.json";
  cli({"gen", "--n", "3", "--kind", "regular", "-o", tetra});
  // The tetrahedron has 3 pairs: one hex digit, bits above 2 unused.
  CHECK(cli({"build", tetra, "--surgery", "mask:FF"}).code == 2);
  CHECK(cli({"build", tetra, "--surgery", "mask:8"}).code == 2);
  CHECK(cli({"build", tetra, "--surgery", "mask:5"}).code == 0);
  CHECK(cli({"build", tetra, "--surgery", "sideways"}).code == 2);
  CHECK(cli({"gen", "--n", "4"}).code == 2);
  CHECK(cli({"gen", "--n", "1"}).code == 2);
  CHECK(cli({"gen", "--bogus"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"verify", dir / "missing.json"}).code == 2);
  std::string broken = dir / "broken.json";
  meissner::writeFile(broken, "{\"n\": 3, ");
  Result r = cli({"verify", broken});
  CHECK(r.code == 2);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("determinism") {
  TempDir dir;
  std::string a = dir / "a.json", b = dir / "b.json";
  cli({"gen", "--n", "9", "--kind", "random", "--seed", "7", "-o", a});
  cli({"gen", "--n", "9", "--kind", "random", "--seed", "7", "-o", b});
  CHECK(meissner::readFile(a) == meissner::readFile(b));
  Result x = cli({"build", a, "--surgery", "mask:1234"});
  Result y = cli({"build", b, "--surgery", "mask:1234"});
  CHECK(x.code == 0);
  CHECK(x.out == y.out);
  Result t1 = cli({"--threads", "1", "verify", a});
  Result t2 = cli({"verify", a});
  CHECK(t1.out == t2.out);
}

TEST_CASE("mesh, info and graph") {
  TempDir dir;
  std::string poly = dir / "poly.json", body = dir / "body.json";
  cli({"gen", "--n", "3", "--kind", "regular", "-o", poly});
  cli({"build", poly, "-o", body});
  std::string obj = dir / "m.obj", stl = dir / "m.stl";
  CHECK(cli({"mesh", body, "--level", "3", "-o", obj}).code == 0);
  CHECK(cli({"mesh", body, "--level", "3", "--format", "stl", "-o", stl}).code == 0);
  CHECK(fs::file_size(stl) == 84 + 50 * meissner::readObj(obj).triangles.size());
  CHECK(cli({"mesh", body}).code == 2);
  CHECK(cli({"mesh", body, "--level", "13", "-o", obj}).code == 2);

  Result info = cli({"info", body, "--level", "4", "--directions", "2000"});
  REQUIRE(info.code == 0);
  nlohmann::json j = meissner::parseJson(info.out);
  CHECK(j["vertices"] == 4);
  CHECK(j["edges"] == 6);
  CHECK(j["euler"] == 2);
  CHECK(j["wedges"] == 3);
  CHECK(j["volume"].get<double>() > 0.4);
  CHECK(j["volume"].get<double>() < 0.43);

  Result g = cli({"graph", body});
  CHECK(g.code == 0);
  CHECK(g.out.rfind("graph G", 0) == 0);
  Result t = cli({"graph", poly});
  CHECK(t.out.rfind("graph V", 0) == 0);
}

}  // TEST_SUITE
