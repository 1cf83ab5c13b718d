// Copyright 2026 The Boykit Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  std::string cmd =
      std::string(BOYKIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit with code two") {
  CHECK(run("--help") == 0);
  CHECK(run("-n 1 build") == 2);
  CHECK(run("-T 0.5 build") == 2);
  CHECK(run("--no-such-flag build") == 2);
  CHECK(run("") == 2);  // a subcommand is required
}

TEST_CASE("build writes four obj models and repeats byte for byte") {
  fs::path dir = fresh_dir("boykit_cli_build");
  REQUIRE(run("-n 3 --out " + dir.string() + " build") == 0);
  for (const char* f : {"octacross.obj", "h.obj", "m.obj", "boy.obj"})
    CHECK(fs::exists(dir / f));
  CHECK(fs::exists(dir / "boy.stl"));

  std::string m_first = slurp(dir / "m.obj");
  REQUIRE(run("-n 3 --out " + dir.string() + " build") == 0);
  CHECK(slurp(dir / "m.obj") == m_first);
}

TEST_CASE("verify exits zero and writes a deterministic report") {
  fs::path dir = fresh_dir("boykit_cli_verify");
  REQUIRE(run("-n 2 --out " + dir.string() + " verify") == 0);
  std::string first = slurp(dir / "report.json");

  nlohmann::json j = nlohmann::json::parse(first);
  CHECK(j["passed"] == true);
  CHECK(j["euler"]["M"] == 0);
  CHECK(j["rectilinear"]["cubes"] == 46);
  CHECK(j["resolution"] == 2);

  REQUIRE(run("-n 2 --out " + dir.string() + " verify") == 0);
  CHECK(slurp(dir / "report.json") == first);
}

TEST_CASE("an injected seam fault turns verify into exit one") {
  fs::path dir = fresh_dir("boykit_cli_fault");
  CHECK(run("-n 2 --out " + dir.string() + " --inject-seam-fault verify") ==
        1);
}

TEST_CASE("kit writes the two svg pages") {
  fs::path dir = fresh_dir("boykit_cli_kit");
  REQUIRE(run("--out " + dir.string() + " kit") == 0);
  for (const char* f : {"kit_page1.svg", "kit_page2.svg"}) {
    std::string svg = slurp(dir / f);
    CHECK(svg.find("<svg") != std::string::npos);
  }
}

TEST_CASE("rect writes the integer model and its face paint") {
  fs::path dir = fresh_dir("boykit_cli_rect");
  REQUIRE(run("--out " + dir.string() + " rect") == 0);
  CHECK(fs::exists(dir / "m_square.obj"));
  nlohmann::json j = nlohmann::json::parse(slurp(dir / "facepaint.json"));
  CHECK(j["unit_cubes"] == 368);
}

TEST_CASE("report adds the development drawing to verify") {
  fs::path dir = fresh_dir("boykit_cli_report");
  REQUIRE(run("-n 2 --out " + dir.string() + " report") == 0);
  CHECK(fs::exists(dir / "report.json"));
  std::string svg = slurp(dir / "corridor_copies.svg");
  CHECK(svg.find("<svg") != std::string::npos);
}
