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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "boykit/assembly.hpp"
#include "boykit/cone_pizza.hpp"
#include "boykit/development.hpp"
#include "boykit/export_io.hpp"
#include "boykit/pieces.hpp"
#include "boykit/rectilinear.hpp"

namespace {

struct RunConfig {
  int resolution = 8;
  double truncation = 10.0;
  double tolerance = 1e-9;
  std::string out = "./out";
  bool inject_seam_fault = false;
};

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

int cmd_build(const RunConfig& cfg) {
  using namespace boykit;
  std::vector<SubMesh> meshes;
  for (const Piece& piece : make_octacross())
    meshes.push_back(tessellate(piece, cfg.resolution));
  write_obj(glue(meshes, GluingTable{}, cfg.tolerance),
            cfg.out + "/octacross.obj");
  write_obj(build_H(cfg.resolution, cfg.tolerance), cfg.out + "/h.obj");
  SurfaceComplex m = build_M(cfg.resolution, cfg.tolerance);
  write_obj(m, cfg.out + "/m.obj");
  SurfaceComplex boy =
      build_boys_surface(cfg.resolution, cfg.truncation, cfg.tolerance);
  write_obj(boy, cfg.out + "/boy.obj", cfg.truncation);
  write_stl(boy, cfg.out + "/boy.stl", cfg.truncation);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  using namespace boykit;
  SuiteOptions opt;
  opt.resolution = cfg.resolution;
  opt.truncation = cfg.truncation;
  opt.tolerance = cfg.tolerance;
  opt.tamper_first_seam = cfg.inject_seam_fault;
  VerificationResults results = run_full_suite(opt);
  write_text(cfg.out + "/report.json", emit_report(results));
  if (!results.all_passed) {
    std::fprintf(stderr, "verification failed: %s\n",
                 results.first_failure.c_str());
    return 1;
  }
  return 0;
}

int cmd_kit(const RunConfig& cfg) {
  boykit::export_kit(cfg.out);
  return 0;
}

int cmd_rect(const RunConfig& cfg) {
  using namespace boykit;
  write_obj(build_m_square(), cfg.out + "/m_square.obj");
  write_text(cfg.out + "/facepaint.json", emit_facepaint());
  return 0;
}

int cmd_report(const RunConfig& cfg) {
  using namespace boykit;
  int rc = cmd_verify(cfg);
  export_flat_layout(develop_corridor(cfg.resolution),
                     cfg.out + "/corridor_copies.svg");
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Boy's surface construction kit"};
  app.add_option("-n,--resolution", cfg.resolution,
                 "segments per boundary arc")
      ->default_val(8)
      ->check(CLI::Range(2, 1024));
  app.add_option("-T,--truncation", cfg.truncation,
                 "clamp radius for the cone apex")
      ->default_val(10.0);
  app.add_option("--out", cfg.out, "output directory")->default_val("./out");
  app.add_option("--tolerance", cfg.tolerance, "gluing tolerance")
      ->default_val(1e-9);
  app.add_flag("--inject-seam-fault", cfg.inject_seam_fault)->group("");
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "write OBJ/STL models");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  auto* kit = app.add_subcommand("kit", "write the papercraft SVG pages");
  auto* rect = app.add_subcommand("rect", "write the integer-cube model");
  auto* report =
      app.add_subcommand("report", "verify plus the development drawing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cfg.truncation <= 1.0) {
    std::fprintf(stderr, "--truncation must be greater than 1\n");
    return 2;
  }

  try {
    std::filesystem::create_directories(cfg.out);
    if (build->parsed()) return cmd_build(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (kit->parsed()) return cmd_kit(cfg);
    if (rect->parsed()) return cmd_rect(cfg);
    if (report->parsed()) return cmd_report(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
