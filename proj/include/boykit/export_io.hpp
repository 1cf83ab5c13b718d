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

#ifndef BOYKIT_EXPORT_IO_HPP_
#define BOYKIT_EXPORT_IO_HPP_

#include <map>
#include <string>
#include <vector>

#include "boykit/assembly.hpp"
#include "boykit/cone_pizza.hpp"
#include "boykit/development.hpp"
#include "boykit/surface_complex.hpp"

namespace boykit {

// ASCII OBJ writer. Every complex vertex gets its own line even when
// positions coincide (the surfaces are immersed, not embedded); faces are
// 1-based; pieces become groups. Coordinates print with %.17g so a reparse
// restores them bit for bit. Vertices at infinity are rejected unless
// clamp_radius >= 0, in which case they are written at clamp_radius times
// their unit direction (a zero direction lands on the origin).
void write_obj(const SurfaceComplex& c, const std::string& path,
               double clamp_radius = -1.0);

struct ParsedObj {
  std::vector<Vec3> verts;
  std::vector<MeshFace> faces;

  // Bare complex (no chains): Euler characteristic, closedness and
  // orientability work; chain-based queries do not.
  SurfaceComplex as_complex() const;
  // Boundary loop count by walking edges with a single adjacent face.
  int boundary_loop_count() const;
};

ParsedObj read_obj(const std::string& path);

// Binary little-endian STL: 80-byte header, triangle count, then one
// 50-byte record per triangle. Quads split along their first diagonal.
void write_stl(const SurfaceComplex& c, const std::string& path,
               double clamp_radius = -1.0);

// --- papercraft kit ---

struct KitPath {
  std::vector<Vec2> pts;  // page millimetres
  bool dotted = false;    // dotted marks slits to cut within a piece
  bool closed = false;
};

struct KitLabel {
  Vec2 pos;
  std::string text;
};

struct KitPage {
  double width = 210.0;  // A4 portrait
  double height = 297.0;
  std::vector<KitPath> paths;
  std::vector<KitLabel> labels;
};

// Page 1 carries the cornered sheet piece with its interior slit lines;
// page 2 carries the six wall strips (each with a mismatch tab on the left
// end) and the three ring-plus-disk pieces with their slit arcs and access
// cuts. One model unit is kKitScale millimetres on both pages, so the
// pieces assemble at a consistent size.
inline constexpr double kKitScale = 26.0;

std::vector<KitPage> kit_layout();

// Writes kit_page1.svg and kit_page2.svg under dir.
void export_kit(const std::string& dir);

// Draws the developed corridor boundary, its seams and wall outlines, plus
// two copies moved by the deck map, into one SVG.
void export_flat_layout(const FlatLayout& layout, const std::string& path);

// --- verification report ---

struct SuiteOptions {
  int resolution = 8;
  double truncation = 10.0;
  double tolerance = 1e-9;
  // Fault injection: flips the orientation of the first band gluing so the
  // glue step fails loudly, for exit-code testing.
  bool tamper_first_seam = false;
};

struct CheckResult {
  std::string name;
  bool pass = false;
};

struct VerificationResults {
  SuiteOptions options;
  std::vector<CheckResult> checks;
  bool all_passed = false;
  std::string first_failure;  // empty when everything passed

  int euler_m = 0, euler_h = 0, euler_boy = 0, euler_msq = 0;
  int loops_m = 0, loops_h = 0, loops_boy = 0, loops_msq = 0;
  bool orientable_m = true, orientable_boy = true, orientable_msq = true;
  Circuit circuit;
  bool circuit_matches = false;
  SymmetryReport symmetry;
  ConeReport cone;
  int planar_slices = 0, conical_slices = 0;
  std::map<std::string, std::string> orthants;  // conical arc -> sign string
  double quadric_residual_max = 0.0;
  GeodesicTotals geodesic;
  double wall_length = 0.0, wall_width = 0.0;
  int cubes = 0, unit_cubes = 0;
  int census_max_faces = 0;
  bool census_edge_adjacent = false;
  bool census_all_touched = false;
};

// Builds every model at the requested resolution and evaluates the whole
// invariant battery. Throws only on structural failures (a gluing that
// cannot close); ordinary check failures land in the results.
VerificationResults run_full_suite(const SuiteOptions& opt);

// Serialized JSON report: two-space indent, keys sorted, no timestamps.
// Reruns with equal options produce byte-identical output.
std::string emit_report(const VerificationResults& results);

// JSON description of the rectilinear model: the 46 side-2 cubes with
// their grouping, the unit cube count, and the face paint map sending each
// unit cube to the band faces on its boundary.
std::string emit_facepaint();

}  // namespace boykit

#endif  // BOYKIT_EXPORT_IO_HPP_
