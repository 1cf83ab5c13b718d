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

// End-to-end acceptance battery. Each criterion prints one line; the
// process exits nonzero if any fail. Plain main on purpose: this is the
// artifact's outward-facing contract, not a unit test.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boykit/assembly.hpp"
#include "boykit/cone_pizza.hpp"
#include "boykit/development.hpp"
#include "boykit/export_io.hpp"
#include "boykit/octa_graph.hpp"
#include "boykit/pieces.hpp"
#include "boykit/rectilinear.hpp"

using namespace boykit;

namespace {

constexpr double kPi = std::numbers::pi;

bool circuit_criterion() {
  Circuit walk = expand_circuit();
  if (walk.steps.size() != 18) return false;
  for (size_t i = 0; i < walk.steps.size(); ++i) {
    StepKind here = walk.steps[i].kind;
    StepKind next = walk.steps[(i + 1) % walk.steps.size()].kind;
    if (here == next) return false;  // roads and lanes must alternate
  }

  SurfaceComplex m = build_M(4, 1e-9);
  Circuit traced = boundary_circuit(m);
  if (!circuits_equivalent(walk, traced)) return false;

  // The planar lane of the XY crossbridge must pair the two roads whose
  // labels are (+,+,0) and (-,-,0), and the traced circuit must cross it
  // between exactly those two roads.
  bool pairing_ok = false;
  for (const LanePair& p : canonical_lane_pairing()) {
    if (p.plane != PlaneId::XY || p.lane != LaneId::Planar) continue;
    std::set<std::string> roads{p.road_a.str(), p.road_b.str()};
    pairing_ok = roads == std::set<std::string>{"++0", "--0"};
  }
  if (!pairing_ok) return false;

  size_t n = traced.steps.size();
  for (size_t i = 0; i < n; ++i) {
    const CircuitStep& s = traced.steps[i];
    if (s.kind != StepKind::Lane || s.plane != PlaneId::XY ||
        s.lane != LaneId::Planar)
      continue;
    const CircuitStep& before = traced.steps[(i + n - 1) % n];
    const CircuitStep& after = traced.steps[(i + 1) % n];
    std::set<std::string> flank{before.label.str(), after.label.str()};
    return flank == std::set<std::string>{"++0", "--0"};
  }
  return false;
}

bool moebius_criterion() {
  for (int n : {2, 4, 8, 16}) {
    SurfaceComplex m = build_M(n, 1e-9);
    if (m.euler_characteristic() != 0) return false;
    if (m.boundary_component_count() != 1) return false;
    if (m.orientable()) return false;

    SurfaceComplex h = build_H(n, 1e-9);
    if (h.euler_characteristic() != -3) return false;
    auto loops = h.trace_boundary_loops();
    if (loops.size() != 4) return false;
    int two_run = 0, long_run = 0;
    for (const BoundaryLoop& loop : loops) {
      if (loop.runs.size() == 2) ++two_run;
      if (loop.runs.size() == 18) ++long_run;
    }
    if (two_run != 3 || long_run != 1) return false;
  }
  return true;
}

bool symmetry_criterion() {
  SurfaceComplex m = build_M(8, 1e-9);
  SymmetryReport rep = check_symmetry(m, 1e-9);
  return rep.group_size == 6 && rep.vertices_match && rep.faces_match &&
         rep.max_vertex_distance <= 1e-9 && !rep.contains_point_reflection;
}

bool cone_criterion() {
  double prev = -1;
  for (int n : {8, 16, 32}) {
    ConeReport rep = cone_friendliness(build_M(n, 1e-9), 1e-9);
    if (!rep.friendly || rep.min_clearance <= 0 || rep.runs != 18)
      return false;
    if (prev > 0 && std::abs(rep.min_clearance - prev) > 0.1 * prev)
      return false;
    prev = rep.min_clearance;
  }
  return true;
}

bool projective_plane_criterion() {
  for (double t : {2.0, 10.0, 100.0}) {
    SurfaceComplex boy = build_boys_surface(4, t, 1e-9);
    if (boy.euler_characteristic() != 1) return false;
    if (!boy.is_closed()) return false;
    if (boy.boundary_component_count() != 0) return false;
    if (boy.orientable()) return false;
    SymmetryReport rep = check_symmetry(boy, 1e-9);
    if (rep.group_size != 6 || !rep.vertices_match || !rep.faces_match)
      return false;
  }
  return true;
}

bool slices_criterion() {
  SurfaceComplex m = build_M(8, 1e-9);
  auto slices = classify_slices(m);
  int planar = 0, conical = 0;
  std::set<std::string> orthants;
  std::string xy_upper;
  for (const SliceInfo& s : slices) {
    if (s.kind == SliceKind::Planar) {
      ++planar;
      continue;
    }
    ++conical;
    std::string signs;
    for (int c : s.signs) signs += c > 0 ? '+' : (c < 0 ? '-' : '0');
    orthants.insert(signs);
    if (s.arc.str() == "B_XY.rim+") xy_upper = signs;
    QuadricFit fit = fit_slice_quadric(m, s);
    if (fit.residual_rms >= 1e-6) return false;
  }
  return planar == 12 && conical == 6 && orthants.size() == 6 &&
         xy_upper == "+-+";
}

bool geodesic_criterion() {
  FlatLayout coarse = develop_corridor(64);
  FlatLayout fine = develop_corridor(128);
  double err64 = std::abs(total_geodesic_curvature(coarse).absolute - 9 * kPi);
  double err128 = std::abs(total_geodesic_curvature(fine).absolute - 9 * kPi);
  if (err64 > 0.01) return false;
  if (err128 > err64 + 1e-12) return false;

  for (const auto& rect : coarse.wall_rects) {
    double a = (rect[1] - rect[0]).norm();
    double b = (rect[2] - rect[1]).norm();
    double c = (rect[3] - rect[2]).norm();
    double d = (rect[0] - rect[3]).norm();
    if (std::abs(a - c) > 1e-9 || std::abs(b - d) > 1e-9) return false;
    double lo = std::min(a, b), hi = std::max(a, b);
    if (std::abs(hi - 1.5 * kPi) > 1e-9 || std::abs(lo - 2.0 / 3.0) > 1e-9)
      return false;
  }
  return coarse.wall_rects.size() == 6;
}

bool rectilinear_criterion() {
  auto cubes = build_omega();
  if (cubes.size() != 46) return false;
  int core_arm = 0, chain = 0, disk = 0;
  for (const RectCube& c : cubes) {
    if (c.group == "core" || c.group == "arm") ++core_arm;
    if (c.group == "chain") ++chain;
    if (c.group == "disk") ++disk;
  }
  if (core_arm != 7 || chain != 27 || disk != 12) return false;

  // The three slabs intersect in exactly the eight unit cubes of [-1,1]^3.
  auto in_slab = [](PlaneId p, const std::array<int, 3>& unit_min) {
    int u = unit_min[u_axis(p)];
    int v = unit_min[v_axis(p)];
    int h = unit_min[out_of_plane_axis(p)];
    return u >= -1 && u <= 6 && v >= -7 && v <= 0 && h >= -1 && h <= 0;
  };
  for (int x = -9; x < 9; ++x) {
    for (int y = -9; y < 9; ++y) {
      for (int z = -9; z < 9; ++z) {
        std::array<int, 3> c{x, y, z};
        int slabs = 0;
        for (PlaneId p : kPlanes)
          if (in_slab(p, c)) ++slabs;
        bool in_box = x >= -1 && x <= 0 && y >= -1 && y <= 0 && z >= -1 &&
                      z <= 0;
        if ((slabs == 3) != in_box) return false;
      }
    }
  }
  if (count_unit_cubes() != 368) return false;

  SurfaceComplex msq = build_m_square();
  if (msq.euler_characteristic() != 0) return false;
  if (msq.orientable()) return false;
  auto loops = msq.trace_boundary_loops();
  if (loops.size() != 1) return false;
  std::set<std::array<long, 3>> positions;
  for (int v : loops[0].verts) {
    const Vec3& p = msq.verts[v].pos;
    positions.insert({std::lround(p.x), std::lround(p.y), std::lround(p.z)});
  }
  if (positions.size() != loops[0].verts.size()) return false;
  if (!boundary_on_solid_surface(msq)) return false;

  FacePaint paint = paint_faces(msq);
  if (paint.faces_of_cube.size() != 368) return false;
  if (!paint.faces_edge_adjacent) return false;
  for (const auto& [cube, faces] : paint.faces_of_cube)
    if (faces.empty() || faces.size() > 3) return false;
  return true;
}

struct Invariants {
  size_t verts, faces;
  int euler, loops;
  bool orientable;
};

bool reparse_matches(const SurfaceComplex& sc, const std::string& path,
                     double clamp) {
  write_obj(sc, path, clamp);
  ParsedObj parsed = read_obj(path);
  if (parsed.verts.size() != sc.verts.size()) return false;
  if (parsed.faces.size() != sc.faces.size()) return false;
  SurfaceComplex back = parsed.as_complex();
  // Equal vertex/face counts and equal Euler characteristic pin the edge
  // count too.
  if (back.euler_characteristic() != sc.euler_characteristic()) return false;
  if (back.orientable() != sc.orientable()) return false;
  return parsed.boundary_loop_count() == sc.boundary_component_count();
}

bool io_criterion() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "boykit_acceptance";
  fs::create_directories(dir);

  std::vector<SubMesh> meshes;
  for (const Piece& piece : make_octacross())
    meshes.push_back(tessellate(piece, 4));
  SurfaceComplex octacross = glue(meshes, GluingTable{}, 1e-9);
  if (!reparse_matches(octacross, (dir / "octacross.obj").string(), -1))
    return false;
  if (!reparse_matches(build_H(4, 1e-9), (dir / "h.obj").string(), -1))
    return false;
  if (!reparse_matches(build_M(4, 1e-9), (dir / "m.obj").string(), -1))
    return false;
  if (!reparse_matches(build_boys_surface(4, 10.0, 1e-9),
                       (dir / "boy.obj").string(), 10.0))
    return false;
  if (!reparse_matches(build_m_square(), (dir / "m_square.obj").string(), -1))
    return false;

  auto pages = kit_layout();
  if (pages.size() != 2) return false;
  int strip_bodies = 0;
  const double want = (1.5 * kPi) / (2.0 / 3.0);
  for (const KitPath& p : pages[1].paths) {
    if (!p.closed || p.dotted || p.pts.size() != 4) continue;
    double a = (p.pts[1] - p.pts[0]).norm();
    double b = (p.pts[2] - p.pts[1]).norm();
    if (std::abs(std::max(a, b) / std::min(a, b) - want) < 1e-6)
      ++strip_bodies;
  }
  if (strip_bodies != 6) return false;

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string cmd = std::string(BOYKIT_CLI_PATH) + " -n 2 --out " +
                    (dir / "cli").string() + " verify >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1 || WEXITSTATUS(status) != 0) return false;
  std::string first = slurp(dir / "cli" / "report.json");
  status = std::system(cmd.c_str());
  if (status == -1 || WEXITSTATUS(status) != 0) return false;
  return !first.empty() && first == slurp(dir / "cli" / "report.json");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool()> check;
  };
  const std::vector<Criterion> criteria{
      {"criterion 1: boundary circuit and lane pairing", circuit_criterion},
      {"criterion 2: Moebius band and head invariants", moebius_criterion},
      {"criterion 3: exact order-six symmetry", symmetry_criterion},
      {"criterion 4: cone-friendly boundary", cone_criterion},
      {"criterion 5: coned surface is a projective plane",
       projective_plane_criterion},
      {"criterion 6: planar and conical slices", slices_criterion},
      {"criterion 7: developed turning is nine pi", geodesic_criterion},
      {"criterion 8: rectilinear integer model", rectilinear_criterion},
      {"criterion 9: exports re-parse and verify is deterministic",
       io_criterion},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = false;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "%s threw: %s\n", c.name, e.what());
    }
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", c.name);
    if (!ok) ++failures;
  }
  return failures;
}
