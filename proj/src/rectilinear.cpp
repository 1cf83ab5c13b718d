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

#include "boykit/rectilinear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace boykit {

namespace {

// Slab extents in plane-local coordinates: u in [-1,7], v in [-7,1],
// h in [-1,1]. The slab of plane p is the 8x8x2 box embed(p, u, v, h).
constexpr int kUMin = -1, kUMax = 7;
constexpr int kVMin = -7, kVMax = 1;

std::string sheet_name(PlaneId p) { return std::string("S_") + plane_name(p); }
std::string wall_name(PlaneId p) { return std::string("W_") + plane_name(p); }

// The wall footprint: the perimeter of the middle block [0,6]x[-6,0] with
// the two unit segments at the near-origin corner removed, walked from
// (1,0) to (0,-1). The missing corner is where the band crosses itself in
// the smooth picture, so the wall must stay clear of the sheet edge there.
std::vector<std::array<int, 2>> wall_path() {
  std::vector<std::array<int, 2>> pts;
  for (int u = 1; u <= 6; ++u) pts.push_back({u, 0});
  for (int v = -1; v >= -6; --v) pts.push_back({6, v});
  for (int u = 5; u >= 0; --u) pts.push_back({u, -6});
  for (int v = -5; v <= -1; ++v) pts.push_back({0, v});
  return pts;  // 23 points, 22 unit segments
}

SubMesh rect_sheet(PlaneId p) {
  SubMesh m;
  m.piece = sheet_name(p);
  m.kind = PieceKind::Octagon;
  m.plane = p;
  auto id = [](int a, int b) { return a * 9 + b; };
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      m.verts.push_back(embed(p, kUMin + a, kVMin + b, 0));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      m.faces.push_back(
          {{id(a, b), id(a + 1, b), id(a + 1, b + 1), id(a, b + 1)}, 4, 0});

  // Seams sit on the two boundary edges flanking the corner (-1,1), two
  // unit edges each, listed with ascending parameter.
  std::vector<int> seam_u, seam_v;
  for (int t = -1; t <= 1; ++t) seam_u.push_back(id(0, t - kVMin));
  for (int t = -1; t <= 1; ++t) seam_v.push_back(id(t - kUMin, 8));
  // The free boundary: the rest of the perimeter, from the end of seam:v+1
  // at (1,1) around the far corners to the end of seam:u-1 at (-1,-1).
  std::vector<int> border;
  for (int a = 2; a <= 8; ++a) border.push_back(id(a, 8));
  for (int b = 7; b >= 0; --b) border.push_back(id(8, b));
  for (int a = 7; a >= 0; --a) border.push_back(id(a, 0));
  for (int b = 1; b <= 6; ++b) border.push_back(id(0, b));

  m.chains["seam:u-1"] = seam_u;
  m.chains["seam:v+1"] = seam_v;
  m.chains["border"] = border;
  m.roles["seam:u-1"] = ArcRole::Edge;
  m.roles["seam:v+1"] = ArcRole::Edge;
  m.roles["border"] = ArcRole::Road;
  return m;
}

SubMesh rect_wall(PlaneId q) {
  SubMesh m;
  m.piece = wall_name(q);
  m.kind = PieceKind::Wall;
  m.plane = q;
  const auto path = wall_path();
  const int cols = static_cast<int>(path.size());
  auto id = [cols](int row, int k) { return row * cols + k; };
  for (int row = 0; row <= 2; ++row)
    for (int k = 0; k < cols; ++k)
      m.verts.push_back(embed(q, path[k][0], path[k][1], row - 1));
  for (int row = 0; row < 2; ++row)
    for (int k = 0; k + 1 < cols; ++k)
      m.faces.push_back({{id(row, k), id(row, k + 1), id(row + 1, k + 1),
                          id(row + 1, k)},
                         4,
                         0});

  std::vector<int> rim_lo, rim_hi, chop_u, chop_v;
  for (int k = 0; k < cols; ++k) {
    rim_lo.push_back(id(0, k));
    rim_hi.push_back(id(2, k));
  }
  for (int row = 0; row <= 2; ++row) {
    chop_u.push_back(id(row, 0));
    chop_v.push_back(id(row, cols - 1));
  }
  m.chains["rim-"] = rim_lo;
  m.chains["rim+"] = rim_hi;
  m.chains["chop:u"] = chop_u;
  m.chains["chop:v"] = chop_v;
  m.roles["rim-"] = ArcRole::Lane;
  m.roles["rim+"] = ArcRole::Lane;
  m.roles["chop:u"] = ArcRole::Edge;
  m.roles["chop:v"] = ArcRole::Edge;
  return m;
}

GluingTable rect_gluing_table() {
  GluingTable t;
  for (PlaneId p : kPlanes) {
    t.entries.push_back(
        {sheet_name(p), "seam:u-1", wall_name(rho_next(p)), "chop:v", false});
    t.entries.push_back(
        {sheet_name(p), "seam:v+1", wall_name(rho_prev(p)), "chop:u", false});
  }
  return t;
}

std::array<int, 3> ipos(const Vec3& p) {
  std::array<int, 3> r{};
  for (int c = 0; c < 3; ++c) {
    double v = p[c];
    long n = std::lround(v);
    if (v != static_cast<double>(n))
      throw std::runtime_error("non-integer coordinate in integer band");
    r[c] = static_cast<int>(n);
  }
  return r;
}

// Axis whose coordinate is constant across the quad; unit quads have
// exactly one.
int face_normal_axis(const SurfaceComplex& msq, const MeshFace& f) {
  for (int c = 0; c < 3; ++c) {
    bool same = true;
    for (int i = 1; i < f.n; ++i)
      same = same && msq.verts[f.v[i]].pos[c] == msq.verts[f.v[0]].pos[c];
    if (same) return c;
  }
  throw std::runtime_error("face is not axis-aligned");
}

}  // namespace

std::vector<RectCube> build_omega() {
  std::vector<RectCube> cubes;
  cubes.push_back({{-1, -1, -1}, "core", PlaneId::XY});
  for (PlaneId p : kPlanes) {
    // The slab as a 4x4 grid of side-2 cells; cell (0,0) is the shared core.
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (a == 0 && b == 0) continue;
        std::array<int, 3> min{};
        min[u_axis(p)] = -1 + 2 * a;
        min[v_axis(p)] = -1 - 2 * b;
        min[out_of_plane_axis(p)] = -1;
        std::string group;
        if ((a == 1 && b == 0) || (a == 0 && b == 1))
          group = "arm";
        else if (a >= 1 && a <= 2 && b >= 1 && b <= 2)
          group = "disk";
        else
          group = "chain";
        cubes.push_back({min, group, p});
      }
    }
  }
  return cubes;
}

bool cube_in_omega(const std::array<int, 3>& unit_min) {
  for (PlaneId p : kPlanes) {
    int u = unit_min[u_axis(p)];
    int v = unit_min[v_axis(p)];
    int h = unit_min[out_of_plane_axis(p)];
    if (u >= kUMin && u < kUMax && v >= kVMin && v < kVMax && h >= -1 && h < 1)
      return true;
  }
  return false;
}

int count_unit_cubes() {
  int count = 0;
  for (int i = -7; i < 7; ++i)
    for (int j = -7; j < 7; ++j)
      for (int k = -7; k < 7; ++k)
        if (cube_in_omega({i, j, k})) ++count;
  return count;
}

SurfaceComplex build_m_square() {
  std::vector<SubMesh> meshes;
  for (PlaneId p : kPlanes) meshes.push_back(rect_sheet(p));
  for (PlaneId p : kPlanes) meshes.push_back(rect_wall(p));
  return glue(meshes, rect_gluing_table(), 1e-9);
}

FacePaint paint_faces(const SurfaceComplex& msq) {
  FacePaint fp;
  fp.cubes_of_face.resize(msq.faces.size());
  std::vector<int> normals(msq.faces.size());
  for (size_t f = 0; f < msq.faces.size(); ++f) {
    const MeshFace& face = msq.faces[f];
    int normal = face_normal_axis(msq, face);
    normals[f] = normal;
    std::array<int, 3> lo = ipos(msq.verts[face.v[0]].pos);
    for (int i = 1; i < face.n; ++i) {
      auto q = ipos(msq.verts[face.v[i]].pos);
      for (int c = 0; c < 3; ++c) lo[c] = std::min(lo[c], q[c]);
    }
    for (int side = 0; side < 2; ++side) {
      std::array<int, 3> cube = lo;
      cube[normal] = lo[normal] - 1 + side;
      if (cube_in_omega(cube)) {
        fp.cubes_of_face[f].push_back(cube);
        fp.faces_of_cube[cube].push_back(static_cast<int>(f));
      }
    }
  }
  fp.faces_edge_adjacent = true;
  for (const auto& [cube, faces] : fp.faces_of_cube) {
    fp.max_faces_per_cube =
        std::max(fp.max_faces_per_cube, static_cast<int>(faces.size()));
    for (size_t i = 0; i < faces.size(); ++i)
      for (size_t j = i + 1; j < faces.size(); ++j)
        if (normals[faces[i]] == normals[faces[j]])
          fp.faces_edge_adjacent = false;
  }
  return fp;
}

bool boundary_on_solid_surface(const SurfaceComplex& msq) {
  for (const auto& loop : msq.trace_boundary_loops()) {
    const int nv = static_cast<int>(loop.verts.size());
    for (int i = 0; i < nv; ++i) {
      auto a = ipos(msq.verts[loop.verts[i]].pos);
      auto b = ipos(msq.verts[loop.verts[(i + 1) % nv]].pos);
      int axis = -1;
      for (int c = 0; c < 3; ++c)
        if (a[c] != b[c]) axis = c;
      std::array<int, 3> lo{};
      for (int c = 0; c < 3; ++c) lo[c] = std::min(a[c], b[c]);
      // The edge lies on the solid surface iff one of the four unit faces
      // through it separates an inside cube from an outside one.
      bool on = false;
      for (int perp = 0; perp < 3 && !on; ++perp) {
        if (perp == axis) continue;
        int other = 3 - axis - perp;
        for (int side = 0; side < 2 && !on; ++side) {
          std::array<int, 3> inner = lo;
          inner[perp] = lo[perp] - 1 + side;
          std::array<int, 3> outer = inner;
          inner[other] = lo[other] - 1;
          outer[other] = lo[other];
          if (cube_in_omega(inner) != cube_in_omega(outer)) on = true;
        }
      }
      if (!on) return false;
    }
  }
  return true;
}

}  // namespace boykit
