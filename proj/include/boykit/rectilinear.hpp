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

#ifndef BOYKIT_RECTILINEAR_HPP_
#define BOYKIT_RECTILINEAR_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "boykit/surface_complex.hpp"

namespace boykit {

// One side-2 cube of the rectilinear solid, named by its role: the central
// "core" cube, an "arm" of the six-cube cross around it, a "chain" cell of
// a slab's outer ring, or a "disk" cell of a slab's 2x2 middle block.
struct RectCube {
  std::array<int, 3> min{};  // lattice min corner; the cube spans min+2
  std::string group;
  PlaneId plane = PlaneId::XY;  // owning slab; the core has no owner
};

// The rectilinear solid: three 8x8x2 slabs, one per coordinate plane,
// overlapping in the central 2-cube. Tiled by 46 disjoint side-2 cubes:
// core 1, arms 6, chains 3x9, disks 3x4.
std::vector<RectCube> build_omega();

// Whether the unit lattice cube with this min corner lies in the solid.
bool cube_in_omega(const std::array<int, 3>& unit_min);

// Unit cubes in the solid: 3*128 - 3*8 + 8 = 368.
int count_unit_cubes();

// The integer band: three 8x8 sheets at height zero plus three walls, each
// a two-row strip over a 22-segment lattice path around a slab's middle
// block, glued sheet-to-wall along six seams of two unit edges. All vertex
// coordinates are integers, so every identity below is exact.
SurfaceComplex build_m_square();

// Assignment of band faces to the unit cubes whose boundary carries them.
struct FacePaint {
  // face index -> unit cubes (by min corner) it is painted on
  std::vector<std::vector<std::array<int, 3>>> cubes_of_face;
  std::map<std::array<int, 3>, std::vector<int>> faces_of_cube;
  int max_faces_per_cube = 0;
  // Within every cube the painted faces are pairwise edge-adjacent (their
  // normals differ), so the band never runs through opposite cube faces.
  bool faces_edge_adjacent = false;
};

FacePaint paint_faces(const SurfaceComplex& msq);

// Every boundary edge of the band lies on the outer surface of the solid.
bool boundary_on_solid_surface(const SurfaceComplex& msq);

}  // namespace boykit

#endif  // BOYKIT_RECTILINEAR_HPP_
