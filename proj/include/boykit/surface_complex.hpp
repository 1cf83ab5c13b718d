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

#ifndef BOYKIT_SURFACE_COMPLEX_HPP_
#define BOYKIT_SURFACE_COMPLEX_HPP_

#include <map>
#include <string>
#include <vector>

#include "boykit/pieces.hpp"

namespace boykit {

struct MeshFace {
  std::array<int, 4> v{-1, -1, -1, -1};
  int n = 3;      // 3 or 4 vertices
  int piece = 0;  // index into SurfaceComplex::piece_names
};

// One tessellated piece before gluing. Boundary arcs are recorded as chains
// of vertex indices in the canonical order of the arc, with positions taken
// verbatim from sample_arc, so that chains glued to each other carry
// bit-identical coordinates.
struct SubMesh {
  std::string piece;
  PieceKind kind = PieceKind::Octagon;
  PlaneId plane = PlaneId::XY;
  std::vector<Vec3> verts;
  std::vector<char> at_infinity;  // empty means none
  std::vector<MeshFace> faces;    // piece field unused here
  std::map<std::string, std::vector<int>> chains;
  std::map<std::string, ArcRole> roles;
};

// Grid meshes for the four piece kinds; n is the number of segments per
// quarter turn (minimum 2). Native interior points, canonical samples on
// every boundary arc.
SubMesh tessellate(const Piece& piece, int n);

struct GluingEntry {
  std::string piece_a, arc_a;
  std::string piece_b, arc_b;
  bool reversed = false;  // b's chain runs opposite to a's
  std::string str() const;
};

struct GluingTable {
  std::vector<GluingEntry> entries;
};

// (piece, arc) key for chains surviving in a glued complex.
struct ChainKey {
  std::string piece, arc;
  auto operator<=>(const ChainKey&) const = default;
  std::string str() const { return piece + "." + arc; }
};

struct CVertex {
  Vec3 pos{};
  bool at_infinity = false;
};

// A maximal stretch of one arc inside a boundary loop, in loop order.
struct ArcRun {
  ChainKey arc;
  bool reversed = false;    // loop direction vs canonical chain order
  std::vector<int> verts;   // includes both endpoints
};

struct BoundaryLoop {
  std::vector<int> verts;    // cyclic; verts[i] -> verts[i+1] are edges
  std::vector<ArcRun> runs;  // partition of the loop into arcs
};

// An abstract surface built by identifying piece boundaries. Identification
// happens only along declared gluings; vertices that merely coincide in
// space keep distinct ids (the surfaces here are immersed, not embedded).
struct SurfaceComplex {
  std::vector<CVertex> verts;
  std::vector<MeshFace> faces;
  std::vector<std::string> piece_names;
  std::map<ChainKey, std::vector<int>> chains;
  std::map<ChainKey, ArcRole> roles;
  std::map<ChainKey, bool> glued;

  int piece_index(const std::string& name) const;
  const std::vector<int>& chain(const std::string& piece,
                                const std::string& arc) const;

  int euler_characteristic() const;
  bool is_closed() const;
  int boundary_component_count() const;
  // Parity propagation across shared edges, over every connected component.
  bool orientable() const;
  // Boundary loops split into arc runs. Loops are ordered by their smallest
  // vertex id and walked from it; the walk direction carries no orientation
  // meaning (the surface may be non-orientable).
  std::vector<BoundaryLoop> trace_boundary_loops() const;
};

// Concatenates the submeshes and identifies the chain pairs listed in the
// table. Throws std::runtime_error naming the offending entry if chain
// lengths differ or glued samples are farther apart than tol.
SurfaceComplex glue(const std::vector<SubMesh>& meshes,
                    const GluingTable& table, double tol);

}  // namespace boykit

#endif  // BOYKIT_SURFACE_COMPLEX_HPP_
