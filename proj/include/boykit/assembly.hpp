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

#ifndef BOYKIT_ASSEMBLY_HPP_
#define BOYKIT_ASSEMBLY_HPP_

#include <string>
#include <vector>

#include "boykit/octa_graph.hpp"
#include "boykit/surface_complex.hpp"

namespace boykit {

// The 18 identifications that close the twelve pieces into the band M:
// per plane, octagon <-> annulus along both chops, octagon road and annulus
// inner arc capped by the disk, and the two cross-plane seams where the
// wall chops land on neighbouring octagon sides. The annulus and the wall
// of one crossbridge are never glued to each other; they cross in space.
GluingTable m_gluing_table();

// Same without the disk caps: 12 entries over 9 pieces.
GluingTable h_gluing_table();

SurfaceComplex build_M(int n, double tol = 1e-9);
SurfaceComplex build_H(int n, double tol = 1e-9);

// Reads the single boundary loop of M back as a combinatorial circuit:
// road runs become road steps, rim and outer runs become lane crossings of
// the matched edge in their plane. Throws if the complex does not have
// exactly one boundary loop of alternating road and lane runs.
Circuit boundary_circuit(const SurfaceComplex& m);

// Cyclic order in which the flat corridor chains octagon sheets and walls.
std::vector<std::string> corridor_order();

struct SymmetryReport {
  int group_size = 0;
  bool vertices_match = false;        // position multiset preserved
  bool faces_match = false;           // face multiset preserved
  double max_vertex_distance = 0.0;   // worst image-to-cluster distance
  bool contains_point_reflection = false;
};

// Verifies that every element of the symmetry group permutes the vertex
// position multiset and the face multiset of the complex, to within tol.
// Face cycles are compared up to rotation and reflection: half the group
// reverses the local orientation of the pieces it permutes.
SymmetryReport check_symmetry(const SurfaceComplex& sc, double tol);

}  // namespace boykit

#endif  // BOYKIT_ASSEMBLY_HPP_
