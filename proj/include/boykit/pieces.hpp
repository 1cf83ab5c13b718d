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

#ifndef BOYKIT_PIECES_HPP_
#define BOYKIT_PIECES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "boykit/vec.hpp"

namespace boykit {

// All pieces are built on a 2x2 square with corner circles of radius 2/3;
// the wall circle has radius 1 and the room (outer annulus) radius 4/3.
inline constexpr double kThird = 1.0 / 3.0;
inline constexpr double kTwoThirds = 2.0 / 3.0;
inline constexpr double kFourThirds = 4.0 / 3.0;

enum class ArcRole {
  Road,    // quarter arcs of radius 2/3 around the square corners
  Bridge,  // the three-quarter arc where a disk caps an annulus
  Edge,    // straight pieces: octagon sides and chop seams
  Lane,    // free boundary left by a crossing: annulus outer rim, wall rims
};

// One boundary arc of a piece. Arcs are either circle arcs at constant
// height over their plane, or straight segments between the stored 3D
// endpoints. The endpoints are exact constants: every gluing in the model
// identifies two arcs whose samples must agree bit for bit, and that only
// works if both sides evaluate the same formula on the same constants.
struct BoundaryArc {
  std::string name;
  ArcRole role = ArcRole::Edge;
  PlaneId plane = PlaneId::XY;
  bool is_segment = false;

  // Circle form, in plane-local (u, v) at height `offset`.
  Vec2 center{};
  double radius = 0.0;
  double theta0 = 0.0, theta1 = 0.0;
  double offset = 0.0;

  Vec3 start{}, end{};

  // Segments per quarter turn is the resolution unit: quarter arcs and
  // straight edges get n segments, three-quarter arcs 3n.
  int segments_for(int n) const;
  double turn_angle() const { return is_segment ? 0.0 : theta1 - theta0; }
};

// m+1 points, m = arc.segments_for(n). Endpoints are returned verbatim;
// interior points of circle arcs are center + r*(cos, sin) at angles
// lerp(theta0, theta1, k/m), interior points of segments are component-wise
// lerps of the endpoints. Throws std::invalid_argument for n < 2.
std::vector<Vec3> sample_arc(const BoundaryArc& arc, int n);

enum class PieceKind { Octagon, Annulus, Wall, Disk };

struct Piece {
  PieceKind kind;
  PlaneId plane;
  std::string name;  // "O_XY", "A_XY", "B_XY", "D_XY", ...
  std::vector<BoundaryArc> arcs;

  const BoundaryArc& arc(const std::string& arc_name) const;
};

// The square [-1,1]^2 with the four corner disks of radius 2/3 removed.
// Roads are the quarter arcs, edges the remaining straight sides.
Piece make_octagon(PlaneId plane);

// The three octagon pieces, one per coordinate plane. Their straight sides
// cross pairwise at the six unit points but are not glued to each other.
std::vector<Piece> make_octacross();

// The crossing assembly at the square corner (1,-1): a flat three-quarter
// annulus (radii 2/3..4/3) and the vertical wall over the radius-1 circle
// (heights -1/3..1/3). The two pieces cross in space along the radius-1
// circle at height 0 but are not glued there.
std::pair<Piece, Piece> make_crossbridge(PlaneId plane);

// The disk of radius 2/3 at the corner (1,-1) that caps an annulus.
Piece make_disk(PlaneId plane);

// All twelve pieces: octagon, annulus, wall, disk per plane.
std::vector<Piece> make_all_pieces();

// Points of the radius-1, height-0 circle where the annulus and the wall of
// one crossbridge pass through each other.
std::vector<Vec3> cross_points(PlaneId plane, int m);

// Containment test against the analytic patch, used to verify that crossing
// points genuinely lie on both pieces.
bool piece_contains(const Piece& piece, Vec2 uv, double h, double tol);

}  // namespace boykit

#endif  // BOYKIT_PIECES_HPP_
