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

#include "boykit/pieces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boykit {

namespace {

constexpr double kPi = std::numbers::pi;
// The crossbridge corner of the square, shared by annulus, wall and disk.
constexpr Vec2 kCorner{1.0, -1.0};

BoundaryArc circle_arc(std::string name, ArcRole role, PlaneId plane,
                       Vec2 center, double radius, double theta0,
                       double theta1, double offset, Vec2 local_start,
                       Vec2 local_end) {
  BoundaryArc arc;
  arc.name = std::move(name);
  arc.role = role;
  arc.plane = plane;
  arc.is_segment = false;
  arc.center = center;
  arc.radius = radius;
  arc.theta0 = theta0;
  arc.theta1 = theta1;
  arc.offset = offset;
  arc.start = embed(plane, local_start, offset);
  arc.end = embed(plane, local_end, offset);
  return arc;
}

BoundaryArc segment_arc(std::string name, ArcRole role, PlaneId plane,
                        Vec2 uv_a, double h_a, Vec2 uv_b, double h_b) {
  BoundaryArc arc;
  arc.name = std::move(name);
  arc.role = role;
  arc.plane = plane;
  arc.is_segment = true;
  arc.start = embed(plane, uv_a, h_a);
  arc.end = embed(plane, uv_b, h_b);
  return arc;
}

}  // namespace

int BoundaryArc::segments_for(int n) const {
  if (n < 2) throw std::invalid_argument("resolution must be at least 2");
  if (is_segment) return n;
  int quarters =
      static_cast<int>(std::lround(std::abs(theta1 - theta0) / (kPi / 2)));
  return quarters * n;
}

std::vector<Vec3> sample_arc(const BoundaryArc& arc, int n) {
  int m = arc.segments_for(n);
  std::vector<Vec3> pts(m + 1);
  pts[0] = arc.start;
  pts[m] = arc.end;
  for (int k = 1; k < m; ++k) {
    double t = static_cast<double>(k) / m;
    if (arc.is_segment) {
      pts[k] = {std::lerp(arc.start.x, arc.end.x, t),
                std::lerp(arc.start.y, arc.end.y, t),
                std::lerp(arc.start.z, arc.end.z, t)};
    } else {
      double theta = std::lerp(arc.theta0, arc.theta1, t);
      Vec2 uv = arc.center + Vec2{arc.radius * std::cos(theta),
                                  arc.radius * std::sin(theta)};
      pts[k] = embed(arc.plane, uv, arc.offset);
    }
  }
  return pts;
}

const BoundaryArc& Piece::arc(const std::string& arc_name) const {
  for (const BoundaryArc& a : arcs) {
    if (a.name == arc_name) return a;
  }
  throw std::invalid_argument("piece " + name + " has no arc " + arc_name);
}

Piece make_octagon(PlaneId plane) {
  Piece p{PieceKind::Octagon, plane, std::string("O_") + plane_name(plane),
          {}};
  // Quarter arcs around the four corners, named by the corner signs.
  p.arcs.push_back(circle_arc("road:++", ArcRole::Road, plane, {1, 1},
                              kTwoThirds, kPi, 1.5 * kPi, 0.0, {kThird, 1},
                              {1, kThird}));
  p.arcs.push_back(circle_arc("road:-+", ArcRole::Road, plane, {-1, 1},
                              kTwoThirds, -0.5 * kPi, 0.0, 0.0, {-1, kThird},
                              {-kThird, 1}));
  p.arcs.push_back(circle_arc("road:--", ArcRole::Road, plane, {-1, -1},
                              kTwoThirds, 0.0, 0.5 * kPi, 0.0, {-kThird, -1},
                              {-1, -kThird}));
  p.arcs.push_back(circle_arc("road:+-", ArcRole::Road, plane, {1, -1},
                              kTwoThirds, 0.5 * kPi, kPi, 0.0, {1, -kThird},
                              {kThird, -1}));
  // The straight middle thirds of the square sides.
  p.arcs.push_back(segment_arc("edge:u+1", ArcRole::Edge, plane, {1, -kThird},
                               0.0, {1, kThird}, 0.0));
  p.arcs.push_back(segment_arc("edge:u-1", ArcRole::Edge, plane, {-1, -kThird},
                               0.0, {-1, kThird}, 0.0));
  p.arcs.push_back(segment_arc("edge:v+1", ArcRole::Edge, plane, {-kThird, 1},
                               0.0, {kThird, 1}, 0.0));
  p.arcs.push_back(segment_arc("edge:v-1", ArcRole::Edge, plane, {-kThird, -1},
                               0.0, {kThird, -1}, 0.0));
  return p;
}

std::vector<Piece> make_octacross() {
  std::vector<Piece> out;
  for (PlaneId p : kPlanes) out.push_back(make_octagon(p));
  return out;
}

std::pair<Piece, Piece> make_crossbridge(PlaneId plane) {
  Piece a{PieceKind::Annulus, plane, std::string("A_") + plane_name(plane),
          {}};
  a.arcs.push_back(circle_arc("inner", ArcRole::Bridge, plane, kCorner,
                              kTwoThirds, -kPi, 0.5 * kPi, 0.0, {kThird, -1},
                              {1, -kThird}));
  a.arcs.push_back(circle_arc("outer", ArcRole::Lane, plane, kCorner,
                              kFourThirds, -kPi, 0.5 * kPi, 0.0, {-kThird, -1},
                              {1, kThird}));
  // The chops reuse the octagon side constants verbatim: chop:u matches
  // edge:u+1 and chop:v matches edge:v-1.
  a.arcs.push_back(segment_arc("chop:u", ArcRole::Edge, plane, {1, -kThird},
                               0.0, {1, kThird}, 0.0));
  a.arcs.push_back(segment_arc("chop:v", ArcRole::Edge, plane, {-kThird, -1},
                               0.0, {kThird, -1}, 0.0));

  Piece b{PieceKind::Wall, plane, std::string("B_") + plane_name(plane), {}};
  b.arcs.push_back(circle_arc("rim-", ArcRole::Lane, plane, kCorner, 1.0, -kPi,
                              0.5 * kPi, -kThird, {0, -1}, {1, 0}));
  b.arcs.push_back(circle_arc("rim+", ArcRole::Lane, plane, kCorner, 1.0, -kPi,
                              0.5 * kPi, kThird, {0, -1}, {1, 0}));
  // Vertical seams at the wall ends, ordered along increasing height.
  b.arcs.push_back(segment_arc("chop:u", ArcRole::Edge, plane, {1, 0}, -kThird,
                               {1, 0}, kThird));
  b.arcs.push_back(segment_arc("chop:v", ArcRole::Edge, plane, {0, -1},
                               -kThird, {0, -1}, kThird));
  return {a, b};
}

Piece make_disk(PlaneId plane) {
  Piece d{PieceKind::Disk, plane, std::string("D_") + plane_name(plane), {}};
  // Same circle as the annulus inner arc and the octagon road:+-, so the
  // glued chains coincide sample by sample.
  d.arcs.push_back(circle_arc("bridge", ArcRole::Bridge, plane, kCorner,
                              kTwoThirds, -kPi, 0.5 * kPi, 0.0, {kThird, -1},
                              {1, -kThird}));
  d.arcs.push_back(circle_arc("road", ArcRole::Road, plane, kCorner,
                              kTwoThirds, 0.5 * kPi, kPi, 0.0, {1, -kThird},
                              {kThird, -1}));
  return d;
}

std::vector<Piece> make_all_pieces() {
  std::vector<Piece> pieces;
  for (PlaneId plane : kPlanes) {
    pieces.push_back(make_octagon(plane));
    auto [a, b] = make_crossbridge(plane);
    pieces.push_back(a);
    pieces.push_back(b);
    pieces.push_back(make_disk(plane));
  }
  return pieces;
}

std::vector<Vec3> cross_points(PlaneId plane, int m) {
  std::vector<Vec3> pts;
  pts.reserve(m + 1);
  for (int k = 0; k <= m; ++k) {
    double theta = std::lerp(-kPi, 0.5 * kPi, static_cast<double>(k) / m);
    Vec2 uv = kCorner + Vec2{std::cos(theta), std::sin(theta)};
    pts.push_back(embed(plane, uv, 0.0));
  }
  return pts;
}

namespace {

// True if theta (in (-pi, pi]) lies in the wrapped range [-pi, pi/2].
bool in_corner_range(double theta, double tol) {
  return theta <= 0.5 * kPi + tol || theta >= kPi - tol;
}

}  // namespace

bool piece_contains(const Piece& piece, Vec2 uv, double h, double tol) {
  Vec2 rel = uv - kCorner;
  double r = rel.norm();
  double theta = std::atan2(rel.v, rel.u);
  switch (piece.kind) {
    case PieceKind::Octagon: {
      if (std::abs(h) > tol) return false;
      if (std::abs(uv.u) > 1 + tol || std::abs(uv.v) > 1 + tol) return false;
      for (double cu : {-1.0, 1.0}) {
        for (double cv : {-1.0, 1.0}) {
          if ((uv - Vec2{cu, cv}).norm() < kTwoThirds - tol) return false;
        }
      }
      return true;
    }
    case PieceKind::Annulus:
      return std::abs(h) <= tol && r >= kTwoThirds - tol &&
             r <= kFourThirds + tol && in_corner_range(theta, tol);
    case PieceKind::Wall:
      return std::abs(r - 1.0) <= tol && std::abs(h) <= kThird + tol &&
             in_corner_range(theta, tol);
    case PieceKind::Disk:
      return std::abs(h) <= tol && r <= kTwoThirds + tol;
  }
  return false;
}

}  // namespace boykit
