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

#ifndef BOYKIT_DEVELOPMENT_HPP_
#define BOYKIT_DEVELOPMENT_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "boykit/vec.hpp"

namespace boykit {

// Planar isometry x -> R x + t with R orthogonal (rotation or reflection).
struct Isom2 {
  double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Vec2 t{};

  Vec2 apply(Vec2 p) const {
    return {m00 * p.u + m01 * p.v + t.u, m10 * p.u + m11 * p.v + t.v};
  }
  Vec2 apply_dir(Vec2 d) const {
    return {m00 * d.u + m01 * d.v, m10 * d.u + m11 * d.v};
  }
  double det() const { return m00 * m11 - m01 * m10; }
  Isom2 compose(const Isom2& o) const;  // this after o
  Isom2 inverse() const;
};

// One stop of the corridor walk: a whole planar sheet (octagon + annulus +
// disk of one plane) or one wall, placed rigidly in the drawing plane.
struct DevVisit {
  std::string piece;    // "M_XY", "B_ZX", ...
  std::string segment;  // "long", "short", "rim-", "rim+"
  Isom2 place;          // chart coordinates -> drawing plane
};

// One boundary arc developed into the drawing plane, in walk order.
struct DevArc {
  std::string piece;
  std::string arc;        // "road:++", "outer", "rim-", ...
  bool reversed = false;  // walked against the arc's canonical direction
  std::vector<Vec2> pts;
  Vec2 tan_start{}, tan_end{};  // analytic travel tangents, placed
  double turn = 0.0;            // measured signed turning of this arc
};

struct FlatLayout {
  std::vector<DevVisit> visits;  // 12: each sheet and wall appears twice
  std::vector<DevArc> arcs;      // 18 boundary arcs
  std::vector<double> corner_turns;     // 18 junction angles (all ~0)
  std::vector<std::pair<Vec2, Vec2>> seams;  // placed cut segments
  std::vector<std::array<Vec2, 4>> wall_rects;  // placed wall outlines
  Isom2 deck;     // advances the walk by half a cycle; a glide reflection
  Isom2 closure;  // full cycle, equals deck twice: a pure translation
  double wall_length = 0.0;  // 3*pi/2
  double wall_width = 0.0;   // 2/3
};

// Unrolls the cyclic corridor of three sheets and three walls into the
// plane, following the band boundary. Consecutive charts are chained by the
// unique isometry matching their shared seam with interiors on opposite
// sides; reflections do occur (the corridor is a Moebius band). Throws if
// the chain fails to close up.
FlatLayout develop_corridor(int n);

struct GeodesicTotals {
  double absolute = 0.0;      // sum of |arc turn| + |corner turn|
  double signed_total = 0.0;  // net turning; zero for a flat band boundary
};

// Turning numbers of the developed boundary. Arc turning is measured from
// the polyline with analytic tangent corrections at both ends, so the
// result is exact up to roundoff rather than O(1/n).
GeodesicTotals total_geodesic_curvature(const FlatLayout& layout);

}  // namespace boykit

#endif  // BOYKIT_DEVELOPMENT_HPP_
