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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "boykit/pieces.hpp"

using namespace boykit;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("octagon arcs have the frozen endpoints") {
  Piece o = make_octagon(PlaneId::XY);
  CHECK(o.arcs.size() == 8);

  CHECK(o.arc("road:++").start == Vec3{kThird, 1, 0});
  CHECK(o.arc("road:++").end == Vec3{1, kThird, 0});
  CHECK(o.arc("road:-+").start == Vec3{-1, kThird, 0});
  CHECK(o.arc("road:-+").end == Vec3{-kThird, 1, 0});
  CHECK(o.arc("road:--").start == Vec3{-kThird, -1, 0});
  CHECK(o.arc("road:--").end == Vec3{-1, -kThird, 0});
  CHECK(o.arc("road:+-").start == Vec3{1, -kThird, 0});
  CHECK(o.arc("road:+-").end == Vec3{kThird, -1, 0});

  CHECK(o.arc("edge:u+1").start == Vec3{1, -kThird, 0});
  CHECK(o.arc("edge:u+1").end == Vec3{1, kThird, 0});
  CHECK(o.arc("edge:v+1").start == Vec3{-kThird, 1, 0});
  CHECK(o.arc("edge:v+1").end == Vec3{kThird, 1, 0});

  // Straight sides have length 2/3 and the roads are quarter turns of
  // radius 2/3.
  for (const BoundaryArc& a : o.arcs) {
    if (a.is_segment) {
      CHECK((a.end - a.start).norm() == doctest::Approx(kTwoThirds));
    } else {
      CHECK(a.radius == kTwoThirds);
      CHECK(std::abs(a.theta1 - a.theta0) == doctest::Approx(kPi / 2));
    }
  }
}

TEST_CASE("other planes are exact images of the XY octagon under the "
          "coordinate shift") {
  Piece xy = make_octagon(PlaneId::XY);
  Piece zx = make_octagon(PlaneId::ZX);
  Piece yz = make_octagon(PlaneId::YZ);
  for (size_t i = 0; i < xy.arcs.size(); ++i) {
    // rho(x,y,z) = (y,z,x), applied literally to the stored endpoints.
    const Vec3 s = xy.arcs[i].start;
    CHECK(zx.arcs[i].start == Vec3{s.y, s.z, s.x});
    CHECK(yz.arcs[i].start == Vec3{s.z, s.x, s.y});
  }
}

TEST_CASE("arc sampling hits exact endpoints and stays on the circle") {
  Piece o = make_octagon(PlaneId::ZX);
  const BoundaryArc& road = o.arc("road:++");
  auto pts = sample_arc(road, 7);
  REQUIRE(pts.size() == 8);
  CHECK(pts.front() == road.start);
  CHECK(pts.back() == road.end);
  for (const Vec3& p : pts) {
    // Distance from the embedded circle axis; ZX local (u,v) = (z,x).
    Vec2 uv{p.z, p.x};
    CHECK(std::abs((uv - road.center).norm() - road.radius) < 1e-15);
    CHECK(p.y == 0.0);
  }

  auto [a, b] = make_crossbridge(PlaneId::ZX);
  CHECK(sample_arc(a.arc("inner"), 4).size() == 13);  // three-quarter arc
  CHECK(sample_arc(a.arc("chop:u"), 4).size() == 5);
  CHECK(sample_arc(b.arc("rim+"), 4).size() == 13);
  CHECK_THROWS_AS(sample_arc(road, 1), std::invalid_argument);
}

TEST_CASE("glued arcs sample bit-identically") {
  const int n = 5;
  for (PlaneId plane : kPlanes) {
    Piece o = make_octagon(plane);
    auto [a, b] = make_crossbridge(plane);
    Piece d = make_disk(plane);

    CHECK(sample_arc(o.arc("edge:u+1"), n) == sample_arc(a.arc("chop:u"), n));
    CHECK(sample_arc(o.arc("edge:v-1"), n) == sample_arc(a.arc("chop:v"), n));
    CHECK(sample_arc(o.arc("road:+-"), n) == sample_arc(d.arc("road"), n));
    CHECK(sample_arc(a.arc("inner"), n) == sample_arc(d.arc("bridge"), n));

    // Seams between an octagon side and the wall chop of a neighbouring
    // crossbridge: different planes, same embedded segment. The wall in
    // plane p meets the next plane's octagon at chop:u and the previous
    // plane's octagon at chop:v.
    Piece o_next = make_octagon(rho_next(plane));
    Piece o_prev = make_octagon(rho_prev(plane));
    CHECK(sample_arc(o_next.arc("edge:v+1"), n) ==
          sample_arc(b.arc("chop:u"), n));
    CHECK(sample_arc(o_prev.arc("edge:u-1"), n) ==
          sample_arc(b.arc("chop:v"), n));
  }
}

TEST_CASE("seam segments sit where the planes meet") {
  auto [a_yz, b_yz] = make_crossbridge(PlaneId::YZ);
  CHECK(b_yz.arc("chop:u").start == Vec3{-kThird, 1, 0});
  CHECK(b_yz.arc("chop:u").end == Vec3{kThird, 1, 0});
  auto [a_zx, b_zx] = make_crossbridge(PlaneId::ZX);
  CHECK(b_zx.arc("chop:v").start == Vec3{-1, -kThird, 0});
  CHECK(b_zx.arc("chop:v").end == Vec3{-1, kThird, 0});
}

TEST_CASE("disk rim is one full circle with uniform spacing") {
  Piece d = make_disk(PlaneId::XY);
  const int n = 6;
  auto bridge = sample_arc(d.arc("bridge"), n);
  auto road = sample_arc(d.arc("road"), n);
  CHECK(bridge.back() == road.front());
  CHECK(road.back() == bridge.front());

  std::vector<Vec3> rim(bridge.begin(), bridge.end() - 1);
  rim.insert(rim.end(), road.begin(), road.end() - 1);
  CHECK(rim.size() == 4 * n);
  double chord = (rim[1] - rim[0]).norm();
  for (size_t i = 0; i < rim.size(); ++i) {
    double d_i = (rim[(i + 1) % rim.size()] - rim[i]).norm();
    CHECK(d_i == doctest::Approx(chord).epsilon(1e-12));
  }
  // Uniform spacing pi/(2n) along a circle of radius 2/3.
  CHECK(chord == doctest::Approx(2 * kTwoThirds * std::sin(kPi / (4 * n))));
}

TEST_CASE("annulus and wall cross along the radius-1 circle") {
  for (PlaneId plane : kPlanes) {
    auto [a, b] = make_crossbridge(plane);
    for (const Vec3& p : cross_points(plane, 24)) {
      int uax = u_axis(plane), vax = v_axis(plane), hax = out_of_plane_axis(plane);
      Vec2 uv{p[uax], p[vax]};
      CHECK(piece_contains(a, uv, p[hax], 1e-12));
      CHECK(piece_contains(b, uv, p[hax], 1e-12));
    }
  }
}

TEST_CASE("patch containment matches the analytic description") {
  Piece o = make_octagon(PlaneId::XY);
  CHECK(piece_contains(o, {0, 0}, 0, 1e-12));
  CHECK(piece_contains(o, {1, 0}, 0, 1e-12));
  CHECK_FALSE(piece_contains(o, {0.9, -0.9}, 0, 1e-12));  // inside corner disk
  CHECK_FALSE(piece_contains(o, {0, 0}, 0.1, 1e-12));

  auto [a, b] = make_crossbridge(PlaneId::XY);
  CHECK(piece_contains(a, {1, 0}, 0, 1e-12));       // r = 1, theta = pi/2
  CHECK_FALSE(piece_contains(a, {2.5, -1}, 0, 1e-12));  // beyond outer rim
  CHECK_FALSE(piece_contains(a, {0.5, -0.5}, 0, 1e-12));  // missing quadrant
  CHECK(piece_contains(b, {1, 0}, 0.2, 1e-12));
  CHECK_FALSE(piece_contains(b, {1, 0}, 0.5, 1e-12));

  Piece d = make_disk(PlaneId::XY);
  CHECK(piece_contains(d, {1, -1}, 0, 1e-12));
  CHECK_FALSE(piece_contains(d, {0, 0}, 0, 1e-12));
}

TEST_CASE("the three-octagon cross carries twelve roads and twelve edges") {
  auto cross = make_octacross();
  REQUIRE(cross.size() == 3);
  int roads = 0, edges = 0;
  for (const auto& piece : cross) {
    CHECK(piece.kind == PieceKind::Octagon);
    for (const auto& arc : piece.arcs) {
      if (arc.role == ArcRole::Road) ++roads;
      if (arc.role == ArcRole::Edge) ++edges;
    }
  }
  CHECK(roads == 12);
  CHECK(edges == 12);
  CHECK(cross[0].plane != cross[1].plane);
  CHECK(cross[1].plane != cross[2].plane);
}
