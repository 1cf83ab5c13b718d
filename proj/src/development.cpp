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

#include "boykit/development.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boykit/pieces.hpp"

namespace boykit {

Isom2 Isom2::compose(const Isom2& o) const {
  Isom2 r;
  r.m00 = m00 * o.m00 + m01 * o.m10;
  r.m01 = m00 * o.m01 + m01 * o.m11;
  r.m10 = m10 * o.m00 + m11 * o.m10;
  r.m11 = m10 * o.m01 + m11 * o.m11;
  Vec2 ot = apply_dir(o.t);
  r.t = {ot.u + t.u, ot.v + t.v};
  return r;
}

Isom2 Isom2::inverse() const {
  // The linear part is orthogonal, so its inverse is its transpose.
  Isom2 r;
  r.m00 = m00;
  r.m01 = m10;
  r.m10 = m01;
  r.m11 = m11;
  Vec2 bt = r.apply_dir(t);
  r.t = {-bt.u, -bt.v};
  return r;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWallLen = 1.5 * kPi;  // radius-1 circle, three quarters

double signed_angle(Vec2 a, Vec2 b) {
  return std::atan2(a.u * b.v - a.v * b.u, a.u * b.u + a.v * b.v);
}

double side_of(Vec2 a, Vec2 b, Vec2 x) {
  return (b.u - a.u) * (x.v - a.v) - (b.v - a.v) * (x.u - a.u);
}

// The rigid map sending segment (af, bf) onto (at, bt). Two isometries do
// this; `reflect` selects the orientation-reversing one.
Isom2 rigid_from_segment(Vec2 af, Vec2 bf, Vec2 at, Vec2 bt, bool reflect) {
  double angf = std::atan2(bf.v - af.v, bf.u - af.u);
  double angt = std::atan2(bt.v - at.v, bt.u - at.u);
  Isom2 g;
  if (!reflect) {
    double c = std::cos(angt - angf), s = std::sin(angt - angf);
    g.m00 = c;
    g.m01 = -s;
    g.m10 = s;
    g.m11 = c;
  } else {
    // Reflecting about the axis at half the angle sum maps direction angf
    // to direction angt.
    double c = std::cos(angt + angf), s = std::sin(angt + angf);
    g.m00 = c;
    g.m01 = s;
    g.m10 = s;
    g.m11 = -c;
  }
  Vec2 ra = g.apply_dir(af);
  g.t = {at.u - ra.u, at.v - ra.v};
  return g;
}

// Seam data for one chart-to-chart transition: the shared segment in each
// chart's coordinates plus an interior witness point on each side.
struct Seam {
  Vec2 a_cur, b_cur, w_cur;
  Vec2 a_next, b_next, w_next;
};

Isom2 chain(const Isom2& cur, const Seam& s, std::pair<Vec2, Vec2>* placed) {
  Vec2 at = cur.apply(s.a_cur);
  Vec2 bt = cur.apply(s.b_cur);
  *placed = {at, bt};
  double cur_side = side_of(at, bt, cur.apply(s.w_cur));
  for (bool reflect : {false, true}) {
    Isom2 g = rigid_from_segment(s.a_next, s.b_next, at, bt, reflect);
    if (side_of(at, bt, g.apply(s.w_next)) * cur_side < 0) return g;
  }
  throw std::runtime_error("develop_corridor: chart placement failed");
}

Vec2 circle_tangent(double theta, bool reversed) {
  double s = reversed ? -1.0 : 1.0;
  return {-s * std::sin(theta), s * std::cos(theta)};
}

// Measures the signed turning of the placed polyline: tangent-to-chord at
// the start, chord-to-chord inside, chord-to-tangent at the end. For a
// rigidly placed circle arc this telescopes to the exact swept angle, so
// the result does not degrade with resolution. The sign is normalized to
// the inward convention: positive when the arc turns toward the surface
// interior, which makes the signed total obey the flat Gauss-Bonnet count.
void finish_arc(DevArc* arc, Vec2 interior) {
  const auto& p = arc->pts;
  Vec2 prev = arc->tan_start;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Vec2 chord{p[i + 1].u - p[i].u, p[i + 1].v - p[i].v};
    total += signed_angle(prev, chord);
    prev = chord;
  }
  total += signed_angle(prev, arc->tan_end);
  std::size_t m = p.size() / 2;
  if (m + 1 >= p.size()) m = p.size() - 2;
  Vec2 travel{p[m + 1].u - p[m].u, p[m + 1].v - p[m].v};
  double side = travel.u * (interior.v - p[m].v) - travel.v * (interior.u - p[m].u);
  arc->turn = side < 0 ? -total : total;
}

DevArc develop_sheet_arc(const Piece& piece, const std::string& arc_name,
                         bool reversed, const Isom2& place, int n) {
  const BoundaryArc& arc = piece.arc(arc_name);
  std::vector<Vec3> pts3 = sample_arc(arc, n);
  int ua = u_axis(arc.plane), va = v_axis(arc.plane);
  std::vector<Vec2> uv(pts3.size());
  for (std::size_t i = 0; i < pts3.size(); ++i) {
    uv[i] = {pts3[i][ua], pts3[i][va]};
  }
  if (reversed) std::reverse(uv.begin(), uv.end());

  DevArc out;
  out.piece = piece.name;
  out.arc = arc_name;
  out.reversed = reversed;
  out.pts.reserve(uv.size());
  for (Vec2 q : uv) out.pts.push_back(place.apply(q));
  double th_start = reversed ? arc.theta1 : arc.theta0;
  double th_end = reversed ? arc.theta0 : arc.theta1;
  out.tan_start = place.apply_dir(circle_tangent(th_start, reversed));
  out.tan_end = place.apply_dir(circle_tangent(th_end, reversed));

  // Roads bound the octagon from a removed corner disk, so the sheet body
  // lies radially outward; the annulus body lies inside its outer rim.
  double th_mid = 0.5 * (arc.theta0 + arc.theta1);
  double wr = arc.role == ArcRole::Road ? arc.radius + 0.1 : arc.radius - 0.1;
  Vec2 wit{arc.center.u + wr * std::cos(th_mid),
           arc.center.v + wr * std::sin(th_mid)};
  finish_arc(&out, place.apply(wit));
  return out;
}

DevArc develop_rim(const Piece& wall, const std::string& rim_name,
                   const Isom2& place, int n) {
  const BoundaryArc& arc = wall.arc(rim_name);
  int m = arc.segments_for(n);
  DevArc out;
  out.piece = wall.name;
  out.arc = rim_name;
  out.reversed = false;
  out.pts.reserve(m + 1);
  for (int k = 0; k <= m; ++k) {
    double s = std::lerp(0.0, kWallLen, static_cast<double>(k) / m);
    out.pts.push_back(place.apply({s, arc.offset}));
  }
  out.tan_start = out.tan_end = place.apply_dir({1.0, 0.0});
  double wh = arc.offset - (arc.offset > 0 ? 0.1 : -0.1);
  finish_arc(&out, place.apply({0.5 * kWallLen, wh}));
  return out;
}

void require_close(Vec2 a, Vec2 b, const char* what) {
  if (std::hypot(a.u - b.u, a.v - b.v) > 1e-9) {
    throw std::runtime_error(std::string("develop_corridor: ") + what);
  }
}

}  // namespace

FlatLayout develop_corridor(int n) {
  if (n < 2) {
    throw std::invalid_argument("develop_corridor: resolution must be >= 2");
  }

  // Charts: each sheet (octagon + annulus + disk of one plane) uses its
  // plane-local (u, v); each wall unrolls to [0, 3*pi/2] x [-1/3, 1/3] with
  // the chop:v end at s = 0. The walk always leaves a sheet through the
  // u = -1 seam into the next wall's chop:v, and leaves a wall through
  // chop:u into the next sheet's v = +1 seam.
  const Seam sheet_to_wall{{-1.0, -kThird}, {-1.0, kThird}, {-0.9, 0.0},
                           {0.0, -kThird},  {0.0, kThird},  {0.1, 0.0}};
  const Seam wall_to_sheet{{kWallLen, -kThird}, {kWallLen, kThird},
                           {kWallLen - 0.1, 0.0},
                           {-kThird, 1.0},      {kThird, 1.0},
                           {0.0, 0.9}};

  struct VisitSpec {
    bool wall;
    PlaneId plane;
    const char* segment;
  };
  std::vector<VisitSpec> order;
  PlaneId p = PlaneId::XY;
  for (int j = 0; j < 6; ++j) {
    order.push_back({false, p, j % 2 == 0 ? "long" : "short"});
    order.push_back({true, rho_next(p), j % 2 == 0 ? "rim-" : "rim+"});
    p = rho_prev(p);
  }

  std::vector<Piece> octs, anns, walls;
  for (PlaneId q : kPlanes) {
    octs.push_back(make_octagon(q));
    auto bridge = make_crossbridge(q);
    anns.push_back(std::move(bridge.first));
    walls.push_back(std::move(bridge.second));
  }
  auto oct = [&](PlaneId q) -> const Piece& {
    return octs[static_cast<int>(q)];
  };
  auto ann = [&](PlaneId q) -> const Piece& {
    return anns[static_cast<int>(q)];
  };
  auto wall = [&](PlaneId q) -> const Piece& {
    return walls[static_cast<int>(q)];
  };

  FlatLayout layout;
  layout.wall_length = kWallLen;
  layout.wall_width = kTwoThirds;

  std::vector<Isom2> places(13);
  for (int k = 0; k < 12; ++k) {
    const Seam& seam = order[k].wall ? wall_to_sheet : sheet_to_wall;
    std::pair<Vec2, Vec2> placed;
    places[k + 1] = chain(places[k], seam, &placed);
    layout.seams.push_back(placed);
  }

  for (int k = 0; k < 12; ++k) {
    const VisitSpec& vs = order[k];
    DevVisit visit;
    visit.piece = std::string(vs.wall ? "B_" : "M_") + plane_name(vs.plane);
    visit.segment = vs.segment;
    visit.place = places[k];
    layout.visits.push_back(visit);

    if (vs.wall) {
      layout.wall_rects.push_back({places[k].apply({0.0, -kThird}),
                                   places[k].apply({kWallLen, -kThird}),
                                   places[k].apply({kWallLen, kThird}),
                                   places[k].apply({0.0, kThird})});
      layout.arcs.push_back(develop_rim(wall(vs.plane), vs.segment, places[k], n));
    } else if (std::string(vs.segment) == "long") {
      layout.arcs.push_back(
          develop_sheet_arc(oct(vs.plane), "road:++", false, places[k], n));
      layout.arcs.push_back(
          develop_sheet_arc(ann(vs.plane), "outer", true, places[k], n));
      layout.arcs.push_back(
          develop_sheet_arc(oct(vs.plane), "road:--", false, places[k], n));
    } else {
      layout.arcs.push_back(
          develop_sheet_arc(oct(vs.plane), "road:-+", true, places[k], n));
    }
  }

  layout.deck = places[6];
  layout.closure = places[12];

  Isom2 twice = layout.deck.compose(layout.deck);
  if (std::abs(twice.m00 - layout.closure.m00) > 1e-9 ||
      std::abs(twice.m01 - layout.closure.m01) > 1e-9 ||
      std::abs(twice.m10 - layout.closure.m10) > 1e-9 ||
      std::abs(twice.m11 - layout.closure.m11) > 1e-9 ||
      std::hypot(twice.t.u - layout.closure.t.u,
                 twice.t.v - layout.closure.t.v) > 1e-9) {
    throw std::runtime_error("develop_corridor: deck map does not halve the cycle");
  }
  if (std::abs(layout.deck.det() + 1.0) > 1e-9) {
    throw std::runtime_error("develop_corridor: deck map is not a reflection");
  }
  if (std::abs(layout.closure.m00 - 1.0) > 1e-9 ||
      std::abs(layout.closure.m11 - 1.0) > 1e-9 ||
      std::abs(layout.closure.m01) > 1e-9 ||
      std::abs(layout.closure.m10) > 1e-9) {
    throw std::runtime_error("develop_corridor: cycle closure is not a translation");
  }
  if (std::hypot(layout.closure.t.u, layout.closure.t.v) < 1.0) {
    throw std::runtime_error("develop_corridor: cycle closure is degenerate");
  }

  for (std::size_t i = 0; i < layout.arcs.size(); ++i) {
    const DevArc& a = layout.arcs[i];
    const DevArc& b = layout.arcs[(i + 1) % layout.arcs.size()];
    bool wrap = i + 1 == layout.arcs.size();
    Vec2 next_start = wrap ? layout.closure.apply(b.pts.front()) : b.pts.front();
    require_close(a.pts.back(), next_start, "boundary breaks between arcs");
    Vec2 next_tan = wrap ? layout.closure.apply_dir(b.tan_start) : b.tan_start;
    layout.corner_turns.push_back(signed_angle(a.tan_end, next_tan));
  }
  return layout;
}

GeodesicTotals total_geodesic_curvature(const FlatLayout& layout) {
  GeodesicTotals totals;
  for (const DevArc& arc : layout.arcs) {
    totals.absolute += std::abs(arc.turn);
    totals.signed_total += arc.turn;
  }
  for (double c : layout.corner_turns) {
    totals.absolute += std::abs(c);
    totals.signed_total += c;
  }
  return totals;
}

}  // namespace boykit
