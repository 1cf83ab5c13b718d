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

#include <algorithm>
#include <map>
#include <set>

#include "boykit/octa_graph.hpp"

using namespace boykit;

namespace {

SignVector sv(int a, int b, int c) { return SignVector{{a, b, c}}; }

}  // namespace

TEST_CASE("octahedral graph has 6 vertices, 12 edges, all degree 4") {
  OctaGraph g = build_octahedral_graph();
  CHECK(g.vertices.size() == 6);
  CHECK(g.edges.size() == 12);
  std::map<SignVector, int> degree;
  for (const GraphEdge& e : g.edges) {
    CHECK(e.a.nonzeros() == 1);
    CHECK(e.b.nonzeros() == 1);
    CHECK(e.label.nonzeros() == 2);
    // No edge joins antipodal vertices.
    CHECK_FALSE((e.a.s[0] == -e.b.s[0] && e.a.s[1] == -e.b.s[1] &&
                 e.a.s[2] == -e.b.s[2]));
    ++degree[e.a];
    ++degree[e.b];
  }
  CHECK(degree.size() == 6);
  for (auto& [v, d] : degree) CHECK(d == 4);

  int bridges = 0;
  for (const GraphEdge& e : g.edges) bridges += e.kind == EdgeKind::Bridge;
  CHECK(bridges == 3);
}

TEST_CASE("the matching is the frozen one and is group invariant") {
  auto m = symmetric_matching();
  // Frozen oracle: one matched edge per plane.
  CHECK(m[0].a == sv(1, 0, 0));
  CHECK(m[0].b == sv(0, -1, 0));
  CHECK(m[0].plane == PlaneId::XY);
  CHECK(m[0].label == sv(1, -1, 0));
  CHECK(m[1].a == sv(0, 0, 1));
  CHECK(m[1].b == sv(-1, 0, 0));
  CHECK(m[1].plane == PlaneId::ZX);
  CHECK(m[1].label == sv(-1, 0, 1));
  CHECK(m[2].a == sv(0, 1, 0));
  CHECK(m[2].b == sv(0, 0, -1));
  CHECK(m[2].plane == PlaneId::YZ);
  CHECK(m[2].label == sv(0, 1, -1));

  // Perfect: covers all six vertices.
  std::set<SignVector> covered;
  for (const GraphEdge& e : m) {
    covered.insert(e.a);
    covered.insert(e.b);
  }
  CHECK(covered.size() == 6);

  // Invariant under the whole symmetry group, as a set of unordered pairs.
  auto as_pair_set = [](const std::array<GraphEdge, 3>& edges) {
    std::set<std::set<SignVector>> out;
    for (const GraphEdge& e : edges) out.insert({e.a, e.b});
    return out;
  };
  auto base = as_pair_set(m);
  for (const Isometry& iso : symmetry_group()) {
    std::array<GraphEdge, 3> mapped = m;
    for (GraphEdge& e : mapped) e = apply_symmetry(iso, e);
    CHECK(as_pair_set(mapped) == base);
  }
}

TEST_CASE("symmetry group is the six signed permutations generated by "
          "rho and sigma, without the point reflection") {
  auto group = symmetry_group();
  CHECK(group.size() == 6);

  auto contains = [&](const Isometry& g) {
    return std::find(group.begin(), group.end(), g) != group.end();
  };
  Isometry rho = Isometry::rho();
  Isometry sigma = Isometry::sigma();
  CHECK(contains(Isometry::identity()));
  CHECK(contains(rho));
  CHECK(contains(rho.compose(rho)));
  CHECK(contains(sigma));
  CHECK(contains(sigma.compose(rho)));
  CHECK(contains(rho.compose(sigma)));
  CHECK_FALSE(contains(Isometry::point_reflection()));

  // Closed under composition; every element is a rotation.
  for (const Isometry& g : group) {
    CHECK(g.det() == 1);
    for (const Isometry& h : group) CHECK(contains(g.compose(h)));
  }

  // rho cycles the planes XY -> ZX -> YZ; spot check on a corner label.
  CHECK(rho.apply(sv(1, 1, 0)) == sv(1, 0, 1));
  CHECK(plane_of_label(sv(1, 0, 1)) == PlaneId::ZX);
  // sigma swaps and negates the first two coordinates.
  CHECK(sigma.apply(sv(1, 1, 0)) == sv(-1, -1, 0));
  CHECK(sigma.compose(rho).apply(sv(1, 0, 0)) == sv(0, 0, -1));
  CHECK(rho.compose(sigma).apply(sv(1, 0, 0)) == sv(-1, 0, 0));
}

TEST_CASE("lane pairing pairs roads across each matched edge by the sign "
          "of their out-of-plane entry") {
  auto pairing = canonical_lane_pairing();
  CHECK(pairing.size() == 9);

  auto find = [&](PlaneId p, LaneId l) {
    for (const LanePair& lp : pairing) {
      if (lp.plane == p && lp.lane == l) return lp;
    }
    FAIL("missing lane");
    return LanePair{};
  };

  // Frozen oracle, all nine lanes.
  CHECK(find(PlaneId::XY, LaneId::Planar).road_a == sv(1, 1, 0));
  CHECK(find(PlaneId::XY, LaneId::Planar).road_b == sv(-1, -1, 0));
  CHECK(find(PlaneId::XY, LaneId::Upper).road_a == sv(1, 0, 1));
  CHECK(find(PlaneId::XY, LaneId::Upper).road_b == sv(0, -1, 1));
  CHECK(find(PlaneId::XY, LaneId::Lower).road_a == sv(1, 0, -1));
  CHECK(find(PlaneId::XY, LaneId::Lower).road_b == sv(0, -1, -1));

  CHECK(find(PlaneId::ZX, LaneId::Planar).road_a == sv(1, 0, 1));
  CHECK(find(PlaneId::ZX, LaneId::Planar).road_b == sv(-1, 0, -1));
  CHECK(find(PlaneId::ZX, LaneId::Upper).road_a == sv(0, 1, 1));
  CHECK(find(PlaneId::ZX, LaneId::Upper).road_b == sv(-1, 1, 0));
  CHECK(find(PlaneId::ZX, LaneId::Lower).road_a == sv(0, -1, 1));
  CHECK(find(PlaneId::ZX, LaneId::Lower).road_b == sv(-1, -1, 0));

  CHECK(find(PlaneId::YZ, LaneId::Planar).road_a == sv(0, 1, 1));
  CHECK(find(PlaneId::YZ, LaneId::Planar).road_b == sv(0, -1, -1));
  CHECK(find(PlaneId::YZ, LaneId::Upper).road_a == sv(1, 1, 0));
  CHECK(find(PlaneId::YZ, LaneId::Upper).road_b == sv(1, 0, -1));
  CHECK(find(PlaneId::YZ, LaneId::Lower).road_a == sv(-1, 1, 0));
  CHECK(find(PlaneId::YZ, LaneId::Lower).road_b == sv(-1, 0, -1));

  // Every road appears in exactly two lanes (once per endpoint).
  std::map<SignVector, int> uses;
  for (const LanePair& lp : pairing) {
    ++uses[lp.road_a];
    ++uses[lp.road_b];
  }
  CHECK(uses.size() == 9);
  for (auto& [road, n] : uses) CHECK(n == 2);
}

TEST_CASE("the circuit is a single 18-step cycle with the frozen road and "
          "lane order") {
  Circuit c = expand_circuit();
  REQUIRE(c.steps.size() == 18);
  for (size_t i = 0; i < 18; ++i) {
    CHECK(c.steps[i].kind == (i % 2 == 0 ? StepKind::Road : StepKind::Lane));
    // Steps chain head to tail and close up.
    CHECK(c.steps[i].to == c.steps[(i + 1) % 18].from);
  }

  CHECK(c.steps[0].label == sv(1, 1, 0));
  CHECK(c.steps[0].from == sv(1, 0, 0));
  CHECK(c.steps[0].to == sv(0, 1, 0));

  const std::array<SignVector, 9> road_order = {
      sv(1, 1, 0),  sv(1, 0, -1), sv(0, -1, -1),
      sv(0, 1, 1),  sv(-1, 1, 0), sv(-1, 0, -1),
      sv(1, 0, 1),  sv(0, -1, 1), sv(-1, -1, 0)};
  const std::array<std::pair<PlaneId, LaneId>, 9> lane_order = {{
      {PlaneId::YZ, LaneId::Upper},
      {PlaneId::XY, LaneId::Lower},
      {PlaneId::YZ, LaneId::Planar},
      {PlaneId::ZX, LaneId::Upper},
      {PlaneId::YZ, LaneId::Lower},
      {PlaneId::ZX, LaneId::Planar},
      {PlaneId::XY, LaneId::Upper},
      {PlaneId::ZX, LaneId::Lower},
      {PlaneId::XY, LaneId::Planar},
  }};
  for (int i = 0; i < 9; ++i) {
    CHECK(c.steps[2 * i].label == road_order[i]);
    CHECK(c.steps[2 * i + 1].plane == lane_order[i].first);
    CHECK(c.steps[2 * i + 1].lane == lane_order[i].second);
  }

  // The planar lane in XY joins roads (+,+,0) and (-,-,0), and those two
  // roads sit on either side of that lane in the cycle.
  CHECK(c.steps[16].label == sv(-1, -1, 0));
  CHECK(c.steps[17].plane == PlaneId::XY);
  CHECK(c.steps[17].lane == LaneId::Planar);
  CHECK(c.steps[0].label == sv(1, 1, 0));
}

TEST_CASE("circuit equivalence allows rotation and reversal, and the "
          "circuit is invariant under the symmetry group") {
  Circuit c = expand_circuit();

  Circuit rotated;
  rotated.steps.assign(c.steps.begin() + 4, c.steps.end());
  rotated.steps.insert(rotated.steps.end(), c.steps.begin(),
                       c.steps.begin() + 4);
  CHECK(circuits_equivalent(c, rotated));

  Circuit reversed;
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    CircuitStep st = *it;
    std::swap(st.from, st.to);
    reversed.steps.push_back(st);
  }
  CHECK(circuits_equivalent(c, reversed));

  for (const Isometry& iso : symmetry_group()) {
    CHECK(circuits_equivalent(c, transform_circuit(c, iso)));
  }

  Circuit tweaked = c;
  tweaked.steps[1].lane = LaneId::Lower;
  CHECK_FALSE(circuits_equivalent(c, tweaked));
}

TEST_CASE("a mispaired lane table fails to close a single 18-cycle") {
  auto pairing = canonical_lane_pairing();
  // Swap the upper and lower partners across the XY matched edge.
  for (LanePair& lp : pairing) {
    if (lp.plane != PlaneId::XY) continue;
    if (lp.lane == LaneId::Upper) lp.road_b = sv(0, -1, -1);
    if (lp.lane == LaneId::Lower) lp.road_b = sv(0, -1, 1);
  }
  CHECK_THROWS_AS(expand_circuit(pairing), std::runtime_error);
}
