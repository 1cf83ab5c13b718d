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

#ifndef BOYKIT_OCTA_GRAPH_HPP_
#define BOYKIT_OCTA_GRAPH_HPP_

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "boykit/vec.hpp"

namespace boykit {

// Label on the octahedral graph: entries in {-1, 0, +1}. Vertices have one
// nonzero entry (the six unit vectors), edge and corner labels have two.
struct SignVector {
  std::array<int, 3> s{0, 0, 0};

  auto operator<=>(const SignVector&) const = default;
  int nonzeros() const {
    return (s[0] != 0) + (s[1] != 0) + (s[2] != 0);
  }
  Vec3 to_vec() const {
    return {static_cast<double>(s[0]), static_cast<double>(s[1]),
            static_cast<double>(s[2])};
  }
  std::string str() const;  // e.g. "+0-"
};

// A signed coordinate permutation, p -> (sign[i] * p[perm[i]]). All the
// ambient symmetries used here are of this form, so applying them to
// doubles is exact.
struct Isometry {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> sign{1, 1, 1};

  auto operator<=>(const Isometry&) const = default;

  Vec3 apply(const Vec3& p) const {
    return {sign[0] * p[perm[0]], sign[1] * p[perm[1]], sign[2] * p[perm[2]]};
  }
  SignVector apply(const SignVector& v) const {
    return {{sign[0] * v.s[perm[0]], sign[1] * v.s[perm[1]],
             sign[2] * v.s[perm[2]]}};
  }
  // (this o other): apply other first, then this.
  Isometry compose(const Isometry& o) const;
  int det() const;

  static Isometry identity() { return {}; }
  // Cyclic coordinate shift (x,y,z) -> (y,z,x); order three.
  static Isometry rho() { return {{1, 2, 0}, {1, 1, 1}}; }
  // (x,y,z) -> (-y,-x,-z); order two. A rotation by pi about (1,-1,0).
  static Isometry sigma() { return {{1, 0, 2}, {-1, -1, -1}}; }
  static Isometry point_reflection() { return {{0, 1, 2}, {-1, -1, -1}}; }
};

// Closure of {rho, sigma} under composition: six elements.
std::vector<Isometry> symmetry_group();

enum class EdgeKind { Road, Bridge };

struct GraphEdge {
  SignVector a, b;   // unit vertices
  SignVector label;  // a + b componentwise; two nonzero entries
  EdgeKind kind = EdgeKind::Road;
  PlaneId plane = PlaneId::XY;  // the coordinate plane containing the edge

  auto operator<=>(const GraphEdge&) const = default;
};

struct OctaGraph {
  std::vector<SignVector> vertices;  // 6
  std::vector<GraphEdge> edges;      // 12 = 9 roads + 3 bridges
};

// The plane whose out-of-plane axis is the zero entry of a two-nonzero label.
PlaneId plane_of_label(const SignVector& label);

// The octahedral graph on the six unit vectors, with an edge between every
// non-antipodal pair, and the distinguished matching already marked.
OctaGraph build_octahedral_graph();

// The matching of the six vertices that is invariant under the symmetry
// group: in each plane, the edge from the positive u-axis vertex to the
// negative v-axis vertex.
std::array<GraphEdge, 3> symmetric_matching();

SignVector apply_symmetry(const Isometry& iso, const SignVector& v);
GraphEdge apply_symmetry(const Isometry& iso, const GraphEdge& e);

// The three crossing lanes of a matched edge, indexed by the sign of the
// out-of-plane entry of the roads they join: 0 planar, + upper, - lower.
enum class LaneId { Planar = 0, Upper = 1, Lower = 2 };

const char* lane_name(LaneId lane);

// One lane: joins a road incident to bridge vertex a with the like-signed
// road incident to bridge vertex b.
struct LanePair {
  PlaneId plane;
  LaneId lane;
  SignVector road_a, road_b;

  auto operator<=>(const LanePair&) const = default;
};

// All nine lanes, three per matched edge.
std::vector<LanePair> canonical_lane_pairing();

enum class StepKind { Road, Lane };

struct CircuitStep {
  StepKind kind;
  SignVector label;  // road label, or the matched edge's corner label
  PlaneId plane;
  LaneId lane = LaneId::Planar;  // meaningful only when kind == Lane
  SignVector from, to;           // graph vertices, in traversal order

  auto operator<=>(const CircuitStep&) const = default;
  std::string str() const;
};

struct Circuit {
  std::vector<CircuitStep> steps;  // alternating Road, Lane
};

// Walks every road exactly once, crossing each matched edge along the lane
// that pairs the arriving road with its partner. Starts along road (+,+,0)
// from (+,0,0). Throws std::runtime_error if the walk does not close into a
// single cycle through all nine roads.
Circuit expand_circuit();
Circuit expand_circuit(const std::vector<LanePair>& pairing);

Circuit transform_circuit(const Circuit& c, const Isometry& iso);

// Equality of closed circuits up to rotation of the starting step and
// reversal of direction.
bool circuits_equivalent(const Circuit& a, const Circuit& b);

}  // namespace boykit

#endif  // BOYKIT_OCTA_GRAPH_HPP_
