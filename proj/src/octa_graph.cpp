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

#include "boykit/octa_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace boykit {

std::string SignVector::str() const {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    out += s[i] > 0 ? '+' : (s[i] < 0 ? '-' : '0');
  }
  return out;
}

Isometry Isometry::compose(const Isometry& o) const {
  Isometry r;
  for (int i = 0; i < 3; ++i) {
    r.perm[i] = o.perm[perm[i]];
    r.sign[i] = sign[i] * o.sign[perm[i]];
  }
  return r;
}

int Isometry::det() const {
  int parity = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (perm[i] > perm[j]) parity = -parity;
    }
  }
  return parity * sign[0] * sign[1] * sign[2];
}

std::vector<Isometry> symmetry_group() {
  std::set<Isometry> closed{Isometry::identity()};
  std::vector<Isometry> frontier{Isometry::rho(), Isometry::sigma()};
  while (!frontier.empty()) {
    Isometry g = frontier.back();
    frontier.pop_back();
    if (!closed.insert(g).second) continue;
    for (const Isometry& h : closed) {
      frontier.push_back(g.compose(h));
      frontier.push_back(h.compose(g));
    }
  }
  return {closed.begin(), closed.end()};
}

const char* lane_name(LaneId lane) {
  switch (lane) {
    case LaneId::Planar: return "planar";
    case LaneId::Upper: return "upper";
    default: return "lower";
  }
}

PlaneId plane_of_label(const SignVector& label) {
  for (PlaneId p : kPlanes) {
    if (label.s[out_of_plane_axis(p)] == 0) return p;
  }
  throw std::invalid_argument("label " + label.str() + " has no zero entry");
}

std::array<GraphEdge, 3> symmetric_matching() {
  std::array<GraphEdge, 3> m;
  for (int i = 0; i < 3; ++i) {
    PlaneId p = kPlanes[i];
    SignVector a, b;
    a.s[u_axis(p)] = 1;
    b.s[v_axis(p)] = -1;
    SignVector label{{a.s[0] + b.s[0], a.s[1] + b.s[1], a.s[2] + b.s[2]}};
    m[i] = GraphEdge{a, b, label, EdgeKind::Bridge, p};
  }
  return m;
}

OctaGraph build_octahedral_graph() {
  OctaGraph g;
  for (int axis = 0; axis < 3; ++axis) {
    for (int sgn : {1, -1}) {
      SignVector v;
      v.s[axis] = sgn;
      g.vertices.push_back(v);
    }
  }
  auto matching = symmetric_matching();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    for (size_t j = i + 1; j < g.vertices.size(); ++j) {
      const SignVector& a = g.vertices[i];
      const SignVector& b = g.vertices[j];
      SignVector label{{a.s[0] + b.s[0], a.s[1] + b.s[1], a.s[2] + b.s[2]}};
      if (label.nonzeros() != 2) continue;  // skip antipodal pairs
      GraphEdge e{a, b, label, EdgeKind::Road, plane_of_label(label)};
      for (const GraphEdge& m : matching) {
        if ((m.a == a && m.b == b) || (m.a == b && m.b == a)) {
          e.kind = EdgeKind::Bridge;
        }
      }
      g.edges.push_back(e);
    }
  }
  return g;
}

SignVector apply_symmetry(const Isometry& iso, const SignVector& v) {
  return iso.apply(v);
}

GraphEdge apply_symmetry(const Isometry& iso, const GraphEdge& e) {
  GraphEdge out;
  out.a = iso.apply(e.a);
  out.b = iso.apply(e.b);
  out.label = iso.apply(e.label);
  out.plane = plane_of_label(out.label);
  out.kind = e.kind;  // the matching is invariant under the group
  return out;
}

std::vector<LanePair> canonical_lane_pairing() {
  OctaGraph g = build_octahedral_graph();
  std::vector<LanePair> pairing;
  // Iterate the matching itself so that road_a always sits at the positive
  // u-axis end of the bridge.
  for (const GraphEdge& bridge : symmetric_matching()) {
    int axis = out_of_plane_axis(bridge.plane);
    // Roads incident to each end of the bridge, keyed by the sign of their
    // out-of-plane entry.
    auto roads_at = [&](const SignVector& v) {
      std::array<SignVector, 3> slot{};  // indexed 0 planar, 1 upper, 2 lower
      for (const GraphEdge& e : g.edges) {
        if (e.kind != EdgeKind::Road) continue;
        if (!(e.a == v || e.b == v)) continue;
        int s = e.label.s[axis];
        slot[s == 0 ? 0 : (s > 0 ? 1 : 2)] = e.label;
      }
      return slot;
    };
    auto at_a = roads_at(bridge.a);
    auto at_b = roads_at(bridge.b);
    for (int k = 0; k < 3; ++k) {
      pairing.push_back(LanePair{bridge.plane, static_cast<LaneId>(k),
                                 at_a[k], at_b[k]});
    }
  }
  return pairing;
}

std::string CircuitStep::str() const {
  std::string out = kind == StepKind::Road ? "road " : "lane ";
  out += label.str();
  if (kind == StepKind::Lane) {
    out += std::string(" (") + plane_name(plane) + " " + lane_name(lane) + ")";
  }
  out += " " + from.str() + " -> " + to.str();
  return out;
}

Circuit expand_circuit() { return expand_circuit(canonical_lane_pairing()); }

Circuit expand_circuit(const std::vector<LanePair>& pairing) {
  OctaGraph g = build_octahedral_graph();
  auto matching = symmetric_matching();

  auto bridge_at = [&](const SignVector& v) -> const GraphEdge& {
    for (const GraphEdge& m : matching) {
      if (m.a == v || m.b == v) return m;
    }
    throw std::runtime_error("vertex " + v.str() + " not matched");
  };
  auto road_by_label = [&](const SignVector& label) -> const GraphEdge& {
    for (const GraphEdge& e : g.edges) {
      if (e.kind == EdgeKind::Road && e.label == label) return e;
    }
    throw std::runtime_error("no road labelled " + label.str());
  };

  SignVector start_road{{1, 1, 0}};
  SignVector start_from{{1, 0, 0}};

  Circuit c;
  SignVector road = start_road;
  SignVector from = start_from;
  std::set<SignVector> visited;
  while (true) {
    if (!visited.insert(road).second) {
      throw std::runtime_error(
          "lane pairing closes a cycle of " + std::to_string(c.steps.size()) +
          " steps that revisits road " + road.str() +
          "; a single circuit must cover all nine roads in 18 steps");
    }
    const GraphEdge& r = road_by_label(road);
    SignVector to = (r.a == from) ? r.b : r.a;
    c.steps.push_back(
        {StepKind::Road, road, plane_of_label(road), LaneId::Planar, from, to});

    const GraphEdge& bridge = bridge_at(to);
    const LanePair* lp = nullptr;
    bool arriving_at_a = (bridge.a == to);
    for (const LanePair& cand : pairing) {
      if (cand.plane != bridge.plane) continue;
      if ((arriving_at_a && cand.road_a == road) ||
          (!arriving_at_a && cand.road_b == road)) {
        lp = &cand;
        break;
      }
    }
    if (lp == nullptr) {
      throw std::runtime_error("no lane pairs road " + road.str() +
                               " at vertex " + to.str());
    }
    SignVector other = arriving_at_a ? bridge.b : bridge.a;
    c.steps.push_back(
        {StepKind::Lane, bridge.label, bridge.plane, lp->lane, to, other});

    road = arriving_at_a ? lp->road_b : lp->road_a;
    from = other;
    if (road == start_road && from == start_from) break;
  }
  if (c.steps.size() != 18) {
    throw std::runtime_error("circuit closed after " +
                             std::to_string(c.steps.size()) +
                             " steps, expected 18");
  }
  return c;
}

Circuit transform_circuit(const Circuit& c, const Isometry& iso) {
  Circuit out;
  out.steps.reserve(c.steps.size());
  for (const CircuitStep& st : c.steps) {
    CircuitStep t = st;
    t.label = iso.apply(st.label);
    t.from = iso.apply(st.from);
    t.to = iso.apply(st.to);
    t.plane = plane_of_label(t.label);
    out.steps.push_back(t);
  }
  // Lane classes are defined by the out-of-plane sign of the roads they
  // join, so recompute them from the (already transformed) preceding road.
  size_t n = out.steps.size();
  for (size_t i = 0; i < n; ++i) {
    CircuitStep& st = out.steps[i];
    if (st.kind != StepKind::Lane) continue;
    const CircuitStep& prev = out.steps[(i + n - 1) % n];
    int s = prev.label.s[out_of_plane_axis(st.plane)];
    st.lane = s == 0 ? LaneId::Planar : (s > 0 ? LaneId::Upper : LaneId::Lower);
  }
  return out;
}

namespace {

Circuit reverse_circuit(const Circuit& c) {
  Circuit out;
  out.steps.reserve(c.steps.size());
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    CircuitStep st = *it;
    std::swap(st.from, st.to);
    out.steps.push_back(st);
  }
  return out;
}

bool equal_up_to_rotation(const Circuit& a, const Circuit& b) {
  size_t n = a.steps.size();
  if (b.steps.size() != n) return false;
  for (size_t off = 0; off < n; ++off) {
    bool match = true;
    for (size_t i = 0; i < n && match; ++i) {
      match = a.steps[i] == b.steps[(i + off) % n];
    }
    if (match) return true;
  }
  return false;
}

}  // namespace

bool circuits_equivalent(const Circuit& a, const Circuit& b) {
  return equal_up_to_rotation(a, b) ||
         equal_up_to_rotation(a, reverse_circuit(b));
}

}  // namespace boykit
