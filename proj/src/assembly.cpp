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

#include "boykit/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace boykit {

namespace {

std::string pname(char kind, PlaneId plane) {
  return std::string(1, kind) + "_" + plane_name(plane);
}

PlaneId plane_from_name(const std::string& piece) {
  std::string suffix = piece.substr(piece.find('_') + 1);
  for (PlaneId p : kPlanes) {
    if (suffix == plane_name(p)) return p;
  }
  throw std::invalid_argument("piece name " + piece + " has no plane suffix");
}

}  // namespace

GluingTable h_gluing_table() {
  GluingTable t;
  for (PlaneId p : kPlanes) {
    std::string O = pname('O', p), A = pname('A', p);
    t.entries.push_back({O, "edge:u+1", A, "chop:u", false});
    t.entries.push_back({O, "edge:v-1", A, "chop:v", false});
    t.entries.push_back({O, "edge:v+1", pname('B', rho_prev(p)), "chop:u",
                         false});
    t.entries.push_back({O, "edge:u-1", pname('B', rho_next(p)), "chop:v",
                         false});
  }
  return t;
}

GluingTable m_gluing_table() {
  GluingTable t = h_gluing_table();
  for (PlaneId p : kPlanes) {
    std::string O = pname('O', p), A = pname('A', p), D = pname('D', p);
    t.entries.push_back({O, "road:+-", D, "road", false});
    t.entries.push_back({A, "inner", D, "bridge", false});
  }
  return t;
}

SurfaceComplex build_H(int n, double tol) {
  std::vector<SubMesh> meshes;
  for (PlaneId p : kPlanes) {
    meshes.push_back(tessellate(make_octagon(p), n));
    auto [a, b] = make_crossbridge(p);
    meshes.push_back(tessellate(a, n));
    meshes.push_back(tessellate(b, n));
  }
  return glue(meshes, h_gluing_table(), tol);
}

SurfaceComplex build_M(int n, double tol) {
  std::vector<SubMesh> meshes;
  for (const Piece& piece : make_all_pieces()) {
    meshes.push_back(tessellate(piece, n));
  }
  return glue(meshes, m_gluing_table(), tol);
}

namespace {

SignVector axis_vertex(PlaneId plane, bool u, int sign) {
  SignVector v;
  v.s[u ? u_axis(plane) : v_axis(plane)] = sign;
  return v;
}

// Endpoints of a canonical road arc as graph vertices: the start of each
// quarter arc touches one square side, the end the adjacent one, and sides
// correspond to the axis vertices of the plane.
void road_endpoints(PlaneId plane, const std::string& arc, SignVector* label,
                    SignVector* start, SignVector* end) {
  int cu = arc[5] == '+' ? 1 : -1;
  int cv = arc[6] == '+' ? 1 : -1;
  SignVector lab;
  lab.s[u_axis(plane)] = cu;
  lab.s[v_axis(plane)] = cv;
  *label = lab;
  SignVector u_end = axis_vertex(plane, true, cu);
  SignVector v_end = axis_vertex(plane, false, cv);
  // Arcs at the ++ and -- corners start on the v side; the others start on
  // the u side.
  if (cu == cv) {
    *start = v_end;
    *end = u_end;
  } else {
    *start = u_end;
    *end = v_end;
  }
}

}  // namespace

Circuit boundary_circuit(const SurfaceComplex& m) {
  auto loops = m.trace_boundary_loops();
  if (loops.size() != 1) {
    throw std::runtime_error("expected one boundary loop, found " +
                             std::to_string(loops.size()));
  }
  auto matching = symmetric_matching();
  Circuit c;
  for (const ArcRun& run : loops[0].runs) {
    PlaneId plane = plane_from_name(run.arc.piece);
    ArcRole role = m.roles.at(run.arc);
    CircuitStep step;
    step.plane = plane;
    if (role == ArcRole::Road) {
      step.kind = StepKind::Road;
      road_endpoints(plane, run.arc.arc, &step.label, &step.from, &step.to);
    } else if (role == ArcRole::Lane) {
      step.kind = StepKind::Lane;
      const GraphEdge& bridge = matching[static_cast<int>(plane)];
      step.label = bridge.label;
      step.lane = run.arc.arc == "outer"
                      ? LaneId::Planar
                      : (run.arc.arc == "rim+" ? LaneId::Upper : LaneId::Lower);
      // Lane arcs run from the negative v side to the positive u side.
      step.from = bridge.b;
      step.to = bridge.a;
    } else {
      throw std::runtime_error("boundary loop contains non-road, non-lane arc " +
                               run.arc.str());
    }
    if (run.reversed) std::swap(step.from, step.to);
    c.steps.push_back(step);
  }
  if (c.steps.size() != 18) {
    throw std::runtime_error("boundary loop has " +
                             std::to_string(c.steps.size()) +
                             " runs, expected 18");
  }
  // Start the cycle on a road step, as expand_circuit does.
  if (c.steps[0].kind != StepKind::Road) {
    std::rotate(c.steps.begin(), c.steps.begin() + 1, c.steps.end());
  }
  return c;
}

std::vector<std::string> corridor_order() {
  return {"M_XY", "B_YZ", "M_ZX", "B_XY", "M_YZ", "B_ZX"};
}

namespace {

// Clusters positions on a coarse grid so multisets of vertices can be
// compared across symmetry images. The cell is much larger than the match
// tolerance, so equal points always land in the same or adjacent cells.
class PositionIndex {
 public:
  explicit PositionIndex(double cell) : cell_(cell) {}

  int find(const Vec3& p, double tol, double* best_dist = nullptr) const {
    std::array<long long, 3> base = cell_of(p);
    int best = -1;
    double best_d = tol;
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          auto it = grid_.find({base[0] + dx, base[1] + dy, base[2] + dz});
          if (it == grid_.end()) continue;
          for (int c : it->second) {
            double d = (reps_[c] - p).norm();
            if (d <= best_d) {
              best_d = d;
              best = c;
            }
          }
        }
      }
    }
    if (best_dist != nullptr) *best_dist = best >= 0 ? best_d : tol;
    return best;
  }

  int add(const Vec3& p, double tol) {
    int c = find(p, tol);
    if (c >= 0) return c;
    c = static_cast<int>(reps_.size());
    reps_.push_back(p);
    grid_[cell_of(p)].push_back(c);
    return c;
  }

  size_t size() const { return reps_.size(); }

 private:
  std::array<long long, 3> cell_of(const Vec3& p) const {
    return {static_cast<long long>(std::floor(p.x / cell_)),
            static_cast<long long>(std::floor(p.y / cell_)),
            static_cast<long long>(std::floor(p.z / cell_))};
  }

  double cell_;
  std::map<std::array<long long, 3>, std::vector<int>> grid_;
  std::vector<Vec3> reps_;
};

// Face cycle over cluster ids, canonical up to rotation and reflection.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
  std::vector<int> best = cyc;
  auto consider = [&](const std::vector<int>& v) {
    if (v < best) best = v;
  };
  for (int flip = 0; flip < 2; ++flip) {
    for (size_t r = 0; r < cyc.size(); ++r) {
      std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
      consider(cyc);
    }
    std::reverse(cyc.begin(), cyc.end());
  }
  return best;
}

}  // namespace

SymmetryReport check_symmetry(const SurfaceComplex& sc, double tol) {
  SymmetryReport report;
  auto group = symmetry_group();
  report.group_size = static_cast<int>(group.size());
  report.contains_point_reflection =
      std::find(group.begin(), group.end(), Isometry::point_reflection()) !=
      group.end();

  PositionIndex index(1e-6);
  std::vector<int> cluster(sc.verts.size(), -1);
  std::map<int, int> base_count;
  int infinite = 0;
  for (size_t i = 0; i < sc.verts.size(); ++i) {
    if (sc.verts[i].at_infinity) {
      ++infinite;
      continue;
    }
    cluster[i] = index.add(sc.verts[i].pos, tol);
    ++base_count[cluster[i]];
  }

  std::multiset<std::vector<int>> base_faces;
  for (const MeshFace& f : sc.faces) {
    std::vector<int> cyc(f.n);
    for (int i = 0; i < f.n; ++i) {
      cyc[i] = f.v[i] < static_cast<int>(cluster.size()) ? cluster[f.v[i]] : -1;
    }
    base_faces.insert(canonical_cycle(cyc));
  }

  report.vertices_match = true;
  report.faces_match = true;
  for (const Isometry& iso : group) {
    std::vector<int> image(sc.verts.size(), -1);
    std::map<int, int> image_count;
    int image_infinite = 0;
    for (size_t i = 0; i < sc.verts.size(); ++i) {
      if (sc.verts[i].at_infinity) {
        ++image_infinite;
        continue;
      }
      double dist = 0.0;
      int c = index.find(iso.apply(sc.verts[i].pos), tol, &dist);
      report.max_vertex_distance = std::max(report.max_vertex_distance, dist);
      if (c < 0) {
        report.vertices_match = false;
        continue;
      }
      image[i] = c;
      ++image_count[c];
    }
    if (image_count != base_count || image_infinite != infinite) {
      report.vertices_match = false;
    }

    std::multiset<std::vector<int>> image_faces;
    for (const MeshFace& f : sc.faces) {
      std::vector<int> cyc(f.n);
      for (int i = 0; i < f.n; ++i) cyc[i] = image[f.v[i]];
      image_faces.insert(canonical_cycle(cyc));
    }
    if (image_faces != base_faces) report.faces_match = false;
  }
  return report;
}

}  // namespace boykit
