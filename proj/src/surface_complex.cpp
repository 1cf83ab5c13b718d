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

#include "boykit/surface_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace boykit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Vec2 kCorner{1.0, -1.0};

// Octagon and disk interiors are rings of the boundary loop shrunk toward a
// center point, ending in a triangle fan.
SubMesh mesh_fan(const Piece& piece, int n, const std::vector<Vec3>& loop,
                 Vec3 center) {
  SubMesh out;
  out.piece = piece.name;
  out.kind = piece.kind;
  out.plane = piece.plane;
  const int ring = static_cast<int>(loop.size());
  for (int k = 0; k < n; ++k) {
    double scale = 1.0 - static_cast<double>(k) / n;
    for (int i = 0; i < ring; ++i) {
      out.verts.push_back(k == 0 ? loop[i]
                                 : center + (loop[i] - center) * scale);
    }
  }
  out.verts.push_back(center);
  const int center_id = n * ring;
  auto idx = [&](int k, int i) { return k * ring + (i % ring); };
  for (int k = 0; k + 1 < n; ++k) {
    for (int i = 0; i < ring; ++i) {
      out.faces.push_back(
          {{idx(k, i), idx(k, i + 1), idx(k + 1, i + 1), idx(k + 1, i)}, 4, 0});
    }
  }
  for (int i = 0; i < ring; ++i) {
    out.faces.push_back({{idx(n - 1, i), idx(n - 1, i + 1), center_id, -1}, 3, 0});
  }
  return out;
}

SubMesh mesh_octagon(const Piece& piece, int n) {
  // Boundary loop, counterclockwise, assembled from the canonical samples.
  struct Hop {
    const char* arc;
    bool forward;
  };
  static constexpr Hop kLoop[8] = {
      {"edge:u+1", true}, {"road:++", false}, {"edge:v+1", false},
      {"road:-+", false}, {"edge:u-1", false}, {"road:--", false},
      {"edge:v-1", true}, {"road:+-", false}};

  std::vector<Vec3> loop;
  loop.reserve(8 * n);
  for (const Hop& hop : kLoop) {
    auto pts = sample_arc(piece.arc(hop.arc), n);
    if (!hop.forward) std::reverse(pts.begin(), pts.end());
    loop.insert(loop.end(), pts.begin(), pts.end() - 1);
  }

  SubMesh out = mesh_fan(piece, n, loop, embed(piece.plane, 0.0, 0.0, 0.0));
  for (int j = 0; j < 8; ++j) {
    const Hop& hop = kLoop[j];
    std::vector<int> chain(n + 1);
    for (int k = 0; k <= n; ++k) {
      int at = (j * n + k) % (8 * n);
      chain[hop.forward ? k : n - k] = at;
    }
    out.chains[hop.arc] = std::move(chain);
    out.roles[hop.arc] = piece.arc(hop.arc).role;
  }
  return out;
}

SubMesh mesh_disk(const Piece& piece, int n) {
  auto bridge = sample_arc(piece.arc("bridge"), n);
  auto road = sample_arc(piece.arc("road"), n);
  std::vector<Vec3> loop(bridge.begin(), bridge.end() - 1);
  loop.insert(loop.end(), road.begin(), road.end() - 1);

  SubMesh out = mesh_fan(piece, n, loop, embed(piece.plane, kCorner, 0.0));
  std::vector<int> bridge_chain(3 * n + 1);
  std::iota(bridge_chain.begin(), bridge_chain.end(), 0);
  std::vector<int> road_chain(n + 1);
  std::iota(road_chain.begin(), road_chain.end(), 3 * n);
  road_chain.back() = 0;
  out.chains["bridge"] = std::move(bridge_chain);
  out.chains["road"] = std::move(road_chain);
  out.roles["bridge"] = ArcRole::Bridge;
  out.roles["road"] = ArcRole::Road;
  return out;
}

// Annulus and wall are (3n+1) x (m+1) grids in (angle, radius-or-height)
// whose border rows and columns are overwritten with canonical samples.
struct GridSpec {
  std::vector<Vec3> row0, row1;  // j = 0 and j = m, both 3n+1 points
  std::vector<Vec3> col0, col1;  // i = 0 and i = 3n, both m+1 points
  bool col0_descends = false;    // col0 stored against increasing j
};

SubMesh mesh_grid(const Piece& piece, int n, const GridSpec& spec,
                  const std::function<Vec3(double, double)>& interior) {
  SubMesh out;
  out.piece = piece.name;
  out.kind = piece.kind;
  out.plane = piece.plane;
  const int cols = 3 * n, rows = n;
  auto idx = [&](int i, int j) { return i * (rows + 1) + j; };
  out.verts.resize((cols + 1) * (rows + 1));
  for (int i = 0; i <= cols; ++i) {
    for (int j = 0; j <= rows; ++j) {
      double s = static_cast<double>(i) / cols;
      double t = static_cast<double>(j) / rows;
      out.verts[idx(i, j)] = interior(s, t);
    }
  }
  for (int i = 0; i <= cols; ++i) {
    out.verts[idx(i, 0)] = spec.row0[i];
    out.verts[idx(i, rows)] = spec.row1[i];
  }
  for (int j = 0; j <= rows; ++j) {
    out.verts[idx(0, j)] = spec.col0[spec.col0_descends ? rows - j : j];
    out.verts[idx(cols, j)] = spec.col1[j];
  }
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < rows; ++j) {
      out.faces.push_back(
          {{idx(i, j), idx(i, j + 1), idx(i + 1, j + 1), idx(i + 1, j)}, 4, 0});
    }
  }
  return out;
}

SubMesh mesh_annulus(const Piece& piece, int n) {
  GridSpec spec;
  spec.row0 = sample_arc(piece.arc("inner"), n);
  spec.row1 = sample_arc(piece.arc("outer"), n);
  spec.col1 = sample_arc(piece.arc("chop:u"), n);
  spec.col0 = sample_arc(piece.arc("chop:v"), n);
  spec.col0_descends = true;  // chop:v runs from the outer rim inward at i=0

  PlaneId plane = piece.plane;
  SubMesh out = mesh_grid(piece, n, spec, [plane](double s, double t) {
    double theta = std::lerp(-kPi, 0.5 * kPi, s);
    double r = std::lerp(kTwoThirds, kFourThirds, t);
    return embed(plane, kCorner + Vec2{r * std::cos(theta), r * std::sin(theta)},
                 0.0);
  });

  const int rows = n, cols = 3 * n;
  auto idx = [&](int i, int j) { return i * (rows + 1) + j; };
  auto& chains = out.chains;
  for (int i = 0; i <= cols; ++i) {
    chains["inner"].push_back(idx(i, 0));
    chains["outer"].push_back(idx(i, rows));
  }
  for (int j = 0; j <= rows; ++j) {
    chains["chop:u"].push_back(idx(cols, j));
    chains["chop:v"].push_back(idx(0, rows - j));
  }
  for (const char* arc : {"inner", "outer", "chop:u", "chop:v"}) {
    out.roles[arc] = piece.arc(arc).role;
  }
  return out;
}

SubMesh mesh_wall(const Piece& piece, int n) {
  GridSpec spec;
  spec.row0 = sample_arc(piece.arc("rim-"), n);
  spec.row1 = sample_arc(piece.arc("rim+"), n);
  spec.col1 = sample_arc(piece.arc("chop:u"), n);
  spec.col0 = sample_arc(piece.arc("chop:v"), n);

  PlaneId plane = piece.plane;
  SubMesh out = mesh_grid(piece, n, spec, [plane](double s, double t) {
    double theta = std::lerp(-kPi, 0.5 * kPi, s);
    double h = std::lerp(-kThird, kThird, t);
    return embed(plane, kCorner + Vec2{std::cos(theta), std::sin(theta)}, h);
  });

  const int rows = n, cols = 3 * n;
  auto idx = [&](int i, int j) { return i * (rows + 1) + j; };
  for (int i = 0; i <= cols; ++i) {
    out.chains["rim-"].push_back(idx(i, 0));
    out.chains["rim+"].push_back(idx(i, rows));
  }
  for (int j = 0; j <= rows; ++j) {
    out.chains["chop:u"].push_back(idx(cols, j));
    out.chains["chop:v"].push_back(idx(0, j));
  }
  for (const char* arc : {"rim-", "rim+", "chop:u", "chop:v"}) {
    out.roles[arc] = piece.arc(arc).role;
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SubMesh tessellate(const Piece& piece, int n) {
  if (n < 2) throw std::invalid_argument("resolution must be at least 2");
  switch (piece.kind) {
    case PieceKind::Octagon: return mesh_octagon(piece, n);
    case PieceKind::Annulus: return mesh_annulus(piece, n);
    case PieceKind::Wall: return mesh_wall(piece, n);
    case PieceKind::Disk: return mesh_disk(piece, n);
  }
  throw std::invalid_argument("unknown piece kind");
}

std::string GluingEntry::str() const {
  return piece_a + "." + arc_a + " <-> " + piece_b + "." + arc_b;
}

int SurfaceComplex::piece_index(const std::string& name) const {
  for (size_t i = 0; i < piece_names.size(); ++i) {
    if (piece_names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("no piece named " + name);
}

const std::vector<int>& SurfaceComplex::chain(const std::string& piece,
                                              const std::string& arc) const {
  auto it = chains.find(ChainKey{piece, arc});
  if (it == chains.end()) {
    throw std::invalid_argument("no chain " + piece + "." + arc);
  }
  return it->second;
}

SurfaceComplex glue(const std::vector<SubMesh>& meshes,
                    const GluingTable& table, double tol) {
  // Global ids: submesh vertices in order, then union-find over the
  // identifications declared in the table.
  std::vector<int> offset(meshes.size() + 1, 0);
  for (size_t m = 0; m < meshes.size(); ++m) {
    offset[m + 1] = offset[m] + static_cast<int>(meshes[m].verts.size());
  }
  int total = offset[meshes.size()];

  auto mesh_index = [&](const std::string& name) {
    for (size_t m = 0; m < meshes.size(); ++m) {
      if (meshes[m].piece == name) return m;
    }
    throw std::runtime_error("gluing names unknown piece " + name);
  };
  auto infinite = [&](size_t m, int local) {
    return !meshes[m].at_infinity.empty() && meshes[m].at_infinity[local];
  };

  UnionFind uf(total);
  for (const GluingEntry& entry : table.entries) {
    size_t ma = mesh_index(entry.piece_a);
    size_t mb = mesh_index(entry.piece_b);
    auto ita = meshes[ma].chains.find(entry.arc_a);
    auto itb = meshes[mb].chains.find(entry.arc_b);
    if (ita == meshes[ma].chains.end() || itb == meshes[mb].chains.end()) {
      throw std::runtime_error("gluing " + entry.str() + ": missing chain");
    }
    const auto& ca = ita->second;
    const auto& cb = itb->second;
    if (ca.size() != cb.size()) {
      throw std::runtime_error("gluing " + entry.str() +
                               ": chain lengths differ");
    }
    const int len = static_cast<int>(ca.size());
    for (int k = 0; k < len; ++k) {
      int la = ca[k];
      int lb = cb[entry.reversed ? len - 1 - k : k];
      if (!infinite(ma, la) && !infinite(mb, lb)) {
        Vec3 pa = meshes[ma].verts[la];
        Vec3 pb = meshes[mb].verts[lb];
        double d = (pa - pb).norm();
        if (d > tol) {
          throw std::runtime_error(
              "gluing " + entry.str() + ": sample " + std::to_string(k) +
              " positions differ by " + std::to_string(d));
        }
      }
      uf.unite(offset[ma] + la, offset[mb] + lb);
    }
  }

  SurfaceComplex out;
  std::vector<int> remap(total, -1);
  for (int g = 0; g < total; ++g) {
    int root = uf.find(g);
    if (remap[root] == -1) {
      remap[root] = static_cast<int>(out.verts.size());
      size_t m = 0;
      while (offset[m + 1] <= root) ++m;
      int local = root - offset[m];
      out.verts.push_back({meshes[m].verts[local], infinite(m, local)});
    }
    remap[g] = remap[root];
  }

  for (size_t m = 0; m < meshes.size(); ++m) {
    int piece_id = static_cast<int>(out.piece_names.size());
    out.piece_names.push_back(meshes[m].piece);
    for (const MeshFace& f : meshes[m].faces) {
      MeshFace g = f;
      g.piece = piece_id;
      for (int i = 0; i < g.n; ++i) g.v[i] = remap[offset[m] + f.v[i]];
      out.faces.push_back(g);
    }
    for (const auto& [arc, chain] : meshes[m].chains) {
      ChainKey key{meshes[m].piece, arc};
      std::vector<int> mapped(chain.size());
      for (size_t k = 0; k < chain.size(); ++k) {
        mapped[k] = remap[offset[m] + chain[k]];
      }
      out.chains[key] = std::move(mapped);
      out.roles[key] = meshes[m].roles.at(arc);
      out.glued[key] = false;
    }
  }
  for (const GluingEntry& entry : table.entries) {
    out.glued[ChainKey{entry.piece_a, entry.arc_a}] = true;
    out.glued[ChainKey{entry.piece_b, entry.arc_b}] = true;
  }
  return out;
}

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::map<EdgeKey, int> edge_face_counts(const SurfaceComplex& sc) {
  std::map<EdgeKey, int> counts;
  for (const MeshFace& f : sc.faces) {
    for (int i = 0; i < f.n; ++i) {
      ++counts[edge_key(f.v[i], f.v[(i + 1) % f.n])];
    }
  }
  for (const auto& [e, c] : counts) {
    if (c > 2) {
      throw std::runtime_error("edge shared by " + std::to_string(c) +
                               " faces; complex is not a surface");
    }
  }
  return counts;
}

}  // namespace

int SurfaceComplex::euler_characteristic() const {
  auto counts = edge_face_counts(*this);
  return static_cast<int>(verts.size()) - static_cast<int>(counts.size()) +
         static_cast<int>(faces.size());
}

bool SurfaceComplex::is_closed() const {
  for (const auto& [e, c] : edge_face_counts(*this)) {
    if (c == 1) return false;
  }
  return true;
}

std::vector<BoundaryLoop> SurfaceComplex::trace_boundary_loops() const {
  auto counts = edge_face_counts(*this);
  // Undirected adjacency over boundary edges. A consistent global direction
  // does not exist on a non-orientable surface, so loops are walked from
  // their smallest vertex toward its smaller neighbour.
  std::map<int, std::vector<int>> adj;
  for (const auto& [e, c] : counts) {
    if (c != 1) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2) {
      throw std::runtime_error("boundary vertex " + std::to_string(v) +
                               " has " + std::to_string(nbrs.size()) +
                               " boundary edges");
    }
    std::sort(nbrs.begin(), nbrs.end());
  }

  // Attribute each boundary edge to the unglued chain that carries it.
  std::map<EdgeKey, ChainKey> owner;
  for (const auto& [key, chain] : chains) {
    if (glued.at(key)) continue;
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      owner[edge_key(chain[k], chain[k + 1])] = key;
    }
  }

  std::vector<BoundaryLoop> loops;
  std::set<int> seen;
  for (const auto& [start, nbrs] : adj) {
    if (seen.count(start)) continue;
    std::vector<int> cycle;
    int prev = -1, at = start;
    do {
      cycle.push_back(at);
      seen.insert(at);
      const auto& candidates = adj.at(at);
      int step = candidates[0] == prev ? candidates[1] : candidates[0];
      prev = at;
      at = step;
    } while (at != start);

    BoundaryLoop loop;
    size_t len = cycle.size();
    // Rotate so the cycle starts where an arc begins.
    size_t first = 0;
    for (size_t i = 0; i < len; ++i) {
      const ChainKey& before =
          owner.at(edge_key(cycle[(i + len - 1) % len], cycle[i]));
      const ChainKey& after = owner.at(edge_key(cycle[i], cycle[(i + 1) % len]));
      if (!(before == after)) {
        first = i;
        break;
      }
    }
    std::rotate(cycle.begin(), cycle.begin() + first, cycle.end());
    loop.verts = cycle;

    for (size_t i = 0; i < len;) {
      ChainKey key = owner.at(edge_key(cycle[i], cycle[(i + 1) % len]));
      ArcRun run;
      run.arc = key;
      run.verts.push_back(cycle[i]);
      size_t j = i;
      while (j < len &&
             owner.at(edge_key(cycle[j % len], cycle[(j + 1) % len])) == key) {
        run.verts.push_back(cycle[(j + 1) % len]);
        ++j;
      }
      const auto& chain = chains.at(key);
      if (run.verts.size() != chain.size()) {
        throw std::runtime_error("boundary run does not cover chain " +
                                 key.str());
      }
      run.reversed = run.verts.front() != chain.front() ||
                     run.verts.back() != chain.back();
      loop.runs.push_back(std::move(run));
      i = j;
    }
    loops.push_back(std::move(loop));
  }
  std::sort(loops.begin(), loops.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.verts.begin(), a.verts.end()) <
           *std::min_element(b.verts.begin(), b.verts.end());
  });
  return loops;
}

int SurfaceComplex::boundary_component_count() const {
  return static_cast<int>(trace_boundary_loops().size());
}

bool SurfaceComplex::orientable() const {
  // Parity BFS: +1 keeps a face's stored winding, -1 flips it. Adjacent
  // faces must traverse their shared edge in opposite directions.
  std::map<EdgeKey, std::vector<std::pair<int, bool>>> edge_faces;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const MeshFace& f = faces[fi];
    for (int i = 0; i < f.n; ++i) {
      int a = f.v[i], b = f.v[(i + 1) % f.n];
      edge_faces[edge_key(a, b)].push_back({static_cast<int>(fi), a < b});
    }
  }
  std::vector<int> sign(faces.size(), 0);
  for (size_t seed = 0; seed < faces.size(); ++seed) {
    if (sign[seed] != 0) continue;
    sign[seed] = 1;
    std::vector<int> stack{static_cast<int>(seed)};
    while (!stack.empty()) {
      int fi = stack.back();
      stack.pop_back();
      const MeshFace& f = faces[fi];
      for (int i = 0; i < f.n; ++i) {
        int a = f.v[i], b = f.v[(i + 1) % f.n];
        for (auto [gi, gdir] : edge_faces.at(edge_key(a, b))) {
          if (gi == fi) continue;
          // Opposite traversal means same orientation sign.
          int want = (a < b) != gdir ? sign[fi] : -sign[fi];
          if (sign[gi] == 0) {
            sign[gi] = want;
            stack.push_back(gi);
          } else if (sign[gi] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace boykit
