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

#include "boykit/cone_pizza.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "boykit/assembly.hpp"

namespace boykit {
namespace {

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

// s is a point of the great circle with normal n = a x b; true when it lies
// on the arc from a to b (the short way). The slack makes touching count.
bool in_arc(const Vec3& s, const Vec3& a, const Vec3& b, const Vec3& n) {
  return a.cross(s).dot(n) >= -1e-12 && s.cross(b).dot(n) >= -1e-12;
}

bool arcs_cross(const Vec3& a, const Vec3& b, const Vec3& na, const Vec3& c,
                const Vec3& d, const Vec3& nc) {
  Vec3 line = na.cross(nc);
  double ln = line.norm();
  if (ln < 1e-14) {
    // Same great circle: the arcs cross iff they overlap.
    return in_arc(a, c, d, nc) || in_arc(b, c, d, nc) || in_arc(c, a, b, na) ||
           in_arc(d, a, b, na);
  }
  Vec3 s = line * (1.0 / ln);
  Vec3 t = s * -1.0;
  return (in_arc(s, a, b, na) && in_arc(s, c, d, nc)) ||
         (in_arc(t, a, b, na) && in_arc(t, c, d, nc));
}

// Angular distance from a unit point to the great-circle arc from a to b.
double point_arc_distance(const Vec3& p, const Vec3& a, const Vec3& b,
                          const Vec3& n_unit) {
  double off = p.dot(n_unit);
  Vec3 foot = p - n_unit * off;
  double fn = foot.norm();
  if (fn > 1e-15 && in_arc(foot * (1.0 / fn), a, b, n_unit)) {
    return std::asin(std::clamp(std::abs(off), 0.0, 1.0));
  }
  return std::min(angle_between(p, a), angle_between(p, b));
}

PlaneId plane_of_piece(const std::string& piece) {
  if (piece.size() < 2) throw std::runtime_error("unnamed piece plane");
  std::string tag = piece.substr(piece.size() - 2);
  if (tag == "XY") return PlaneId::XY;
  if (tag == "ZX") return PlaneId::ZX;
  if (tag == "YZ") return PlaneId::YZ;
  throw std::runtime_error("piece " + piece + " has no plane tag");
}

// Appends ring copies of `base` (a cyclic vertex sequence) at radii
// T^(j/L), quads between consecutive rings, and an apex fan. The apex is an
// ideal vertex: it carries no position and is flagged at_infinity.
void emit_lid(SurfaceComplex* sc, const std::vector<int>& base, double trunc,
              int layers) {
  int piece = static_cast<int>(sc->piece_names.size());
  sc->piece_names.push_back("P");
  const int ring = static_cast<int>(base.size());
  std::vector<int> prev = base;
  for (int j = 1; j <= layers; ++j) {
    double t = std::pow(trunc, static_cast<double>(j) / layers);
    std::vector<int> cur(ring);
    for (int i = 0; i < ring; ++i) {
      cur[i] = static_cast<int>(sc->verts.size());
      sc->verts.push_back({sc->verts[base[i]].pos * t, false});
    }
    for (int i = 0; i < ring; ++i) {
      int k = (i + 1) % ring;
      sc->faces.push_back({{prev[i], prev[k], cur[k], cur[i]}, 4, piece});
    }
    prev = cur;
  }
  int apex = static_cast<int>(sc->verts.size());
  sc->verts.push_back({Vec3{}, true});
  for (int i = 0; i < ring; ++i) {
    sc->faces.push_back({{prev[i], prev[(i + 1) % ring], apex, -1}, 3, piece});
  }
}

BoundaryLoop single_loop(const SurfaceComplex& m, const char* who) {
  auto loops = m.trace_boundary_loops();
  if (loops.size() != 1) {
    throw std::runtime_error(std::string(who) +
                             ": band boundary must be a single loop");
  }
  return std::move(loops.front());
}

}  // namespace

ConeReport cone_friendliness(const SurfaceComplex& m, double tol) {
  ConeReport rep;
  auto loops = m.trace_boundary_loops();
  if (loops.size() != 1) {
    rep.failure = "boundary is not a single loop";
    return rep;
  }
  const BoundaryLoop& loop = loops.front();
  rep.runs = static_cast<int>(loop.runs.size());

  const int nv = static_cast<int>(loop.verts.size());
  std::vector<Vec3> unit(nv);
  for (int i = 0; i < nv; ++i) {
    Vec3 p = m.verts[loop.verts[i]].pos;
    double len = p.norm();
    if (len < tol) {
      rep.failure = "boundary passes through the projection center";
      return rep;
    }
    unit[i] = p * (1.0 / len);
  }

  // Edge ownership: runs partition the loop in order, sharing endpoints.
  std::vector<int> edge_run(nv);
  {
    int e = 0;
    for (int r = 0; r < rep.runs; ++r) {
      for (std::size_t k = 0; k + 1 < loop.runs[r].verts.size(); ++k) {
        edge_run[e++] = r;
      }
    }
    if (e != nv) {
      rep.failure = "boundary runs do not partition the loop";
      return rep;
    }
  }

  std::vector<Vec3> normal(nv);
  for (int i = 0; i < nv; ++i) {
    normal[i] = unit[i].cross(unit[(i + 1) % nv]);
    if (normal[i].norm() < 1e-15) {
      rep.failure = "two boundary samples project to the same ray";
      return rep;
    }
  }

  // Consecutive edges must not fold back along each other.
  for (int i = 0; i < nv; ++i) {
    const Vec3& u = unit[(i + nv - 1) % nv];
    const Vec3& v = unit[i];
    const Vec3& w = unit[(i + 1) % nv];
    Vec3 back = u - v * u.dot(v);
    Vec3 fwd = w - v * w.dot(v);
    double bn = back.norm(), fn = fwd.norm();
    if (bn < 1e-15 || fn < 1e-15) {
      rep.failure = "degenerate corner in the projected boundary";
      return rep;
    }
    if (back.dot(fwd) / (bn * fn) > 1.0 - 1e-9) {
      rep.failure = "projected boundary backtracks at a corner";
      return rep;
    }
  }

  // Non-adjacent edges must not meet on the sphere.
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 2; j < nv; ++j) {
      if (i == 0 && j == nv - 1) continue;  // cyclically adjacent
      if (arcs_cross(unit[i], unit[(i + 1) % nv], normal[i], unit[j],
                     unit[(j + 1) % nv], normal[j])) {
        rep.failure = "projected arcs " + loop.runs[edge_run[i]].arc.str() +
                      " and " + loop.runs[edge_run[j]].arc.str() + " cross";
        return rep;
      }
    }
  }
  rep.friendly = true;

  // Clearance: smallest gap between projections of non-adjacent runs.
  std::vector<Vec3> nhat(nv);
  for (int i = 0; i < nv; ++i) nhat[i] = normal[i] * (1.0 / normal[i].norm());
  std::vector<int> run_first(rep.runs + 1, 0);
  for (int i = 0; i < nv; ++i) run_first[edge_run[i] + 1] = i + 1;

  double best = 4.0;
  for (int r = 0; r < rep.runs; ++r) {
    for (int s = r + 1; s < rep.runs; ++s) {
      int gap = std::min(s - r, rep.runs - (s - r));
      if (gap <= 1) continue;  // same or neighboring run
      for (int e = run_first[r]; e < run_first[r + 1]; ++e) {
        for (int f = run_first[s]; f < run_first[s + 1]; ++f) {
          best = std::min(best, point_arc_distance(unit[e], unit[f],
                                                   unit[(f + 1) % nv], nhat[f]));
          best = std::min(best, point_arc_distance(unit[f], unit[e],
                                                   unit[(e + 1) % nv], nhat[e]));
        }
      }
    }
  }
  rep.min_clearance = best;
  return rep;
}

SurfaceComplex build_pizza(int n, double truncation) {
  if (truncation <= 1.0) {
    throw std::invalid_argument("build_pizza: truncation must exceed 1");
  }
  SurfaceComplex m = build_M(n);
  BoundaryLoop loop = single_loop(m, "build_pizza");

  SurfaceComplex sc;
  std::vector<int> base(loop.verts.size());
  for (std::size_t i = 0; i < loop.verts.size(); ++i) {
    base[i] = static_cast<int>(i);
    sc.verts.push_back({m.verts[loop.verts[i]].pos, false});
  }
  // Keep the band's arc structure on the base ring so the lid's boundary
  // reads back as the same 18 runs.
  std::map<int, int> to_local;
  for (std::size_t i = 0; i < loop.verts.size(); ++i) {
    to_local[loop.verts[i]] = static_cast<int>(i);
  }
  for (const ArcRun& run : loop.runs) {
    ChainKey key{"P", run.arc.str()};
    std::vector<int> chain(run.verts.size());
    for (std::size_t k = 0; k < run.verts.size(); ++k) {
      chain[k] = to_local.at(run.verts[k]);
    }
    if (run.reversed) std::reverse(chain.begin(), chain.end());
    sc.chains[key] = std::move(chain);
    sc.roles[key] = m.roles.at(run.arc);
    sc.glued[key] = false;
  }
  emit_lid(&sc, base, truncation, kLidLayers);
  return sc;
}

SurfaceComplex build_boys_surface(int n, double truncation, double tol) {
  if (truncation <= 1.0) {
    throw std::invalid_argument("build_boys_surface: truncation must exceed 1");
  }
  SurfaceComplex sc = build_M(n, tol);
  BoundaryLoop loop = single_loop(sc, "build_boys_surface");
  emit_lid(&sc, loop.verts, truncation, kLidLayers);
  return sc;
}

std::vector<SliceInfo> classify_slices(const SurfaceComplex& m) {
  BoundaryLoop loop = single_loop(m, "classify_slices");
  std::vector<SliceInfo> out;
  for (const ArcRun& run : loop.runs) {
    SliceInfo info;
    info.arc = run.arc;
    info.plane = plane_of_piece(run.arc.piece);

    // Sign survey over the open arc: +1 / -1 strict, 0 exactly zero,
    // 2 mixed. Endpoints are shared with neighboring sectors and excluded.
    std::array<int, 3> signs{};
    for (int axis = 0; axis < 3; ++axis) {
      bool zero = true, pos = true, neg = true;
      for (std::size_t k = 1; k + 1 < run.verts.size(); ++k) {
        double c = m.verts[run.verts[k]].pos[axis];
        zero = zero && c == 0.0;
        pos = pos && c > 0.0;
        neg = neg && c < 0.0;
      }
      signs[axis] = zero ? 0 : pos ? 1 : neg ? -1 : 2;
    }

    if (signs[out_of_plane_axis(info.plane)] == 0) {
      info.kind = SliceKind::Planar;
    } else {
      info.kind = SliceKind::Conical;
      if (signs[0] * signs[1] * signs[2] == 0 || std::abs(signs[0]) > 1 ||
          std::abs(signs[1]) > 1 || std::abs(signs[2]) > 1) {
        throw std::runtime_error("classify_slices: sector " + run.arc.str() +
                                 " is not confined to one orthant");
      }
      info.signs = signs;
    }
    out.push_back(info);
  }
  return out;
}

QuadricFit fit_slice_quadric(const SurfaceComplex& m, const SliceInfo& slice) {
  const std::vector<int>& chain = m.chain(slice.arc.piece, slice.arc.arc);
  std::vector<Vec3> samples;
  samples.reserve(chain.size() * 2);
  for (int id : chain) {
    Vec3 p = m.verts[id].pos;
    double len = p.norm();
    if (len < 1e-12) {
      throw std::runtime_error("fit_slice_quadric: sample at the apex ray");
    }
    Vec3 u = p * (1.0 / len);
    samples.push_back(u);
    samples.push_back(u * 2.0);  // second radius pins down the scale terms
  }

  Eigen::MatrixXd a(samples.size(), 10);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Vec3& p = samples[i];
    a(i, 0) = p.x * p.x;
    a(i, 1) = p.y * p.y;
    a(i, 2) = p.z * p.z;
    a(i, 3) = p.x * p.y;
    a(i, 4) = p.y * p.z;
    a(i, 5) = p.z * p.x;
    a(i, 6) = p.x;
    a(i, 7) = p.y;
    a(i, 8) = p.z;
    a(i, 9) = 1.0;
  }
  Eigen::Matrix<double, 10, 10> ata = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 10, 10>> eigen(ata);
  Eigen::Matrix<double, 10, 1> c = eigen.eigenvectors().col(0);

  QuadricFit fit;
  for (int i = 0; i < 10; ++i) fit.coeffs[i] = c(i);

  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < samples.size(); i += 2) {
    const Vec3& p = samples[i];  // the unit-sphere copy
    double q = c(0) * p.x * p.x + c(1) * p.y * p.y + c(2) * p.z * p.z +
               c(3) * p.x * p.y + c(4) * p.y * p.z + c(5) * p.z * p.x +
               c(6) * p.x + c(7) * p.y + c(8) * p.z + c(9);
    Vec3 grad{2 * c(0) * p.x + c(3) * p.y + c(5) * p.z + c(6),
              2 * c(1) * p.y + c(3) * p.x + c(4) * p.z + c(7),
              2 * c(2) * p.z + c(4) * p.y + c(5) * p.x + c(8)};
    double g = std::max(grad.norm(), 1e-12);
    sum += (q / g) * (q / g);
    ++count;
  }
  fit.residual_rms = std::sqrt(sum / count);
  return fit;
}

}  // namespace boykit
