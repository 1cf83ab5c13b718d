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

#ifndef BOYKIT_CONE_PIZZA_HPP_
#define BOYKIT_CONE_PIZZA_HPP_

#include <array>
#include <string>
#include <vector>

#include "boykit/surface_complex.hpp"

namespace boykit {

// Rungs of the coned lid: radii T^(j/L) for j = 1..L, then the ideal apex.
inline constexpr int kLidLayers = 8;

struct ConeReport {
  bool friendly = false;
  int runs = 0;
  // Smallest angular gap between radial projections of non-adjacent
  // boundary arcs. Zero when the projection self-intersects.
  double min_clearance = 0.0;
  std::string failure;  // empty when friendly
};

// Checks that coning the band boundary from the origin keeps the lid
// embedded near the apex: the radial projection of the boundary loop onto
// the unit sphere must be a simple closed curve. Non-adjacent edges must
// not cross or touch, and consecutive edges must not backtrack.
ConeReport cone_friendliness(const SurfaceComplex& m, double tol = 1e-9);

// The lid alone: a disk made of ring copies of the band boundary at radii
// T^(j/L) and a cap of triangles to one ideal apex vertex (flagged
// at_infinity, carrying no geometric position). Requires truncation > 1.
SurfaceComplex build_pizza(int n, double truncation);

// The band with the lid attached along its boundary: a closed surface.
SurfaceComplex build_boys_surface(int n, double truncation, double tol = 1e-9);

enum class SliceKind {
  Planar,   // cone over the arc stays inside the arc's carrier plane
  Conical,  // cone over the arc stays inside one open coordinate orthant
};

struct SliceInfo {
  ChainKey arc;  // the boundary run this radial sector is coned over
  SliceKind kind = SliceKind::Planar;
  PlaneId plane = PlaneId::XY;
  // Orthant sign pattern of a conical sector; all zero for planar ones.
  std::array<int, 3> signs{};
};

// Classifies the 18 radial sectors of the lid by coordinate signs of the
// open arc they are coned over. Road and room arcs sit at height zero, so
// their sectors are exactly planar; rim arcs float at height +-1/3 and cone
// out through one orthant each.
std::vector<SliceInfo> classify_slices(const SurfaceComplex& m);

struct QuadricFit {
  // Unit-norm coefficients in the order x2, y2, z2, xy, yz, zx, x, y, z, 1.
  std::array<double, 10> coeffs{};
  // Root mean square of |Q(p)| / |grad Q(p)| over the unit-sphere samples.
  double residual_rms = 0.0;
};

// Least-squares quadric through the cone over one conical sector, sampled
// at two radii so the vanishing quadric is unique up to scale. Returns the
// eigenvector of the smallest eigenvalue of A^T A.
QuadricFit fit_slice_quadric(const SurfaceComplex& m, const SliceInfo& slice);

}  // namespace boykit

#endif  // BOYKIT_CONE_PIZZA_HPP_
