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

#ifndef BOYKIT_VEC_HPP_
#define BOYKIT_VEC_HPP_

#include <array>
#include <cmath>
#include <compare>
#include <string>

namespace boykit {

struct Vec2 {
  double u = 0.0, v = 0.0;

  double& operator[](int i) { return i == 0 ? u : v; }
  double operator[](int i) const { return i == 0 ? u : v; }

  Vec2 operator+(Vec2 o) const { return {u + o.u, v + o.v}; }
  Vec2 operator-(Vec2 o) const { return {u - o.u, v - o.v}; }
  Vec2 operator*(double s) const { return {u * s, v * s}; }
  auto operator<=>(const Vec2&) const = default;

  double dot(Vec2 o) const { return u * o.u + v * o.v; }
  double cross(Vec2 o) const { return u * o.v - v * o.u; }
  double norm() const { return std::hypot(u, v); }
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  auto operator<=>(const Vec3&) const = default;

  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

// The three coordinate planes that carry copies of the planar pieces. They
// are listed in the order the three-fold symmetry cycles them, so that
// rho_next is a simple increment.
enum class PlaneId { XY = 0, ZX = 1, YZ = 2 };

inline constexpr std::array<PlaneId, 3> kPlanes{PlaneId::XY, PlaneId::ZX,
                                                PlaneId::YZ};

constexpr PlaneId rho_next(PlaneId p) {
  return static_cast<PlaneId>((static_cast<int>(p) + 1) % 3);
}

constexpr PlaneId rho_prev(PlaneId p) {
  return static_cast<PlaneId>((static_cast<int>(p) + 2) % 3);
}

// Index of the coordinate axis perpendicular to the plane.
constexpr int out_of_plane_axis(PlaneId p) {
  switch (p) {
    case PlaneId::XY: return 2;
    case PlaneId::ZX: return 1;
    default: return 0;  // YZ
  }
}

// Plane-local frames: XY uses (u,v) = (x,y), ZX uses (z,x), YZ uses (y,z).
constexpr int u_axis(PlaneId p) {
  switch (p) {
    case PlaneId::XY: return 0;
    case PlaneId::ZX: return 2;
    default: return 1;  // YZ
  }
}

constexpr int v_axis(PlaneId p) {
  switch (p) {
    case PlaneId::XY: return 1;
    case PlaneId::ZX: return 0;
    default: return 2;  // YZ
  }
}

constexpr const char* plane_name(PlaneId p) {
  switch (p) {
    case PlaneId::XY: return "XY";
    case PlaneId::ZX: return "ZX";
    default: return "YZ";
  }
}

// Places a plane-local point (u, v) at height h over the plane. The three
// embeddings are exact images of each other under the cyclic coordinate
// shift, which keeps positions on shared seams bit-identical.
inline Vec3 embed(PlaneId p, double u, double v, double h) {
  switch (p) {
    case PlaneId::XY: return {u, v, h};
    case PlaneId::ZX: return {v, h, u};
    default: return {h, u, v};  // YZ
  }
}

inline Vec3 embed(PlaneId p, Vec2 uv, double h) {
  return embed(p, uv.u, uv.v, h);
}

}  // namespace boykit

#endif  // BOYKIT_VEC_HPP_
