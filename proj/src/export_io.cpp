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

#include "boykit/export_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "boykit/octa_graph.hpp"
#include "boykit/pieces.hpp"
#include "boykit/rectilinear.hpp"

namespace boykit {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 exported_position(const CVertex& v, double clamp_radius) {
  if (!v.at_infinity) return v.pos;
  if (clamp_radius < 0) {
    throw std::runtime_error(
        "mesh has a vertex at infinity; pass a clamp radius to export it");
  }
  double len = v.pos.norm();
  if (len == 0.0) return {};
  return v.pos * (clamp_radius / len);
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

void write_obj(const SurfaceComplex& c, const std::string& path,
               double clamp_radius) {
  std::ofstream out = open_out(path, std::ios::out);
  char line[160];
  for (const CVertex& v : c.verts) {
    Vec3 p = exported_position(v, clamp_radius);
    std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", p.x, p.y, p.z);
    out << line;
  }
  int current_piece = -1;
  for (const MeshFace& f : c.faces) {
    if (f.piece != current_piece) {
      current_piece = f.piece;
      out << "g " << c.piece_names[current_piece] << "\n";
    }
    out << 'f';
    for (int i = 0; i < f.n; ++i) out << ' ' << f.v[i] + 1;
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

ParsedObj read_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  ParsedObj obj;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "v") {
      Vec3 p{};
      if (!(ss >> p.x >> p.y >> p.z))
        throw std::runtime_error("malformed vertex line: " + line);
      obj.verts.push_back(p);
    } else if (tag == "f") {
      MeshFace f;
      f.n = 0;
      std::string tok;
      while (ss >> tok) {
        if (f.n == 4)
          throw std::runtime_error("face with more than four vertices");
        // Indices may carry /texture/normal suffixes; only the first part
        // matters here.
        int idx = std::stoi(tok.substr(0, tok.find('/')));
        if (idx <= 0 || idx > static_cast<int>(obj.verts.size()))
          throw std::runtime_error("face index out of range: " + tok);
        f.v[f.n++] = idx - 1;
      }
      if (f.n < 3) throw std::runtime_error("face with fewer than three vertices");
      obj.faces.push_back(f);
    }
  }
  return obj;
}

SurfaceComplex ParsedObj::as_complex() const {
  SurfaceComplex sc;
  sc.piece_names.push_back("mesh");
  for (const Vec3& p : verts) sc.verts.push_back({p, false});
  for (MeshFace f : faces) {
    f.piece = 0;
    sc.faces.push_back(f);
  }
  return sc;
}

int ParsedObj::boundary_loop_count() const {
  std::map<std::pair<int, int>, int> counts;
  for (const MeshFace& f : faces) {
    for (int i = 0; i < f.n; ++i) {
      int a = f.v[i], b = f.v[(i + 1) % f.n];
      ++counts[{std::min(a, b), std::max(a, b)}];
    }
  }
  std::map<int, std::vector<int>> adj;
  for (const auto& [e, c] : counts) {
    if (c != 1) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2)
      throw std::runtime_error("boundary is not a union of closed loops");
  }
  int loops = 0;
  std::set<int> seen;
  for (const auto& [start, nbrs] : adj) {
    if (seen.count(start)) continue;
    ++loops;
    int prev = -1, at = start;
    do {
      seen.insert(at);
      const auto& cand = adj.at(at);
      int next = cand[0] == prev ? cand[1] : cand[0];
      prev = at;
      at = next;
    } while (at != start);
  }
  return loops;
}

namespace {

static_assert(std::endian::native == std::endian::little,
              "binary STL writer assumes a little-endian host");

void put_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  std::memcpy(b, &v, 4);
  os.write(b, 4);
}

void put_u16(std::ostream& os, std::uint16_t v) {
  char b[2];
  std::memcpy(b, &v, 2);
  os.write(b, 2);
}

void put_f32(std::ostream& os, double v) {
  float f = static_cast<float>(v);
  char b[4];
  std::memcpy(b, &f, 4);
  os.write(b, 4);
}

void put_vec(std::ostream& os, const Vec3& v) {
  put_f32(os, v.x);
  put_f32(os, v.y);
  put_f32(os, v.z);
}

void put_triangle(std::ostream& os, const Vec3& a, const Vec3& b,
                  const Vec3& c) {
  Vec3 n = (b - a).cross(c - a);
  double len = n.norm();
  put_vec(os, len > 0 ? n * (1.0 / len) : Vec3{});
  put_vec(os, a);
  put_vec(os, b);
  put_vec(os, c);
  put_u16(os, 0);
}

}  // namespace

void write_stl(const SurfaceComplex& c, const std::string& path,
               double clamp_radius) {
  std::vector<Vec3> pos;
  pos.reserve(c.verts.size());
  for (const CVertex& v : c.verts) pos.push_back(exported_position(v, clamp_radius));

  std::ofstream out = open_out(path, std::ios::out | std::ios::binary);
  char header[80] = "boykit binary mesh";
  out.write(header, sizeof header);
  std::uint32_t tris = 0;
  for (const MeshFace& f : c.faces) tris += f.n == 4 ? 2 : 1;
  put_u32(out, tris);
  for (const MeshFace& f : c.faces) {
    put_triangle(out, pos[f.v[0]], pos[f.v[1]], pos[f.v[2]]);
    if (f.n == 4) put_triangle(out, pos[f.v[0]], pos[f.v[2]], pos[f.v[3]]);
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

// --- SVG ---

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);  // normalise -0
  return buf;
}

void svg_path(std::ostream& os, const KitPath& p) {
  os << "  <path d=\"";
  for (size_t i = 0; i < p.pts.size(); ++i) {
    os << (i == 0 ? 'M' : 'L') << num(p.pts[i].u) << ' ' << num(p.pts[i].v);
  }
  if (p.closed) os << 'Z';
  os << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.4\"";
  if (p.dotted) os << " stroke-dasharray=\"1.2 1.2\"";
  os << "/>\n";
}

void write_svg(const std::string& path, double w, double h,
               const std::vector<KitPath>& paths,
               const std::vector<KitLabel>& labels) {
  std::ofstream out = open_out(path, std::ios::out);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(w) << "mm\" height=\"" << num(h) << "mm\" viewBox=\"0 0 "
      << num(w) << ' ' << num(h) << "\">\n";
  for (const KitPath& p : paths) svg_path(out, p);
  for (const KitLabel& l : labels) {
    out << "  <text x=\"" << num(l.pos.u) << "\" y=\"" << num(l.pos.v)
        << "\" font-family=\"sans-serif\" font-size=\"4\" fill=\"#000\">"
        << l.text << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

// Chains a piece's boundary arcs into one closed polyline by matching
// endpoints, dropping the repeated join points.
std::vector<Vec2> outline_of(const Piece& piece, int n) {
  struct Sampled {
    std::vector<Vec3> pts;
    bool used = false;
  };
  std::vector<Sampled> arcs;
  for (const BoundaryArc& a : piece.arcs) arcs.push_back({sample_arc(a, n)});

  auto uv = [&](const Vec3& p) -> Vec2 {
    return {p[u_axis(piece.plane)], p[v_axis(piece.plane)]};
  };
  auto close_to = [](const Vec3& a, const Vec3& b) {
    return (a - b).norm() < 1e-12;
  };

  std::vector<Vec2> out;
  std::vector<Vec3>& first = arcs[0].pts;
  arcs[0].used = true;
  for (const Vec3& p : first) out.push_back(uv(p));
  Vec3 cursor = first.back();
  for (size_t step = 1; step < arcs.size(); ++step) {
    bool found = false;
    for (Sampled& s : arcs) {
      if (s.used) continue;
      bool fwd = close_to(s.pts.front(), cursor);
      bool bwd = close_to(s.pts.back(), cursor);
      if (!fwd && !bwd) continue;
      s.used = true;
      if (bwd) std::reverse(s.pts.begin(), s.pts.end());
      for (size_t k = 1; k < s.pts.size(); ++k) out.push_back(uv(s.pts[k]));
      cursor = s.pts.back();
      found = true;
      break;
    }
    if (!found) throw std::runtime_error("piece boundary does not chain up");
  }
  out.pop_back();  // the loop closes on the first point
  return out;
}

}  // namespace

std::vector<KitPage> kit_layout() {
  const double s = kKitScale;
  const double margin = 12.0, gap = 4.0;

  std::vector<KitPage> pages(2);

  // Page 1: the cornered sheet. The horizontal solid line is the long slit
  // for joining two whole copies; the short vertical solid slit receives a
  // half copy from above; the vertical dotted line marks where the halves
  // of the third copy are cut. Slit placement is a free choice; assembly
  // only fixes which copy gets which cut.
  {
    KitPage& page = pages[0];
    const Vec2 c{page.width / 2, 80.0};
    auto at = [&](double u, double v) -> Vec2 {
      return {c.u + s * u, c.v - s * v};
    };
    KitPath outline;
    outline.closed = true;
    for (Vec2 uv : outline_of(make_octagon(PlaneId::XY), 16))
      outline.pts.push_back(at(uv.u, uv.v));
    page.paths.push_back(outline);
    page.paths.push_back({{at(-1, 0), at(0, 0)}, false, false});
    page.paths.push_back({{at(0, 1), at(0, 0.5)}, false, false});
    page.paths.push_back({{at(0, 0.5), at(0, 0)}, true, false});
    page.paths.push_back({{at(0, 0), at(0, -0.5)}, true, false});
    page.labels.push_back({{c.u - 20.0, c.v + s * 1.2 + 8.0}, "sheet piece"});
  }

  // Page 2: six wall strips with their mismatch tabs, then three
  // ring-plus-disk pieces with slit arcs and access cuts.
  {
    KitPage& page = pages[1];
    const double len = 1.5 * kPi * s;   // developed wall length
    const double wid = (2.0 / 3.0) * s; // developed wall width
    const double tab = 0.05 * len;
    const double x0 = margin + tab;
    for (int i = 0; i < 6; ++i) {
      double top = margin + i * (wid + gap);
      double yc = top + wid / 2;
      KitPath body;
      body.closed = true;
      body.pts = {{x0, top}, {x0 + len, top}, {x0 + len, top + wid}, {x0, top + wid}};
      page.paths.push_back(body);
      KitPath tab_path;
      tab_path.pts = {{x0, yc - wid / 4},
                      {x0 - tab, yc - wid / 4},
                      {x0 - tab, yc + wid / 4},
                      {x0, yc + wid / 4}};
      page.paths.push_back(tab_path);
      KitPath slit;
      slit.dotted = true;
      slit.pts = {{x0 + wid / 2, yc}, {x0 + len - wid / 2, yc}};
      page.paths.push_back(slit);
    }
    page.labels.push_back({{x0, margin - 3.0}, "wall strips"});

    const double r_out = (4.0 / 3.0) * s;
    double rings_top = margin + 6 * (wid + gap);
    Vec2 centers[3] = {{margin + r_out, rings_top + r_out},
                       {margin + 3 * r_out + gap, rings_top + r_out},
                       {margin + r_out, rings_top + 3 * r_out + gap}};
    for (const Vec2& c : centers) {
      auto pt = [&](double r, double theta) -> Vec2 {
        return {c.u + s * r * std::cos(theta), c.v - s * r * std::sin(theta)};
      };
      KitPath outline;
      outline.closed = true;
      const int m = 48;
      // Outer rim over three quarters, from theta = -pi to pi/2.
      for (int k = 0; k <= m; ++k)
        outline.pts.push_back(pt(4.0 / 3.0, -kPi + (1.5 * kPi) * k / m));
      // Down the end radius, around the exposed quarter of the disk, and
      // back out along the other end radius.
      outline.pts.push_back(pt(2.0 / 3.0, 0.5 * kPi));
      for (int k = 1; k <= m / 3; ++k)
        outline.pts.push_back(
            pt(2.0 / 3.0, 0.5 * kPi + (0.5 * kPi) * k / (m / 3)));
      page.paths.push_back(outline);

      KitPath slit;
      slit.dotted = true;
      const double inset = kPi / 12;
      for (int k = 0; k <= m; ++k)
        slit.pts.push_back(
            pt(1.0, -kPi + inset + (1.5 * kPi - 2 * inset) * k / m));
      page.paths.push_back(slit);

      KitPath access;
      access.dotted = true;
      access.pts = {pt(4.0 / 3.0, -0.25 * kPi), pt(1.0, -0.25 * kPi)};
      page.paths.push_back(access);
    }
    page.labels.push_back(
        {{margin + 2 * r_out + gap + 4.0, rings_top + 2 * r_out + gap + 4.0},
         "ring and disk"});
  }
  return pages;
}

void export_kit(const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto pages = kit_layout();
  write_svg(dir + "/kit_page1.svg", pages[0].width, pages[0].height,
            pages[0].paths, pages[0].labels);
  write_svg(dir + "/kit_page2.svg", pages[1].width, pages[1].height,
            pages[1].paths, pages[1].labels);
}

void export_flat_layout(const FlatLayout& layout, const std::string& path) {
  // Three copies: the fundamental strip, its deck image, and the full
  // period, demonstrating how the development tiles an infinite band.
  std::vector<Isom2> copies{Isom2{}, layout.deck, layout.closure};

  std::vector<KitPath> paths;
  auto place = [](const Isom2& iso, const Vec2& p) -> Vec2 {
    Vec2 q = iso.apply(p);
    return {q.u, -q.v};  // SVG's vertical axis points down
  };
  for (const Isom2& iso : copies) {
    for (const DevArc& arc : layout.arcs) {
      KitPath p;
      for (const Vec2& q : arc.pts) p.pts.push_back(place(iso, q));
      paths.push_back(p);
    }
    for (const auto& seam : layout.seams) {
      paths.push_back(
          {{place(iso, seam.first), place(iso, seam.second)}, true, false});
    }
    for (const auto& rect : layout.wall_rects) {
      KitPath p;
      p.dotted = true;
      p.closed = true;
      for (const Vec2& q : rect) p.pts.push_back(place(iso, q));
      paths.push_back(p);
    }
  }

  Vec2 lo{1e30, 1e30}, hi{-1e30, -1e30};
  for (const KitPath& p : paths) {
    for (const Vec2& q : p.pts) {
      lo.u = std::min(lo.u, q.u);
      lo.v = std::min(lo.v, q.v);
      hi.u = std::max(hi.u, q.u);
      hi.v = std::max(hi.v, q.v);
    }
  }
  double w = hi.u - lo.u, h = hi.v - lo.v;
  double pad = 0.05 * std::max(w, h);

  std::ofstream out = open_out(path, std::ios::out);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << num(lo.u - pad) << ' ' << num(lo.v - pad) << ' ' << num(w + 2 * pad)
      << ' ' << num(h + 2 * pad) << "\">\n";
  for (KitPath p : paths) {
    // Reuse the kit path element with a hairline width suited to the
    // development's unit scale.
    out << "  <path d=\"";
    for (size_t i = 0; i < p.pts.size(); ++i)
      out << (i == 0 ? 'M' : 'L') << num(p.pts[i].u) << ' ' << num(p.pts[i].v);
    if (p.closed) out << 'Z';
    out << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.02\"";
    if (p.dotted) out << " stroke-dasharray=\"0.06 0.06\"";
    out << "/>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed for " + path);
}

// --- verification suite ---

namespace {

std::string sign_string(const std::array<int, 3>& s) {
  std::string out;
  for (int c : s) out += c > 0 ? '+' : (c < 0 ? '-' : '0');
  return out;
}

}  // namespace

VerificationResults run_full_suite(const SuiteOptions& opt) {
  VerificationResults r;
  r.options = opt;
  auto add = [&r](const std::string& name, bool pass) {
    r.checks.push_back({name, pass});
    if (!pass && r.first_failure.empty()) r.first_failure = name;
  };

  if (opt.tamper_first_seam) {
    std::vector<SubMesh> meshes;
    for (const Piece& piece : make_all_pieces())
      meshes.push_back(tessellate(piece, opt.resolution));
    GluingTable table = m_gluing_table();
    table.entries.front().reversed = !table.entries.front().reversed;
    glue(meshes, table, opt.tolerance);  // throws, naming the seam
  }

  SurfaceComplex m = build_M(opt.resolution, opt.tolerance);
  r.euler_m = m.euler_characteristic();
  r.loops_m = m.boundary_component_count();
  r.orientable_m = m.orientable();
  add("band euler characteristic is zero", r.euler_m == 0);
  add("band has one boundary loop", r.loops_m == 1);
  add("band is non-orientable", !r.orientable_m);

  SurfaceComplex head = build_H(opt.resolution, opt.tolerance);
  r.euler_h = head.euler_characteristic();
  r.loops_h = head.boundary_component_count();
  add("head euler characteristic is minus three", r.euler_h == -3);
  add("head has four boundary loops", r.loops_h == 4);

  r.circuit = boundary_circuit(m);
  r.circuit_matches = circuits_equivalent(expand_circuit(), r.circuit);
  add("boundary circuit matches the graph walk", r.circuit_matches);

  r.symmetry = check_symmetry(m, opt.tolerance);
  add("six symmetries act exactly",
      r.symmetry.group_size == 6 && r.symmetry.vertices_match &&
          r.symmetry.faces_match &&
          r.symmetry.max_vertex_distance <= opt.tolerance);
  add("point reflection is not a symmetry",
      !r.symmetry.contains_point_reflection);

  r.cone = cone_friendliness(m, opt.tolerance);
  add("boundary loop is cone friendly",
      r.cone.friendly && r.cone.min_clearance > 0 && r.cone.runs == 18);

  SurfaceComplex boy =
      build_boys_surface(opt.resolution, opt.truncation, opt.tolerance);
  r.euler_boy = boy.euler_characteristic();
  r.loops_boy = boy.boundary_component_count();
  r.orientable_boy = boy.orientable();
  add("coned surface has euler characteristic one", r.euler_boy == 1);
  add("coned surface is closed and non-orientable",
      boy.is_closed() && !r.orientable_boy && r.loops_boy == 0);

  auto slices = classify_slices(m);
  for (const SliceInfo& s : slices) {
    if (s.kind == SliceKind::Planar) {
      ++r.planar_slices;
    } else {
      ++r.conical_slices;
      r.orthants[s.arc.str()] = sign_string(s.signs);
      QuadricFit fit = fit_slice_quadric(m, s);
      r.quadric_residual_max =
          std::max(r.quadric_residual_max, fit.residual_rms);
    }
  }
  add("twelve planar and six conical slices",
      r.planar_slices == 12 && r.conical_slices == 6);
  std::set<std::string> distinct;
  for (const auto& [arc, signs] : r.orthants) distinct.insert(signs);
  auto xy_rim = r.orthants.find("B_XY.rim+");
  add("conical slices occupy six distinct orthants",
      distinct.size() == 6 && xy_rim != r.orthants.end() &&
          xy_rim->second == "+-+");
  add("conical slices fit quadric cones",
      r.conical_slices == 6 && r.quadric_residual_max < 1e-6);

  FlatLayout layout = develop_corridor(opt.resolution);
  r.geodesic = total_geodesic_curvature(layout);
  r.wall_length = layout.wall_length;
  r.wall_width = layout.wall_width;
  bool rects_ok = layout.wall_rects.size() == 6;
  for (const auto& rect : layout.wall_rects) {
    double a = (rect[1] - rect[0]).norm();
    double b = (rect[2] - rect[1]).norm();
    double c = (rect[3] - rect[2]).norm();
    double d = (rect[0] - rect[3]).norm();
    bool alternate = std::abs(a - c) <= 1e-12 && std::abs(b - d) <= 1e-12;
    bool sized = (std::abs(a - 1.5 * kPi) <= 1e-9 &&
                  std::abs(b - 2.0 / 3.0) <= 1e-9) ||
                 (std::abs(a - 2.0 / 3.0) <= 1e-9 &&
                  std::abs(b - 1.5 * kPi) <= 1e-9);
    rects_ok = rects_ok && alternate && sized;
  }
  add("development closes into flat wall rectangles", rects_ok);
  add("total boundary turning is nine pi",
      std::abs(r.geodesic.absolute - 9 * kPi) <= 0.01);
  add("net boundary turning vanishes",
      std::abs(r.geodesic.signed_total) <= 1e-9);

  auto cubes = build_omega();
  r.cubes = static_cast<int>(cubes.size());
  r.unit_cubes = count_unit_cubes();
  std::map<std::string, int> groups;
  for (const RectCube& c : cubes) ++groups[c.group];
  add("solid tiles into forty-six cubes",
      r.cubes == 46 && groups["core"] == 1 && groups["arm"] == 6 &&
          groups["chain"] == 27 && groups["disk"] == 12 &&
          r.unit_cubes == 368);

  SurfaceComplex msq = build_m_square();
  r.euler_msq = msq.euler_characteristic();
  r.loops_msq = msq.boundary_component_count();
  r.orientable_msq = msq.orientable();
  add("integer band is a Moebius band",
      r.euler_msq == 0 && r.loops_msq == 1 && !r.orientable_msq);

  auto msq_loops = msq.trace_boundary_loops();
  bool distinct_pts = msq_loops.size() == 1;
  if (distinct_pts) {
    std::set<std::array<long, 3>> pts;
    for (int v : msq_loops[0].verts) {
      const Vec3& p = msq.verts[v].pos;
      pts.insert({std::lround(p.x), std::lround(p.y), std::lround(p.z)});
    }
    distinct_pts = pts.size() == msq_loops[0].verts.size();
  }
  add("integer band boundary is embedded on the solid surface",
      distinct_pts && boundary_on_solid_surface(msq));

  FacePaint paint = paint_faces(msq);
  r.census_max_faces = paint.max_faces_per_cube;
  r.census_edge_adjacent = paint.faces_edge_adjacent;
  r.census_all_touched =
      static_cast<int>(paint.faces_of_cube.size()) == r.unit_cubes;
  bool counts_ok = true;
  for (const auto& [cube, faces] : paint.faces_of_cube)
    counts_ok = counts_ok && !faces.empty() && faces.size() <= 3;
  for (const auto& owners : paint.cubes_of_face)
    counts_ok = counts_ok && owners.size() == 2;
  add("every unit cube meets one to three adjacent band faces",
      r.census_all_touched && r.census_edge_adjacent && counts_ok);

  r.all_passed = r.first_failure.empty();
  return r;
}

std::string emit_report(const VerificationResults& r) {
  using nlohmann::json;
  json j;
  j["boundary_components"] = {{"H", r.loops_h},
                              {"M", r.loops_m},
                              {"boy", r.loops_boy},
                              {"m_square", r.loops_msq}};
  json checks = json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["checks"] = checks;

  json steps = json::array();
  for (const CircuitStep& s : r.circuit.steps) {
    steps.push_back({{"direction", s.from.str() + "->" + s.to.str()},
                     {"kind", s.kind == StepKind::Road ? "road" : "lane"},
                     {"label", s.label.str()},
                     {"lane", s.kind == StepKind::Lane ? lane_name(s.lane) : "-"},
                     {"plane", plane_name(s.plane)}});
  }
  j["circuit"] = {{"matches_boundary", r.circuit_matches}, {"steps", steps}};
  j["cone"] = {{"friendly", r.cone.friendly},
               {"min_clearance", r.cone.min_clearance},
               {"runs", r.cone.runs}};
  j["corridor_order"] = corridor_order();
  j["development"] = {{"wall_length", r.wall_length},
                      {"wall_width", r.wall_width}};
  j["euler"] = {{"H", r.euler_h},
                {"M", r.euler_m},
                {"boy", r.euler_boy},
                {"m_square", r.euler_msq}};
  j["first_failure"] = r.first_failure;
  j["geodesic_signed"] = r.geodesic.signed_total;
  j["geodesic_total"] = r.geodesic.absolute;
  j["orientable"] = {{"M", r.orientable_m},
                     {"boy", r.orientable_boy},
                     {"m_square", r.orientable_msq}};
  j["passed"] = r.all_passed;
  j["quadric_residual_max"] = r.quadric_residual_max;
  j["rectilinear"] = {{"census",
                       {{"all_cubes_touched", r.census_all_touched},
                        {"edge_adjacent", r.census_edge_adjacent},
                        {"max_faces", r.census_max_faces}}},
                      {"cubes", r.cubes},
                      {"unit_cubes", r.unit_cubes}};
  j["resolution"] = r.options.resolution;
  j["slices"] = {{"conical", r.conical_slices},
                 {"orthants", r.orthants},
                 {"planar", r.planar_slices}};
  j["symmetry"] = {{"faces_match", r.symmetry.faces_match},
                   {"group_size", r.symmetry.group_size},
                   {"max_vertex_distance", r.symmetry.max_vertex_distance},
                   {"point_reflection", r.symmetry.contains_point_reflection},
                   {"vertices_match", r.symmetry.vertices_match}};
  j["tolerance"] = r.options.tolerance;
  j["truncation"] = r.options.truncation;
  return j.dump(2) + "\n";
}

std::string emit_facepaint() {
  using nlohmann::json;
  SurfaceComplex msq = build_m_square();
  FacePaint paint = paint_faces(msq);

  json j;
  json cubes = json::array();
  for (const RectCube& c : build_omega()) {
    json entry = {{"group", c.group}, {"min", c.min}};
    if (c.group != "core") entry["plane"] = plane_name(c.plane);
    cubes.push_back(entry);
  }
  j["cubes"] = cubes;
  j["census"] = {{"all_cubes_touched",
                  paint.faces_of_cube.size() ==
                      static_cast<size_t>(count_unit_cubes())},
                 {"edge_adjacent", paint.faces_edge_adjacent},
                 {"max_faces", paint.max_faces_per_cube}};
  j["faces"] = msq.faces.size();
  json painted = json::object();
  for (const auto& [cube, faces] : paint.faces_of_cube) {
    std::string key = std::to_string(cube[0]) + "," +
                      std::to_string(cube[1]) + "," + std::to_string(cube[2]);
    painted[key] = faces;
  }
  j["painted_faces"] = painted;
  j["unit_cubes"] = count_unit_cubes();
  return j.dump(2) + "\n";
}

}  // namespace boykit
