#pragma once

// Lifting a 3-homogeneous bitrade to its tessellation of the Euclidean plane.
//
// The base entry is placed on the shaded triangle directly above the black
// vertex at the origin. Shaded triangles are then reached breadth-first by
// the rotations rho(p) through 2*pi/3 anticlockwise about the triangle's
// black (p = 0), white (p = 1) or star (p = 2) vertex, and their inverses.
// A triangle reached by rho(p) from a triangle labelled x is labelled
// x.tau(p) (x.tau(p)^-1 for the inverse). Unshaded triangles carry the
// T-oti entry sharing row and column with the shaded triangle across their
// solid side.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "lattice.hpp"
#include "permrep.hpp"

namespace latintrade {

struct PlanarTriangle {
  Entry label;
  bool shaded = true;
  LatticeTriangle vertices; // black, white, star

  std::array<double, 2> point(std::size_t v) const { return to_plane(vertices[v]); }
  std::array<double, 2> centroid() const {
    auto c = to_plane(centroid_times3(vertices));
    return {c[0] / 3.0, c[1] / 3.0};
  }
};

/// A triangle reached along two paths with different labels.
struct LabelConflict {
  LatticeTriangle triangle;
  Entry existing;
  Entry propagated;
};

struct TessellationDrawing {
  static constexpr const char *axis_convention =
      "origin at a black vertex; +x through a star vertex; +y bisects the base shaded triangle";

  std::vector<PlanarTriangle> triangles; // shaded first, then unshaded, each ordered by vertices
  double radius = 0.0;
  std::optional<Entry> base;
  std::vector<LabelConflict> conflicts;
  /// Optional fundamental-domain parallelogram spanned from the origin, in
  /// vertex coordinates.
  std::optional<std::array<LatticePoint, 2>> fundamental_domain;
};

/// Radius of a disk with the area of `domains` copies of the torus for `b`
/// (|T-dia| shaded plus |T-oti| unshaded unit triangles), scaled linearly.
inline double fundamental_domain_radius(const Bitrade &b, double domains) {
  const double area = static_cast<double>(b.size()) * std::sqrt(3.0) / 2.0;
  return domains * std::sqrt(area);
}

namespace detail {

struct ShadedKey {
  LatticePoint black;
  int k;
  friend auto operator<=>(const ShadedKey &, const ShadedKey &) = default;
};

inline ShadedKey rotate_shaded(const ShadedKey &t, std::size_t pivot, int turns) {
  const LatticeTriangle tri = shaded_triangle(t.black, t.k);
  const LatticePoint centre = tri[pivot];
  const LatticeTriangle moved{rotate_120_about(tri.black, centre, turns),
                              rotate_120_about(tri.white, centre, turns),
                              rotate_120_about(tri.star, centre, turns)};
  return {moved.black, orientation_of(moved)};
}

inline bool within(const LatticeTriangle &t, double radius) {
  // norm2_times4(3c) / 36 = |c|^2 for centroid c.
  const double n = static_cast<double>(norm2_times4(centroid_times3(t))) / 36.0;
  return n <= radius * radius + 1e-9;
}

} // namespace detail

inline TessellationDrawing lift_to_plane(const Bitrade &b, const Entry &base, double radius) {
  if (!is_k_homogeneous(b, 3) || b.empty())
    throw InvalidInput("plane tessellation needs a nonempty 3-homogeneous bitrade");
  if (!b.t_dia().contains(base))
    throw InvalidInput("base " + to_string(base) + " is not an entry of T-dia");
  if (radius < 0)
    throw InvalidInput("radius must be nonnegative");
  const auto tau = tau_representation(b);
  const auto beta = beta_maps(b);

  TessellationDrawing d;
  d.radius = radius;
  d.base = base;

  std::map<detail::ShadedKey, Entry> shaded;
  const detail::ShadedKey origin{{0, 0}, 0};
  shaded.emplace(origin, base);
  std::deque<detail::ShadedKey> queue{origin};
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    const Entry x = shaded.at(cur);
    for (std::size_t p = 0; p < 3; ++p) {
      for (int turns : {1, -1}) {
        const auto next = detail::rotate_shaded(cur, p, turns);
        if (!detail::within(shaded_triangle(next.black, next.k), radius))
          continue;
        const Entry y = turns == 1 ? tau.tau(p).image(x) : tau.tau(p).preimage(x);
        auto [it, fresh] = shaded.try_emplace(next, y);
        if (fresh)
          queue.push_back(next);
        else if (!(it->second == y))
          d.conflicts.push_back({shaded_triangle(next.black, next.k), it->second, y});
      }
    }
  }

  std::map<LatticeTriangle, Entry> unshaded;
  for (const auto &[key, x] : shaded) {
    const auto tri = shaded_triangle(key.black, key.k);
    const LatticeTriangle across{tri.black, tri.white, tri.black + tri.white - tri.star};
    if (!detail::within(across, radius))
      continue;
    unshaded.emplace(across, beta.inverse(2, x));
  }

  std::vector<PlanarTriangle> out;
  for (const auto &[key, x] : shaded)
    out.push_back({x, true, shaded_triangle(key.black, key.k)});
  for (const auto &[tri, x] : unshaded)
    out.push_back({x, false, tri});
  d.triangles = std::move(out);
  return d;
}

} // namespace latintrade
