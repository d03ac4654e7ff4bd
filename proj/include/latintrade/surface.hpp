#pragma once

// Hypermaps: the bipartite embedding of a tau representation, its faces,
// genus and canonical triangulation.

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "permrep.hpp"

namespace latintrade {

struct GenusReport {
  std::size_t z_sigma = 0;
  std::size_t z_alpha = 0;
  std::size_t z_phi = 0;
  std::size_t omega_size = 0;
  long long euler_rhs = 0;
  std::size_t genus = 0;
  std::string surface_name;

  friend bool operator==(const GenusReport &, const GenusReport &) = default;
};

inline std::string surface_name(std::size_t genus) {
  if (genus == 0)
    return "sphere";
  if (genus == 1)
    return "torus";
  return "genus-" + std::to_string(genus);
}

/// Black vertices are the cycles of sigma = tau(0), white vertices the cycles
/// of alpha = tau(1); every dart is an edge joining the two cycles through it.
/// The rotation at a vertex lists its edges anticlockwise in cycle order.
/// Faces (star vertices) are the cycles of phi = tau(2).
template <Dart D>
struct Hypermap {
  struct Edge {
    std::size_t black;
    std::size_t white;
    D dart;
  };

  TauRep<D> tau;
  std::vector<Edge> edges; // indexed like tau.omega()
  std::vector<std::vector<std::size_t>> black_rotation;
  std::vector<std::vector<std::size_t>> white_rotation;

  std::span<const std::vector<D>> black_vertices() const { return tau.tau(0).cycles(); }
  std::span<const std::vector<D>> white_vertices() const { return tau.tau(1).cycles(); }
  std::span<const std::vector<D>> star_vertices() const { return tau.tau(2).cycles(); }
};

template <Dart D>
Hypermap<D> hypermap_from_tau(const TauRep<D> &t) {
  const auto &s = t.t_status();
  if (!s.t1 || !s.t2 || !s.t3)
    throw InvalidInput("hypermap needs a valid tau representation (T1-T3)");
  if (!s.t4)
    throw InvalidInput("hypermap needs a transitive tau representation (T4); split by orbit first");
  Hypermap<D> h;
  h.tau = t;
  const auto omega = t.omega();
  h.edges.reserve(omega.size());
  for (const auto &x : omega)
    h.edges.push_back({*t.tau(0).cycle_index(x), *t.tau(1).cycle_index(x), x});

  auto rotations = [&](std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto &cycle : t.tau(p).cycles()) {
      std::vector<std::size_t> around;
      for (const auto &x : cycle)
        around.push_back(detail::index_in(omega, x));
      out.push_back(std::move(around));
    }
    return out;
  };
  h.black_rotation = rotations(0);
  h.white_rotation = rotations(1);
  return h;
}

/// Cycles of phi = tau(2); one star vertex per face.
template <Dart D>
std::vector<std::vector<D>> faces(const TauRep<D> &t) {
  auto c = t.tau(2).cycles();
  return {c.begin(), c.end()};
}

/// z(sigma) + z(alpha) + z(phi) - |Omega| = 2 - 2g, for a transitive
/// representation.
template <Dart D>
GenusReport genus(const TauRep<D> &t) {
  if (!t.t_status().t4)
    throw InvalidInput("genus needs a single orbit; use genus_per_orbit");
  GenusReport r;
  r.z_sigma = t.tau(0).cycle_count();
  r.z_alpha = t.tau(1).cycle_count();
  r.z_phi = t.tau(2).cycle_count();
  r.omega_size = t.omega().size();
  r.euler_rhs = static_cast<long long>(r.z_sigma + r.z_alpha + r.z_phi) -
                static_cast<long long>(r.omega_size);
  if (r.euler_rhs > 2 || (r.euler_rhs % 2) != 0)
    throw InvalidInput("Euler characteristic " + std::to_string(r.euler_rhs) +
                       " admits no orientable surface");
  r.genus = static_cast<std::size_t>((2 - r.euler_rhs) / 2);
  r.surface_name = surface_name(r.genus);
  return r;
}

template <Dart D>
std::vector<GenusReport> genus_per_orbit(const TauRep<D> &t) {
  std::vector<GenusReport> out;
  for (const auto &orbit : orbits(t))
    out.push_back(genus(t.restricted_to(orbit)));
  return out;
}

struct TriangleVertices {
  std::size_t black;
  std::size_t white;
  std::size_t star;
  friend auto operator<=>(const TriangleVertices &, const TriangleVertices &) = default;
};

/// Neighbour indices across the three sides of a triangle.
struct TriangleSides {
  std::size_t black_white; // solid
  std::size_t white_star;  // dashed
  std::size_t black_star;  // dotted
};

/// Combinatorial canonical triangulation. Shaded triangle i is dart
/// tau.omega()[i]. Unshaded triangles are keyed by their (black, white, star)
/// vertex triple, which is the T-oti entry of the bitrade built from the
/// cycles; they are stored in increasing key order.
template <Dart D>
struct Triangulation {
  std::vector<D> darts;
  std::vector<TriangleVertices> shaded;
  std::vector<TriangleVertices> unshaded;
  std::vector<TriangleSides> shaded_sides;   // -> unshaded indices
  std::vector<TriangleSides> unshaded_sides; // -> shaded indices

  /// Next shaded triangle anticlockwise around the black vertex.
  std::size_t rotate_about_black(std::size_t i) const {
    return unshaded_sides[shaded_sides[i].black_star].black_white;
  }
  std::size_t rotate_about_white(std::size_t i) const {
    return unshaded_sides[shaded_sides[i].black_white].white_star;
  }
  std::size_t rotate_about_star(std::size_t i) const {
    return unshaded_sides[shaded_sides[i].white_star].black_star;
  }
};

// Unshaded triangle u(y) has vertices (black(y), white(y.sigma),
// star(y.sigma.alpha)); it shares its dotted side with shaded y, its solid
// side with y.sigma and its dashed side with y.sigma.alpha.
template <Dart D>
Triangulation<D> canonical_triangulation(const Hypermap<D> &h) {
  const auto &t = h.tau;
  const auto omega = t.omega();
  const auto &sigma = t.tau(0);
  const auto &alpha = t.tau(1);
  const auto &phi = t.tau(2);

  Triangulation<D> tri;
  tri.darts.assign(omega.begin(), omega.end());
  const std::size_t n = omega.size();
  auto vertices = [&](const D &b, const D &w, const D &s) {
    return TriangleVertices{*sigma.cycle_index(b), *alpha.cycle_index(w), *phi.cycle_index(s)};
  };

  std::vector<std::tuple<TriangleVertices, std::size_t>> keyed;
  keyed.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const D &x = omega[i];
    tri.shaded.push_back(vertices(x, x, x));
    const D xs = sigma.image(x);
    keyed.emplace_back(vertices(x, xs, alpha.image(xs)), i);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t j = 1; j < keyed.size(); ++j)
    if (std::get<0>(keyed[j]) == std::get<0>(keyed[j - 1]))
      throw std::logic_error("two darts give the same unshaded triangle");

  tri.shaded_sides.assign(n, {});
  tri.unshaded_sides.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    const auto &[verts, y_index] = keyed[j];
    tri.unshaded.push_back(verts);
    const D &y = omega[y_index];
    const D ys = sigma.image(y);
    const std::size_t dotted = y_index;
    const std::size_t solid = detail::index_in(omega, ys);
    const std::size_t dashed = detail::index_in(omega, alpha.image(ys));
    tri.unshaded_sides[j] = {solid, dashed, dotted};
    tri.shaded_sides[dotted].black_star = j;
    tri.shaded_sides[solid].black_white = j;
    tri.shaded_sides[dashed].white_star = j;
  }
  return tri;
}

/// Graphviz rendering of the bipartite embedding: black vertices filled,
/// white vertices hollow, edges labelled by their dart.
template <Dart D>
std::string to_dot(const Hypermap<D> &h) {
  auto quote = [](const std::string &s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\')
        out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "graph hypermap {\n";
  os << "  node [shape=circle, width=0.3];\n";
  const auto black = h.black_vertices();
  for (std::size_t i = 0; i < black.size(); ++i)
    os << "  b" << i << " [label=" << quote(format_cycle<D>(black[i]))
       << ", style=filled, fillcolor=black, fontcolor=white];\n";
  const auto white = h.white_vertices();
  for (std::size_t i = 0; i < white.size(); ++i)
    os << "  w" << i << " [label=" << quote(format_cycle<D>(white[i]))
       << ", style=solid, fillcolor=white];\n";
  for (const auto &e : h.edges)
    os << "  b" << e.black << " -- w" << e.white << " [label=" << quote(dart_text(e.dart))
       << "];\n";
  os << "}\n";
  return os.str();
}

} // namespace latintrade
