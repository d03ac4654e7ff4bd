#pragma once

// Exact coordinates on the unit triangular lattice.
//
// A point (i, j) sits at i*(1, 0) + j*(1/2, sqrt(3)/2). Vertex colours are
// (i - j) mod 3: 0 black, 1 star, 2 white. With that colouring the origin is
// black, (1, 0) on the positive x axis is a star vertex, and black vertices
// form the sublattice spanned by (3/2, sqrt(3)/2) and (3/2, -sqrt(3)/2),
// i.e. (1, 1) and (2, -1) here.
//
// Triangles are named by their black vertex and an orientation k in {0,1,2}.
// The shaded triangle k = 0 lies directly above its black vertex, k = 1 to
// the lower left and k = 2 to the lower right; k+1 is the anticlockwise
// rotation of k by 2*pi/3 about the black vertex.

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace latintrade {

struct LatticePoint {
  long long i = 0;
  long long j = 0;

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.i + b.i, a.j + b.j}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.i - b.i, a.j - b.j}; }
  friend LatticePoint operator*(long long s, LatticePoint a) { return {s * a.i, s * a.j}; }
  friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;
};

enum class VertexColor : std::uint8_t { black, white, star };

inline long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

inline long long floor_div(long long a, long long m) { return (a - floor_mod(a, m)) / m; }

inline VertexColor color_of(LatticePoint p) {
  switch (floor_mod(p.i - p.j, 3)) {
  case 0:
    return VertexColor::black;
  case 1:
    return VertexColor::star;
  default:
    return VertexColor::white;
  }
}

/// Anticlockwise rotation by 2*pi/3 about the origin.
inline LatticePoint rotate_120(LatticePoint p) { return {-p.i - p.j, p.i}; }

inline LatticePoint rotate_120_about(LatticePoint p, LatticePoint centre, int turns = 1) {
  LatticePoint d = p - centre;
  for (int t = 0; t < floor_mod(turns, 3); ++t)
    d = rotate_120(d);
  return centre + d;
}

inline std::array<double, 2> to_plane(LatticePoint p) {
  return {static_cast<double>(p.i) + 0.5 * static_cast<double>(p.j),
          static_cast<double>(p.j) * std::sqrt(3.0) / 2.0};
}

/// Squared Euclidean length, exact.
inline long long norm2_times4(LatticePoint p) { return 4 * (p.i * p.i + p.i * p.j + p.j * p.j); }

inline constexpr LatticePoint black_basis_1{1, 1};  // (3/2,  sqrt(3)/2)
inline constexpr LatticePoint black_basis_2{2, -1}; // (3/2, -sqrt(3)/2)

/// Converts black-lattice coordinates to vertex coordinates.
inline LatticePoint from_black_basis(long long a, long long b) {
  return a * black_basis_1 + b * black_basis_2;
}

/// Vertices in black, white, star order.
struct LatticeTriangle {
  LatticePoint black;
  LatticePoint white;
  LatticePoint star;

  const LatticePoint &operator[](std::size_t v) const {
    return v == 0 ? black : v == 1 ? white : star;
  }
  friend auto operator<=>(const LatticeTriangle &, const LatticeTriangle &) = default;
};

inline LatticePoint rotate_turns(LatticePoint d, int k) {
  for (int t = 0; t < floor_mod(k, 3); ++t)
    d = rotate_120(d);
  return d;
}

inline LatticeTriangle shaded_triangle(LatticePoint black, int k) {
  return {black, black + rotate_turns({0, 1}, k), black + rotate_turns({-1, 1}, k)};
}

inline LatticeTriangle unshaded_triangle(LatticePoint black, int k) {
  return {black, black + rotate_turns({0, 1}, k), black + rotate_turns({1, 0}, k)};
}

/// Orientation index of a triangle from the offset of its white vertex.
inline int orientation_of(const LatticeTriangle &t) {
  const LatticePoint d = t.white - t.black;
  for (int k = 0; k < 3; ++k)
    if (d == rotate_turns({0, 1}, k))
      return k;
  throw std::logic_error("white vertex is not adjacent to the black vertex");
}

/// Three times the centroid, exact.
inline LatticePoint centroid_times3(const LatticeTriangle &t) {
  return t.black + t.white + t.star;
}

/// Canonical representatives modulo a full-rank sublattice of Z^2, via the
/// Hermite normal form {(p, q), (0, r)} of its basis.
class LatticeReducer {
public:
  LatticeReducer(LatticePoint v1, LatticePoint v2) {
    while (v2.i != 0) {
      const long long q = v1.i / v2.i;
      v1 = v1 - q * v2;
      std::swap(v1, v2);
    }
    if (v1.i < 0)
      v1 = -1 * v1;
    if (v2.j < 0)
      v2 = -1 * v2;
    if (v1.i == 0 || v2.j == 0)
      throw std::invalid_argument("degenerate lattice: basis vectors are dependent");
    p_ = v1.i;
    r_ = v2.j;
    q_ = floor_mod(v1.j, r_);
  }

  LatticePoint reduce(LatticePoint x) const {
    const long long k = floor_div(x.i, p_);
    x.i -= k * p_;
    x.j -= k * q_;
    x.j = floor_mod(x.j, r_);
    return x;
  }

  long long index() const noexcept { return p_ * r_; }

private:
  long long p_ = 1;
  long long q_ = 0;
  long long r_ = 1;
};

} // namespace latintrade
