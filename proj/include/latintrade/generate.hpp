#pragma once

// Bitrade fixtures, parametric families, torus quotients of the triangular
// lattice, and exhaustive enumeration for small orders.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "io.hpp"
#include "lattice.hpp"

namespace latintrade {

namespace detail {

inline std::vector<Entry> entries_of(std::initializer_list<std::array<long long, 3>> triples) {
  std::vector<Entry> out;
  for (const auto &t : triples)
    out.emplace_back(t[0], t[1], t[2]);
  return out;
}

} // namespace detail

/// The 2x2 bitrade on labels {0, 1}.
inline Bitrade intercalate() {
  return Bitrade::make(detail::entries_of({{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                       detail::entries_of({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}));
}

/// A 4x4, 12-entry, 3-homogeneous bitrade on labels {1, 2, 3, 4}.
inline Bitrade example2() {
  return Bitrade::make(detail::entries_of({{1, 1, 1}, {1, 2, 3}, {1, 4, 2},
                                           {2, 1, 3}, {2, 2, 2}, {2, 3, 4},
                                           {3, 2, 4}, {3, 3, 3}, {3, 4, 1},
                                           {4, 1, 2}, {4, 3, 1}, {4, 4, 4}}),
                       detail::entries_of({{1, 1, 3}, {1, 2, 2}, {1, 4, 1},
                                           {2, 1, 2}, {2, 2, 4}, {2, 3, 3},
                                           {3, 2, 3}, {3, 3, 1}, {3, 4, 4},
                                           {4, 1, 1}, {4, 3, 4}, {4, 4, 2}}));
}

/// Cayley table of Z_n against its symbol shift: (i, j, i+j) vs (i, j, i+j+1).
inline Bitrade cyclic_shift_bitrade(long long n) {
  if (n < 2)
    throw InvalidInput("cyclic shift bitrade needs n >= 2");
  std::vector<Entry> dia;
  std::vector<Entry> oti;
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      dia.emplace_back(i, j, (i + j) % n);
      oti.emplace_back(i, j, (i + j + 1) % n);
    }
  }
  return Bitrade::make(std::move(dia), std::move(oti));
}

/// Union of two bitrades whose row, column and symbol labels are disjoint.
inline Bitrade disjoint_union(const Bitrade &a, const Bitrade &b) {
  const std::array<std::vector<Label>, 3> la{a.t_dia().rows(), a.t_dia().cols(), a.t_dia().symbols()};
  const std::array<std::vector<Label>, 3> lb{b.t_dia().rows(), b.t_dia().cols(), b.t_dia().symbols()};
  for (std::size_t p = 0; p < 3; ++p) {
    std::vector<Label> common;
    std::set_intersection(la[p].begin(), la[p].end(), lb[p].begin(), lb[p].end(),
                          std::back_inserter(common));
    if (!common.empty())
      throw InvalidInput(std::string("bitrades share ") + axis_name(all_axes[p]) + " label " +
                         common.front().value());
  }
  std::vector<Entry> dia(a.t_dia().entries().begin(), a.t_dia().entries().end());
  dia.insert(dia.end(), b.t_dia().entries().begin(), b.t_dia().entries().end());
  std::vector<Entry> oti(a.t_oti().entries().begin(), a.t_oti().entries().end());
  oti.insert(oti.end(), b.t_oti().entries().begin(), b.t_oti().entries().end());
  return Bitrade::make(std::move(dia), std::move(oti));
}

/// Adds `offset` to every (integer) label.
inline Bitrade shift_labels(const Bitrade &b, long long offset) {
  auto shift = [offset](std::span<const Entry> half) {
    std::vector<Entry> out;
    for (const auto &e : half) {
      std::array<long long, 3> v{};
      for (std::size_t p = 0; p < 3; ++p) {
        auto n = e[p].integer();
        if (!n)
          throw InvalidInput("shift_labels needs integer labels");
        v[p] = *n + offset;
      }
      out.emplace_back(v[0], v[1], v[2]);
    }
    return out;
  };
  return Bitrade::make(shift(b.t_dia().entries()), shift(b.t_oti().entries()));
}

/// Translation sublattice in black-vertex coordinates: v1 and v2 are
/// integer combinations of (3/2, sqrt(3)/2) and (3/2, -sqrt(3)/2).
struct LatticeSpec {
  std::array<long long, 2> v1{};
  std::array<long long, 2> v2{};

  long long index() const { return std::llabs(v1[0] * v2[1] - v1[1] * v2[0]); }
};

/// Quotient of the labelled triangular tessellation by a translation
/// lattice: rows, columns and symbols are the black, white and star vertex
/// classes; T-dia and T-oti are the shaded and unshaded triangle classes.
/// Throws InvalidInput (with the validation report) when the quotient is not
/// a bitrade.
inline Bitrade lattice_quotient_bitrade(const LatticeSpec &spec) {
  if (spec.index() == 0)
    throw InvalidInput("degenerate lattice spec: det(v1, v2) = 0");
  const LatticePoint g1 = from_black_basis(spec.v1[0], spec.v1[1]);
  const LatticePoint g2 = from_black_basis(spec.v2[0], spec.v2[1]);
  const LatticeReducer reducer(g1, g2);
  if (color_of(g1) != VertexColor::black || color_of(g2) != VertexColor::black)
    throw InvalidInput("lattice does not preserve vertex colours");

  std::array<std::map<LatticePoint, long long>, 3> classes; // by colour: black, white, star
  auto colour_slot = [](VertexColor c) {
    return c == VertexColor::black ? 0u : c == VertexColor::white ? 1u : 2u;
  };
  const long long n = reducer.index();
  std::vector<LatticePoint> reps;
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      reps.push_back(reducer.reduce({i, j}));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  for (const auto &r : reps) {
    auto &m = classes[colour_slot(color_of(r))];
    m.emplace(r, static_cast<long long>(m.size()));
  }

  auto entry_for = [&](const LatticeTriangle &t) {
    return Entry(classes[0].at(reducer.reduce(t.black)), classes[1].at(reducer.reduce(t.white)),
                 classes[2].at(reducer.reduce(t.star)));
  };
  std::vector<Entry> dia;
  std::vector<Entry> oti;
  for (const auto &[black, id] : classes[0]) {
    for (int k = 0; k < 3; ++k) {
      dia.push_back(entry_for(shaded_triangle(black, k)));
      oti.push_back(entry_for(unshaded_triangle(black, k)));
    }
  }
  return Bitrade::make(std::move(dia), std::move(oti));
}

/// One spec per sublattice of the black lattice with index <= max_index,
/// in Hermite normal form (a, b), (0, d) with 0 <= b < d.
inline std::vector<LatticeSpec> lattice_specs_up_to(long long max_index) {
  std::vector<LatticeSpec> out;
  for (long long a = 1; a <= max_index; ++a)
    for (long long d = 1; a * d <= max_index; ++d)
      for (long long b = 0; b < d; ++b)
        out.push_back({{a, b}, {0, d}});
  std::stable_sort(out.begin(), out.end(),
                   [](const auto &x, const auto &y) { return x.index() < y.index(); });
  return out;
}

/// All latin squares of the given order on labels 0..order-1, in
/// lexicographic order of their row-major symbol sequence.
inline std::vector<std::vector<int>> latin_square_grids(int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> g(static_cast<std::size_t>(order * order), -1);
  std::vector<unsigned> row_used(static_cast<std::size_t>(order), 0);
  std::vector<unsigned> col_used(static_cast<std::size_t>(order), 0);
  auto fill = [&](auto &&self, int pos) -> void {
    if (pos == order * order) {
      out.push_back(g);
      return;
    }
    const auto i = static_cast<std::size_t>(pos / order);
    const auto j = static_cast<std::size_t>(pos % order);
    for (int s = 0; s < order; ++s) {
      const unsigned bit = 1u << s;
      if ((row_used[i] & bit) || (col_used[j] & bit))
        continue;
      row_used[i] |= bit;
      col_used[j] |= bit;
      g[static_cast<std::size_t>(pos)] = s;
      self(self, pos + 1);
      row_used[i] &= ~bit;
      col_used[j] &= ~bit;
    }
  };
  fill(fill, 0);
  return out;
}

inline PartialLatinSquare square_from_grid(const std::vector<int> &grid, int order) {
  std::vector<Entry> entries;
  for (int p = 0; p < order * order; ++p)
    entries.emplace_back(p / order, p % order, grid[static_cast<std::size_t>(p)]);
  return PartialLatinSquare::from_entries(std::move(entries));
}

inline constexpr int max_enumeration_order = 4;

/// Calls `visit` once for each distinct nonempty bitrade L1 - L2 over
/// ordered pairs of latin squares of the given order, in order of first
/// appearance. Distinctness is on exact entry sets. Returns the count.
inline std::size_t for_each_small_bitrade(int order, const std::function<void(const Bitrade &)> &visit) {
  if (order < 1 || order > max_enumeration_order)
    throw InvalidInput("enumeration supports orders 1.." + std::to_string(max_enumeration_order));
  std::vector<PartialLatinSquare> squares;
  for (const auto &g : latin_square_grids(order))
    squares.push_back(square_from_grid(g, order));
  std::unordered_set<std::string> seen;
  std::size_t count = 0;
  for (std::size_t a = 0; a < squares.size(); ++a) {
    for (std::size_t b = 0; b < squares.size(); ++b) {
      if (a == b)
        continue;
      const Bitrade t = bitrade_from_squares(squares[a], squares[b]);
      if (t.empty() || !seen.insert(to_triples(t)).second)
        continue;
      ++count;
      visit(t);
    }
  }
  return count;
}

inline std::vector<Bitrade> enumerate_small(int order) {
  std::vector<Bitrade> out;
  for_each_small_bitrade(order, [&out](const Bitrade &b) { out.push_back(b); });
  return out;
}

} // namespace latintrade
