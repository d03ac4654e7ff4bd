#pragma once

// The three-permutation representation of a bitrade and its inverse
// construction.
//
// Positions are 0-based throughout: tau(0), tau(1), tau(2) act along rows,
// columns and symbols respectively.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "permutation.hpp"

namespace latintrade {

struct TConditions {
  bool t1 = false; // product of the three permutations is the identity
  bool t2 = false; // cycles of different permutations share at most one dart
  bool t3 = false; // each permutation moves every dart
  bool t4 = false; // the generated group has a single orbit

  bool bitrade() const noexcept { return t1 && t2 && t3; }
  bool all() const noexcept { return t1 && t2 && t3 && t4; }
  friend bool operator==(const TConditions &, const TConditions &) = default;
};

template <Dart D>
class TauRep;

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

template <Dart D>
std::size_t index_in(std::span<const D> sorted, const D &x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || !(*it == x))
    throw std::logic_error("dart " + dart_text(x) + " outside the dart set");
  return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace detail

/// Orbits of the group generated by the three permutations, each sorted,
/// listed by least dart.
template <Dart D>
std::vector<std::vector<D>> orbits(const TauRep<D> &t) {
  const auto omega = t.omega();
  detail::UnionFind uf(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t p = 0; p < 3; ++p)
      uf.unite(i, detail::index_in(omega, t.tau(p).image(omega[i])));
  std::map<std::size_t, std::vector<D>> groups;
  for (std::size_t i = 0; i < omega.size(); ++i)
    groups[uf.find(i)].push_back(omega[i]);
  std::vector<std::vector<D>> out;
  out.reserve(groups.size());
  for (auto &[root, darts] : groups)
    out.push_back(std::move(darts));
  return out;
}

template <Dart D>
TConditions check_t_conditions(const TauRep<D> &t) {
  TConditions c;
  const auto omega = t.omega();

  c.t1 = std::all_of(omega.begin(), omega.end(), [&t](const D &x) {
    return t.tau(2).image(t.tau(1).image(t.tau(0).image(x))) == x;
  });

  c.t2 = true;
  for (std::size_t i = 0; i < 3 && c.t2; ++i) {
    for (std::size_t j = i + 1; j < 3 && c.t2; ++j) {
      std::map<std::pair<std::size_t, std::size_t>, int> shared;
      for (const auto &x : omega) {
        auto ci = t.tau(i).cycle_index(x);
        auto cj = t.tau(j).cycle_index(x);
        if (ci && cj && ++shared[{*ci, *cj}] > 1) {
          c.t2 = false;
          break;
        }
      }
    }
  }

  c.t3 = true;
  for (std::size_t p = 0; p < 3; ++p)
    c.t3 = c.t3 && t.tau(p).moved().size() == omega.size();

  c.t4 = orbits(t).size() == 1;
  return c;
}

/// Three permutations on the dart set they move, with T-condition flags.
template <Dart D>
class TauRep {
public:
  TauRep() = default;

  explicit TauRep(std::array<Permutation<D>, 3> tau) : tau_(std::move(tau)) {
    for (const auto &p : tau_) {
      auto m = p.moved();
      omega_.insert(omega_.end(), m.begin(), m.end());
    }
    std::sort(omega_.begin(), omega_.end());
    omega_.erase(std::unique(omega_.begin(), omega_.end()), omega_.end());
    status_ = check_t_conditions(*this);
  }

  const Permutation<D> &tau(std::size_t position) const { return tau_.at(position); }
  std::span<const D> omega() const noexcept { return omega_; }
  const TConditions &t_status() const noexcept { return status_; }
  bool empty() const noexcept { return omega_.empty(); }

  /// The sub-representation on a union of orbits.
  TauRep restricted_to(std::span<const D> darts) const {
    std::vector<D> sorted(darts.begin(), darts.end());
    std::sort(sorted.begin(), sorted.end());
    return TauRep({tau_[0].restricted_to(sorted), tau_[1].restricted_to(sorted),
                   tau_[2].restricted_to(sorted)});
  }

  friend bool operator==(const TauRep &a, const TauRep &b) { return a.tau_ == b.tau_; }

private:
  std::array<Permutation<D>, 3> tau_;
  std::vector<D> omega_;
  TConditions status_;
};

/// beta(r) maps each T-oti entry to the T-dia entry agreeing with it on the
/// two positions other than r.
class BetaTriple {
public:
  BetaTriple(std::vector<Entry> dia, std::vector<Entry> oti,
             std::array<std::vector<std::size_t>, 3> forward)
      : dia_(std::move(dia)), oti_(std::move(oti)), forward_(std::move(forward)) {
    for (std::size_t r = 0; r < 3; ++r) {
      backward_[r].assign(dia_.size(), 0);
      for (std::size_t j = 0; j < oti_.size(); ++j)
        backward_[r][forward_[r][j]] = j;
    }
  }

  const Entry &apply(std::size_t r, const Entry &oti) const {
    return dia_[forward_.at(r)[index(oti_, oti)]];
  }
  const Entry &inverse(std::size_t r, const Entry &dia) const {
    return oti_[backward_.at(r)[index(dia_, dia)]];
  }

  std::span<const Entry> t_dia() const noexcept { return dia_; }
  std::span<const Entry> t_oti() const noexcept { return oti_; }
  /// Index-level view: forward(r)[j] is the T-dia index of beta(r) applied
  /// to T-oti entry j.
  std::span<const std::size_t> forward(std::size_t r) const { return forward_.at(r); }
  std::span<const std::size_t> backward(std::size_t r) const { return backward_.at(r); }

private:
  static std::size_t index(std::span<const Entry> sorted, const Entry &e) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
    if (it == sorted.end() || !(*it == e))
      throw std::invalid_argument(to_string(e) + " is not in the bitrade half");
    return static_cast<std::size_t>(it - sorted.begin());
  }

  std::vector<Entry> dia_;
  std::vector<Entry> oti_;
  std::array<std::vector<std::size_t>, 3> forward_;
  std::array<std::vector<std::size_t>, 3> backward_;
};

inline BetaTriple beta_maps(const Bitrade &b) {
  std::vector<Entry> dia(b.t_dia().entries().begin(), b.t_dia().entries().end());
  std::vector<Entry> oti(b.t_oti().entries().begin(), b.t_oti().entries().end());
  std::array<std::vector<std::size_t>, 3> forward;
  for (std::size_t r = 0; r < 3; ++r) {
    const std::size_t s = (r + 1) % 3;
    const std::size_t u = (r + 2) % 3;
    forward[r].reserve(oti.size());
    for (const auto &a : oti) {
      std::size_t found = dia.size();
      for (std::size_t i = 0; i < dia.size(); ++i) {
        if (detail::agree(a, dia[i], s, u)) {
          if (found != dia.size())
            throw std::logic_error("beta map is not a function at " + to_string(a));
          found = i;
        }
      }
      if (found == dia.size())
        throw std::logic_error("beta map undefined at " + to_string(a));
      forward[r].push_back(found);
    }
  }
  return BetaTriple(std::move(dia), std::move(oti), std::move(forward));
}

/// tau(p) = beta(p+1)^-1 beta(p+2), indices mod 3, as permutations of T-dia.
inline TauRep<Entry> tau_representation(const Bitrade &b) {
  if (b.empty())
    throw InvalidInput("the empty bitrade has no tau representation");
  const auto beta = beta_maps(b);
  const auto dia = beta.t_dia();
  std::array<Permutation<Entry>, 3> tau;
  for (std::size_t p = 0; p < 3; ++p) {
    const auto undo = beta.backward((p + 1) % 3);
    const auto redo = beta.forward((p + 2) % 3);
    std::vector<std::pair<Entry, Entry>> pairs;
    pairs.reserve(dia.size());
    for (std::size_t i = 0; i < dia.size(); ++i)
      pairs.emplace_back(dia[i], dia[redo[undo[i]]]);
    tau[p] = Permutation<Entry>::from_mapping(std::move(pairs));
  }
  return TauRep<Entry>(std::move(tau));
}

/// Label for a cycle of tau(position): the cycle in canonical notation.
template <Dart D>
Label cycle_label(Axis axis, std::span<const D> cycle) {
  return Label(axis, format_cycle<D>(cycle));
}

/// The T-dia entry a dart becomes under bitrade_from_tau.
template <Dart D>
Entry dart_entry(const TauRep<D> &t, const D &x) {
  std::array<std::string, 3> text;
  for (std::size_t p = 0; p < 3; ++p) {
    auto c = t.tau(p).cycle_index(x);
    if (!c)
      throw InvalidInput("dart " + dart_text(x) + " is fixed by tau(" + std::to_string(p) + ")");
    text[p] = format_cycle<D>(t.tau(p).cycles()[*c]);
  }
  return Entry(text[0], text[1], text[2]);
}

/// Builds the bitrade whose rows, columns and symbols are the cycles of the
/// three permutations. A T-dia entry is a triple of cycles through a common
/// dart; a T-oti entry is a triple (c0, c1, c2) with distinct darts x, x',
/// x'' such that x·c0 = x', x'·c1 = x'', x''·c2 = x.
template <Dart D>
Bitrade bitrade_from_tau(const TauRep<D> &t) {
  const auto &status = t.t_status();
  if (!status.bitrade())
    throw InvalidInput(std::string("tau representation violates ") +
                       (!status.t1 ? "T1" : !status.t2 ? "T2" : "T3"));
  std::array<std::vector<Label>, 3> labels;
  for (std::size_t p = 0; p < 3; ++p)
    for (const auto &cycle : t.tau(p).cycles())
      labels[p].push_back(cycle_label<D>(all_axes[p], cycle));

  auto label_of = [&](std::size_t p, const D &x) -> const Label & {
    return labels[p][*t.tau(p).cycle_index(x)];
  };

  std::vector<Entry> dia;
  std::vector<Entry> oti;
  for (const auto &x : t.omega()) {
    dia.emplace_back(label_of(0, x), label_of(1, x), label_of(2, x));
    const D x1 = t.tau(0).image(x);
    const D x2 = t.tau(1).image(x1);
    if (!(t.tau(2).image(x2) == x) || x == x1 || x1 == x2 || x2 == x)
      throw std::logic_error("T-oti rule failed at dart " + dart_text(x));
    oti.emplace_back(label_of(0, x), label_of(1, x1), label_of(2, x2));
  }
  std::sort(dia.begin(), dia.end());
  dia.erase(std::unique(dia.begin(), dia.end()), dia.end());
  std::sort(oti.begin(), oti.end());
  oti.erase(std::unique(oti.begin(), oti.end()), oti.end());
  return Bitrade::make(std::move(dia), std::move(oti));
}

/// Replaces each cycle-valued label of `from_tau` by the label its darts
/// share in the original bitrade.
inline Bitrade restore_cycle_labels(const Bitrade &from_tau, const TauRep<Entry> &t) {
  std::array<std::map<Label, Label>, 3> rename;
  for (std::size_t p = 0; p < 3; ++p) {
    for (const auto &cycle : t.tau(p).cycles()) {
      const Label original = cycle.front()[p];
      for (const auto &dart : cycle)
        if (!(dart[p] == original))
          throw InvalidInput("cycle " + format_cycle<Entry>(cycle) + " mixes " +
                             axis_name(all_axes[p]) + " labels");
      rename[p].emplace(cycle_label<Entry>(all_axes[p], cycle), original);
    }
  }
  auto map_half = [&rename](std::span<const Entry> half) {
    std::vector<Entry> out;
    out.reserve(half.size());
    for (const auto &e : half)
      out.emplace_back(rename[0].at(e.row()), rename[1].at(e.col()), rename[2].at(e.sym()));
    return out;
  };
  return Bitrade::make(map_half(from_tau.t_dia().entries()), map_half(from_tau.t_oti().entries()));
}

inline bool is_primary(const Bitrade &b) { return orbits(tau_representation(b)).size() == 1; }

} // namespace latintrade
