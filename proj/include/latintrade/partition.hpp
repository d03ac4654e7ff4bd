#pragma once

// Partition of a 3-homogeneous bitrade into three transversals.
//
// Each dart x gets a label in Z/3 with label(x.tau(p)) = label(x) + 1 for all
// three generators. Starting from one dart per orbit the labels propagate
// breadth-first; the label classes are the transversals. The labels are
// always consistent for a genuine 3-homogeneous bitrade, so a contradiction
// means corrupt input or a bug and is reported with both darts involved.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core.hpp"
#include "permrep.hpp"

namespace latintrade {

template <Dart D>
struct BasicPartition {
  std::array<std::vector<D>, 3> classes;
  std::map<D, int> labeling;

  friend bool operator==(const BasicPartition &, const BasicPartition &) = default;
};

template <Dart D>
struct BasicPartitionFailure {
  enum class Kind { not_3_homogeneous, inconsistent_labeling };
  Kind kind;
  std::string witness;
  std::string message;
  std::vector<D> darts; // inconsistent_labeling: the dart propagated from, then the clashing dart
};

using TransversalPartition = BasicPartition<Entry>;
using PartitionFailure = BasicPartitionFailure<Entry>;
using PartitionResult = std::variant<TransversalPartition, PartitionFailure>;

inline const char *kind_name(PartitionFailure::Kind kind) {
  return kind == PartitionFailure::Kind::not_3_homogeneous ? "not_3_homogeneous"
                                                           : "inconsistent_labeling";
}

/// Z/3 labels by breadth-first propagation, one component at a time.
///
/// A component containing `base` starts there; other components start at
/// their least dart. With `canonical` set, each component's labels are then
/// shifted so its least dart has label 0.
template <Dart D>
std::variant<std::map<D, int>, BasicPartitionFailure<D>>
propagate_labels(const TauRep<D> &t, std::optional<D> base = std::nullopt, bool canonical = true) {
  using Failure = BasicPartitionFailure<D>;
  std::map<D, int> label;
  for (const auto &orbit : orbits(t)) {
    D start = orbit.front();
    if (base && std::binary_search(orbit.begin(), orbit.end(), *base))
      start = *base;
    label[start] = 0;
    std::deque<D> queue{start};
    while (!queue.empty()) {
      const D x = queue.front();
      queue.pop_front();
      const int next = (label.at(x) + 1) % 3;
      for (std::size_t p = 0; p < 3; ++p) {
        const D y = t.tau(p).image(x);
        auto [it, fresh] = label.try_emplace(y, next);
        if (fresh) {
          queue.push_back(y);
        } else if (it->second != next) {
          Failure f{Failure::Kind::inconsistent_labeling,
                    dart_text(x) + " -> " + dart_text(y),
                    "tau(" + std::to_string(p) + ") sends " + dart_text(x) + " (label " +
                        std::to_string(label.at(x)) + ") to " + dart_text(y) +
                        ", which another path already labelled " + std::to_string(it->second),
                    {x, y}};
          return f;
        }
      }
    }
    if (canonical) {
      const int shift = (3 - label.at(orbit.front())) % 3;
      for (const auto &x : orbit)
        label[x] = (label[x] + shift) % 3;
    }
  }
  return label;
}

template <Dart D>
BasicPartition<D> partition_from_labels(std::map<D, int> labeling) {
  BasicPartition<D> p;
  for (const auto &[x, l] : labeling)
    p.classes[static_cast<std::size_t>(l)].push_back(x);
  p.labeling = std::move(labeling);
  return p;
}

namespace detail {

inline std::optional<std::string> homogeneity_witness(const Bitrade &b, std::size_t k) {
  for (std::size_t pos = 0; pos < 3; ++pos)
    for (const auto &[label, count] : count_labels(b.t_dia().entries(), pos))
      if (count != k)
        return std::string(axis_name(all_axes[pos])) + " " + label.value() + " has " +
               std::to_string(count) + " entries";
  return std::nullopt;
}

} // namespace detail

/// Partition computed directly from a tau representation. Every cycle of
/// every permutation must have length 3 (the permutation-side form of
/// 3-homogeneity); the T-conditions are not checked first, so a corrupt
/// representation surfaces as inconsistent_labeling.
template <Dart D>
std::variant<BasicPartition<D>, BasicPartitionFailure<D>>
three_transversal_partition(const TauRep<D> &t) {
  using Failure = BasicPartitionFailure<D>;
  for (std::size_t p = 0; p < 3; ++p) {
    if (t.tau(p).moved().size() != t.omega().size())
      return Failure{Failure::Kind::not_3_homogeneous, "tau(" + std::to_string(p) + ")",
                     "tau(" + std::to_string(p) + ") has fixed points", {}};
    for (const auto &cycle : t.tau(p).cycles())
      if (cycle.size() != 3)
        return Failure{Failure::Kind::not_3_homogeneous, format_cycle<D>(cycle),
                       "cycle " + format_cycle<D>(cycle) + " of tau(" + std::to_string(p) +
                           ") has length " + std::to_string(cycle.size()),
                       {}};
  }
  auto labels = propagate_labels(t);
  if (auto *f = std::get_if<Failure>(&labels))
    return *f;
  return partition_from_labels(std::move(std::get<std::map<D, int>>(labels)));
}

inline PartitionResult three_transversal_partition(const Bitrade &b) {
  if (auto w = detail::homogeneity_witness(b, 3))
    return PartitionFailure{PartitionFailure::Kind::not_3_homogeneous, *w,
                            "bitrade is not 3-homogeneous: " + *w, {}};
  if (b.empty())
    return TransversalPartition{};
  auto labels = propagate_labels(tau_representation(b));
  if (auto *f = std::get_if<PartitionFailure>(&labels))
    return *f;
  return partition_from_labels(std::move(std::get<std::map<Entry, int>>(labels)));
}

/// Classes sorted, for comparison up to class order.
template <Dart D>
std::array<std::vector<D>, 3> class_set(const BasicPartition<D> &p) {
  auto classes = p.classes;
  for (auto &c : classes)
    std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

inline ValidationReport verify_partition(const TransversalPartition &p, const Bitrade &b) {
  ValidationReport report;
  std::map<Entry, std::size_t> owner;
  for (std::size_t c = 0; c < 3; ++c) {
    for (const auto &e : p.classes[c]) {
      if (!b.t_dia().contains(e)) {
        report.add(Rule::coverage, to_string(e),
                   to_string(e) + " in class " + std::to_string(c) + " is not an entry of T-dia");
        continue;
      }
      auto [it, fresh] = owner.try_emplace(e, c);
      if (!fresh)
        report.add(Rule::disjointness, to_string(e),
                   to_string(e) + " lies in classes " + std::to_string(it->second) + " and " +
                       std::to_string(c));
    }
  }
  for (const auto &e : b.t_dia().entries())
    if (!owner.contains(e))
      report.add(Rule::coverage, to_string(e), to_string(e) + " lies in no class");

  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<Entry> inside;
    for (const auto &e : p.classes[c])
      if (b.t_dia().contains(e))
        inside.push_back(e);
    if (!is_transversal(inside, b))
      report.add(Rule::transversal, "class " + std::to_string(c),
                 "class " + std::to_string(c) + " is not a transversal");
  }

  if (b.empty())
    return report;
  for (const auto &e : b.t_dia().entries()) {
    auto it = p.labeling.find(e);
    if (it == p.labeling.end()) {
      report.add(Rule::propagation, to_string(e), to_string(e) + " has no label");
      continue;
    }
    if (auto o = owner.find(e); o != owner.end() && static_cast<int>(o->second) != it->second)
      report.add(Rule::propagation, to_string(e),
                 to_string(e) + " has label " + std::to_string(it->second) + " but sits in class " +
                     std::to_string(o->second));
  }
  const auto t = tau_representation(b);
  for (const auto &x : t.omega()) {
    auto lx = p.labeling.find(x);
    if (lx == p.labeling.end())
      continue;
    for (std::size_t q = 0; q < 3; ++q) {
      const Entry y = t.tau(q).image(x);
      auto ly = p.labeling.find(y);
      if (ly != p.labeling.end() && ly->second != (lx->second + 1) % 3)
        report.add(Rule::propagation, to_string(x),
                   "label(" + to_string(y) + ") = " + std::to_string(ly->second) +
                       " but tau(" + std::to_string(q) + ") of " + to_string(x) + " (label " +
                       std::to_string(lx->second) + ") requires " +
                       std::to_string((lx->second + 1) % 3));
    }
  }
  return report;
}

inline constexpr std::size_t default_oracle_cap = 18;

/// Every partition of T-dia into three transversals, by exhaustive
/// backtracking. Partitions are listed once each (classes opened in order of
/// their least entry) and sorted.
inline std::vector<TransversalPartition> brute_force_partitions(const Bitrade &b,
                                                                std::size_t cap = default_oracle_cap) {
  const auto entries = b.t_dia().entries();
  const std::size_t n = entries.size();
  if (n > cap)
    throw InvalidInput("bitrade has " + std::to_string(n) + " entries, above the oracle cap of " +
                       std::to_string(cap));
  if (n > 63)
    throw InvalidInput("oracle supports at most 63 entries");
  std::vector<TransversalPartition> out;
  const auto rows = b.t_dia().rows();
  const auto cols = b.t_dia().cols();
  const auto syms = b.t_dia().symbols();
  if (n == 0 || rows.size() != cols.size() || 3 * rows.size() != n)
    return out;

  auto index = [](const std::vector<Label> &labels, const Label &l) {
    return static_cast<unsigned>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  struct Bits {
    std::uint64_t row, col, sym;
  };
  std::vector<Bits> bits;
  for (const auto &e : entries)
    bits.push_back({std::uint64_t{1} << index(rows, e.row()), std::uint64_t{1} << index(cols, e.col()),
                    std::uint64_t{1} << index(syms, e.sym())});

  const std::size_t per_class = rows.size();
  std::array<Bits, 3> used{};
  std::array<std::size_t, 3> size{};
  std::vector<int> assign(n, -1);

  auto recurse = [&](auto &&self, std::size_t i, int opened) -> void {
    if (i == n) {
      if (opened != 3 || size[0] != per_class || size[1] != per_class || size[2] != per_class)
        return;
      TransversalPartition p;
      for (std::size_t k = 0; k < n; ++k) {
        p.classes[static_cast<std::size_t>(assign[k])].push_back(entries[k]);
        p.labeling.emplace(entries[k], assign[k]);
      }
      out.push_back(std::move(p));
      return;
    }
    const int limit = std::min(opened + 1, 3);
    for (int c = 0; c < limit; ++c) {
      auto &u = used[static_cast<std::size_t>(c)];
      const auto &e = bits[i];
      if ((u.row & e.row) || (u.col & e.col) || (u.sym & e.sym))
        continue;
      u.row |= e.row;
      u.col |= e.col;
      u.sym |= e.sym;
      ++size[static_cast<std::size_t>(c)];
      assign[i] = c;
      self(self, i + 1, std::max(opened, c + 1));
      u.row &= ~e.row;
      u.col &= ~e.col;
      u.sym &= ~e.sym;
      --size[static_cast<std::size_t>(c)];
    }
    assign[i] = -1;
  };
  recurse(recurse, 0, 0);
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.classes < b.classes; });
  return out;
}

} // namespace latintrade
