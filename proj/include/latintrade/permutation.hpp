#pragma once

// Finite permutations acting on the right, stored in canonical cycle form.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace latintrade {

inline std::string dart_text(const Entry &e) { return to_string(e); }
inline std::string dart_text(const std::string &s) { return s; }
inline std::string dart_text(char c) { return std::string(1, c); }
template <std::integral T>
  requires(!std::same_as<T, char>)
std::string dart_text(T value) {
  return std::to_string(value);
}

template <typename D>
concept Dart = std::totally_ordered<D> && std::copyable<D> && requires(const D &d) {
  { dart_text(d) } -> std::convertible_to<std::string>;
};

/// A permutation of finitely many darts. Points not listed are fixed.
///
/// Composition follows the right-action convention: `x * (p * q)` means
/// apply p first, then q; `image(x)` is written x·p.
///
/// Cycles are canonical: each starts at its least dart, cycles are sorted
/// by that dart, and fixed points are omitted. Equality is therefore plain
/// structural equality.
template <Dart D>
class Permutation {
public:
  Permutation() = default;

  static Permutation from_mapping(std::vector<std::pair<D, D>> pairs) {
    std::erase_if(pairs, [](const auto &p) { return p.first == p.second; });
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
      if (pairs[i].first == pairs[i - 1].first)
        throw std::invalid_argument("dart " + dart_text(pairs[i].first) + " mapped twice");
    std::vector<D> targets;
    targets.reserve(pairs.size());
    for (const auto &p : pairs)
      targets.push_back(p.second);
    std::sort(targets.begin(), targets.end());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!(targets[i] == pairs[i].first))
        throw std::invalid_argument("mapping is not a bijection on its support");
    return Permutation(std::move(pairs));
  }

  static Permutation from_cycles(const std::vector<std::vector<D>> &cycles) {
    std::vector<std::pair<D, D>> pairs;
    for (const auto &cycle : cycles) {
      if (cycle.size() < 2)
        continue;
      for (std::size_t i = 0; i < cycle.size(); ++i)
        pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    std::vector<D> sources;
    for (const auto &p : pairs)
      sources.push_back(p.first);
    std::sort(sources.begin(), sources.end());
    if (std::adjacent_find(sources.begin(), sources.end()) != sources.end())
      throw std::invalid_argument("cycles are not disjoint");
    return from_mapping(std::move(pairs));
  }

  D image(const D &x) const {
    if (auto i = index_of(x))
      return forward_[*i].second;
    return x;
  }

  D preimage(const D &x) const {
    auto it = std::lower_bound(backward_.begin(), backward_.end(), x,
                               [](const auto &p, const D &v) { return p.first < v; });
    if (it != backward_.end() && it->first == x)
      return it->second;
    return x;
  }

  bool moves(const D &x) const { return index_of(x).has_value(); }

  /// Index into cycles() of the cycle through x, if x is moved.
  std::optional<std::size_t> cycle_index(const D &x) const {
    if (auto i = index_of(x))
      return cycle_of_[*i];
    return std::nullopt;
  }

  std::span<const std::vector<D>> cycles() const noexcept { return cycles_; }
  std::size_t cycle_count() const noexcept { return cycles_.size(); }
  bool is_identity() const noexcept { return forward_.empty(); }

  std::vector<D> moved() const {
    std::vector<D> out;
    out.reserve(forward_.size());
    for (const auto &p : forward_)
      out.push_back(p.first);
    return out;
  }

  Permutation inverse() const { return Permutation(backward_); }

  /// Right-action product: x·(p*q) = (x·p)·q.
  friend Permutation operator*(const Permutation &p, const Permutation &q) {
    std::vector<D> support = p.moved();
    auto qm = q.moved();
    support.insert(support.end(), qm.begin(), qm.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<std::pair<D, D>> pairs;
    pairs.reserve(support.size());
    for (const auto &x : support)
      pairs.emplace_back(x, q.image(p.image(x)));
    return from_mapping(std::move(pairs));
  }

  /// Restriction to a set of darts closed under the permutation.
  Permutation restricted_to(std::span<const D> sorted_darts) const {
    std::vector<std::pair<D, D>> pairs;
    for (const auto &p : forward_)
      if (std::binary_search(sorted_darts.begin(), sorted_darts.end(), p.first))
        pairs.push_back(p);
    return from_mapping(std::move(pairs));
  }

  friend bool operator==(const Permutation &a, const Permutation &b) {
    return a.forward_ == b.forward_;
  }

private:
  explicit Permutation(std::vector<std::pair<D, D>> sorted_pairs)
      : forward_(std::move(sorted_pairs)) {
    backward_.reserve(forward_.size());
    for (const auto &[x, y] : forward_)
      backward_.emplace_back(y, x);
    std::sort(backward_.begin(), backward_.end());

    cycle_of_.assign(forward_.size(), 0);
    std::vector<bool> seen(forward_.size(), false);
    for (std::size_t start = 0; start < forward_.size(); ++start) {
      if (seen[start])
        continue;
      std::vector<D> cycle;
      std::size_t i = start;
      while (!seen[i]) {
        seen[i] = true;
        cycle_of_[i] = cycles_.size();
        cycle.push_back(forward_[i].first);
        i = *index_of(forward_[i].second);
      }
      cycles_.push_back(std::move(cycle));
    }
  }

  std::optional<std::size_t> index_of(const D &x) const {
    auto it = std::lower_bound(forward_.begin(), forward_.end(), x,
                               [](const auto &p, const D &v) { return p.first < v; });
    if (it != forward_.end() && it->first == x)
      return static_cast<std::size_t>(it - forward_.begin());
    return std::nullopt;
  }

  std::vector<std::pair<D, D>> forward_;
  std::vector<std::pair<D, D>> backward_;
  std::vector<std::size_t> cycle_of_;
  std::vector<std::vector<D>> cycles_;
};

template <Dart D>
std::string format_cycle(std::span<const D> cycle) {
  std::string out = "(";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i)
      out += ',';
    out += dart_text(cycle[i]);
  }
  return out + ")";
}

/// Cycle notation `(d1,d2,d3)(d4,d5)`; the identity prints as `()`.
template <Dart D>
std::string format_cycles(const Permutation<D> &p) {
  if (p.is_identity())
    return "()";
  std::string out;
  for (const auto &cycle : p.cycles())
    out += format_cycle<D>(cycle);
  return out;
}

} // namespace latintrade
