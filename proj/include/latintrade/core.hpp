#pragma once

// Partial latin squares, latin bitrades and their validation.

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latintrade {

enum class Axis : std::uint8_t { row = 0, column = 1, symbol = 2 };

inline constexpr std::array<Axis, 3> all_axes{Axis::row, Axis::column, Axis::symbol};

inline const char *axis_name(Axis axis) {
  switch (axis) {
  case Axis::row:
    return "row";
  case Axis::column:
    return "column";
  case Axis::symbol:
    return "symbol";
  }
  return "?";
}

/// Opaque identifier of a row, column or symbol.
///
/// Values are kept as text. Canonical decimal integers ("0", "17", "-3") also
/// carry their numeric value so that "10" sorts after "9". Integers order
/// before non-integer text; text orders lexicographically. Labels of
/// different axes never compare equal.
class Label {
public:
  Label(Axis axis, std::string value) : value_(std::move(value)), axis_(axis) {
    check_text(value_);
    if (auto n = parse_integer(value_)) {
      integer_ = *n;
      is_integer_ = true;
    }
  }

  Label(Axis axis, long long value)
      : value_(std::to_string(value)), integer_(value), axis_(axis), is_integer_(true) {}

  Axis axis() const noexcept { return axis_; }
  const std::string &value() const noexcept { return value_; }
  std::optional<long long> integer() const {
    if (is_integer_)
      return integer_;
    return std::nullopt;
  }

  friend std::strong_ordering operator<=>(const Label &a, const Label &b) {
    if (auto c = a.axis_ <=> b.axis_; c != 0)
      return c;
    if (a.is_integer_ && b.is_integer_)
      return a.integer_ <=> b.integer_;
    if (a.is_integer_ != b.is_integer_)
      return a.is_integer_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.value_.compare(b.value_) <=> 0;
  }

  friend bool operator==(const Label &a, const Label &b) {
    return a.axis_ == b.axis_ && a.is_integer_ == b.is_integer_ &&
           (a.is_integer_ ? a.integer_ == b.integer_ : a.value_ == b.value_);
  }

private:
  static void check_text(std::string_view text) {
    if (text.empty())
      throw std::invalid_argument("label must not be empty");
    if (text == "%")
      throw std::invalid_argument("label must not be '%'");
    for (char ch : text) {
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '#')
        throw std::invalid_argument("label must not contain whitespace or '#': \"" +
                                    std::string(text) + "\"");
    }
  }

  // Only canonical spellings take the integer path, so numeric equality
  // coincides with textual equality.
  static std::optional<long long> parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
      digits.remove_prefix(1);
    if (digits.empty() || digits.size() > 18)
      return std::nullopt;
    if (digits.size() > 1 && digits.front() == '0')
      return std::nullopt;
    if (text == "-0")
      return std::nullopt;
    long long out = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      return std::nullopt;
    return out;
  }

  std::string value_;
  long long integer_ = 0;
  Axis axis_;
  bool is_integer_ = false;
};

/// A triple (row, column, symbol).
class Entry {
public:
  Entry(Label row, Label col, Label sym)
      : labels_{std::move(row), std::move(col), std::move(sym)} {
    for (std::size_t i = 0; i < 3; ++i) {
      if (labels_[i].axis() != all_axes[i])
        throw std::invalid_argument(std::string("entry position ") + std::to_string(i) +
                                    " requires a " + axis_name(all_axes[i]) + " label");
    }
  }
  Entry(std::string_view row, std::string_view col, std::string_view sym)
      : labels_{Label(Axis::row, std::string(row)), Label(Axis::column, std::string(col)),
                Label(Axis::symbol, std::string(sym))} {}
  Entry(long long row, long long col, long long sym)
      : labels_{Label(Axis::row, row), Label(Axis::column, col), Label(Axis::symbol, sym)} {}

  const Label &row() const noexcept { return labels_[0]; }
  const Label &col() const noexcept { return labels_[1]; }
  const Label &sym() const noexcept { return labels_[2]; }
  const Label &operator[](std::size_t position) const { return labels_.at(position); }

  friend auto operator<=>(const Entry &, const Entry &) = default;
  friend bool operator==(const Entry &, const Entry &) = default;

private:
  std::array<Label, 3> labels_;
};

/// Renders an entry as `r:c:s`.
inline std::string to_string(const Entry &e) {
  return e.row().value() + ":" + e.col().value() + ":" + e.sym().value();
}

enum class Rule : std::uint8_t {
  pls,
  r1,
  r2,
  r3,
  coverage,
  disjointness,
  transversal,
  propagation,
};

inline const char *rule_name(Rule rule) {
  switch (rule) {
  case Rule::pls:
    return "PLS";
  case Rule::r1:
    return "R1";
  case Rule::r2:
    return "R2";
  case Rule::r3:
    return "R3";
  case Rule::coverage:
    return "coverage";
  case Rule::disjointness:
    return "disjointness";
  case Rule::transversal:
    return "transversal";
  case Rule::propagation:
    return "propagation";
  }
  return "?";
}

struct Violation {
  Rule rule;
  std::string witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(Rule rule) const {
    return std::any_of(violations.begin(), violations.end(),
                       [rule](const Violation &v) { return v.rule == rule; });
  }
  void add(Rule rule, std::string witness, std::string message) {
    violations.push_back({rule, std::move(witness), std::move(message)});
  }
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input that parsed but violates a structural requirement.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string &what, ValidationReport report = {})
      : std::invalid_argument(what), report_(std::move(report)) {}
  const ValidationReport &report() const noexcept { return report_; }

private:
  ValidationReport report_;
};

namespace detail {

inline std::string cell_text(const Label &r, const Label &c) {
  return "(" + r.value() + "," + c.value() + ")";
}

inline std::vector<Label> distinct_labels(std::span<const Entry> entries, std::size_t position) {
  std::vector<Label> out;
  out.reserve(entries.size());
  for (const auto &e : entries)
    out.push_back(e[position]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::map<Label, std::size_t> count_labels(std::span<const Entry> entries,
                                                 std::size_t position) {
  std::map<Label, std::size_t> out;
  for (const auto &e : entries)
    ++out[e[position]];
  return out;
}

inline bool agree(const Entry &a, const Entry &b, std::size_t r, std::size_t s) {
  return a[r] == b[r] && a[s] == b[s];
}

inline constexpr std::array<std::pair<std::size_t, std::size_t>, 3> position_pairs{
    std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}};

} // namespace detail

/// Checks the two latin conditions on a raw entry list. Never throws.
inline ValidationReport validate_pls(std::span<const Entry> entries) {
  const std::size_t n = entries.size();
  // For each key pair, the index of the earliest entry sharing it.
  auto first_with = [&](std::size_t a, std::size_t b, const std::vector<bool> &skip) {
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (skip.empty() || !skip[i])
        order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const auto c = entries[x][a] <=> entries[y][a];
      return c != 0 ? c < 0 : entries[x][b] < entries[y][b];
    });
    std::vector<std::size_t> first(n, n);
    for (std::size_t k = 1; k < order.size(); ++k) {
      const auto &prev = entries[order[k - 1]];
      const auto &cur = entries[order[k]];
      if (prev[a] == cur[a] && prev[b] == cur[b])
        first[order[k]] = first[order[k - 1]] == n ? order[k - 1] : first[order[k - 1]];
    }
    return first;
  };

  ValidationReport report;
  const auto cell = first_with(0, 1, {});
  std::vector<bool> repeated_cell(n, false);
  for (std::size_t i = 0; i < n; ++i)
    repeated_cell[i] = cell[i] != n;
  const auto row_sym = first_with(0, 2, repeated_cell);
  const auto col_sym = first_with(1, 2, repeated_cell);
  for (std::size_t i = 0; i < n; ++i) {
    const auto &e = entries[i];
    if (repeated_cell[i]) {
      report.add(Rule::pls, detail::cell_text(e.row(), e.col()),
                 "cell " + detail::cell_text(e.row(), e.col()) + " holds both " +
                     to_string(entries[cell[i]]) + " and " + to_string(e));
      continue;
    }
    if (row_sym[i] != n)
      report.add(Rule::pls, to_string(e),
                 "symbol " + e.sym().value() + " repeated in row " + e.row().value() + " (" +
                     to_string(entries[row_sym[i]]) + ", " + to_string(e) + ")");
    if (col_sym[i] != n)
      report.add(Rule::pls, to_string(e),
                 "symbol " + e.sym().value() + " repeated in column " + e.col().value() + " (" +
                     to_string(entries[col_sym[i]]) + ", " + to_string(e) + ")");
  }
  return report;
}

/// Checks R1 (disjointness) and R2/R3 (unique witness for every entry and
/// every pair of positions) by direct counting.
inline ValidationReport validate_bitrade(std::span<const Entry> t_dia, std::span<const Entry> t_oti) {
  ValidationReport report;
  for (auto [half, name] : {std::pair{t_dia, "T-dia"}, std::pair{t_oti, "T-oti"}}) {
    for (auto &v : validate_pls(half).violations) {
      v.message = std::string(name) + ": " + v.message;
      report.violations.push_back(std::move(v));
    }
  }
  if (!report.ok())
    return report;

  std::set<Entry> dia(t_dia.begin(), t_dia.end());
  for (const auto &e : t_oti) {
    if (dia.contains(e))
      report.add(Rule::r1, to_string(e), to_string(e) + " lies in both halves");
  }

  auto witness_rule = [&report](std::span<const Entry> from, std::span<const Entry> to,
                                Rule rule) {
    for (const auto &a : from) {
      for (auto [r, s] : detail::position_pairs) {
        std::size_t count = 0;
        for (const auto &b : to)
          count += detail::agree(a, b, r, s) ? 1 : 0;
        if (count != 1)
          report.add(rule, to_string(a),
                     to_string(a) + " has " + std::to_string(count) +
                         " partners agreeing on positions " + std::to_string(r + 1) + "," +
                         std::to_string(s + 1) + " (expected exactly 1)");
      }
    }
  };
  witness_rule(t_dia, t_oti, Rule::r2);
  witness_rule(t_oti, t_dia, Rule::r3);
  return report;
}

/// An entry set satisfying the latin conditions, in canonical order.
class PartialLatinSquare {
public:
  PartialLatinSquare() = default;

  static PartialLatinSquare from_entries(std::vector<Entry> entries) {
    auto report = validate_pls(entries);
    if (!report.ok()) {
      std::string what = "not a partial latin square: " + report.violations.front().message;
      throw InvalidInput(what, std::move(report));
    }
    return PartialLatinSquare(std::move(entries));
  }

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool contains(const Entry &e) const {
    return std::binary_search(entries_.begin(), entries_.end(), e);
  }

  std::vector<Label> rows() const { return detail::distinct_labels(entries_, 0); }
  std::vector<Label> cols() const { return detail::distinct_labels(entries_, 1); }
  std::vector<Label> symbols() const { return detail::distinct_labels(entries_, 2); }

  /// Symbol in cell (row, col), if any.
  std::optional<Label> at(const Label &row, const Label &col) const {
    for (const auto &e : entries_)
      if (e.row() == row && e.col() == col)
        return e.sym();
    return std::nullopt;
  }

  friend bool operator==(const PartialLatinSquare &, const PartialLatinSquare &) = default;

private:
  friend class Bitrade;

  explicit PartialLatinSquare(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
  }

  std::vector<Entry> entries_;
};

/// A validated latin bitrade (T-dia, T-oti). Default-constructed is the
/// empty bitrade.
class Bitrade {
public:
  Bitrade() = default;

  static Bitrade make(std::vector<Entry> t_dia, std::vector<Entry> t_oti) {
    auto report = validate_bitrade(t_dia, t_oti);
    if (!report.ok()) {
      std::string what = "not a latin bitrade: " + report.violations.front().message;
      throw InvalidInput(what, std::move(report));
    }
    return Bitrade(PartialLatinSquare(std::move(t_dia)), PartialLatinSquare(std::move(t_oti)));
  }

  const PartialLatinSquare &t_dia() const noexcept { return dia_; }
  const PartialLatinSquare &t_oti() const noexcept { return oti_; }
  std::size_t size() const noexcept { return dia_.size(); }
  bool empty() const noexcept { return dia_.empty(); }

  Bitrade swapped() const { return Bitrade(oti_, dia_); }

  friend bool operator==(const Bitrade &, const Bitrade &) = default;

private:
  Bitrade(PartialLatinSquare dia, PartialLatinSquare oti)
      : dia_(std::move(dia)), oti_(std::move(oti)) {}

  PartialLatinSquare dia_;
  PartialLatinSquare oti_;
};

/// Difference of two latin squares of the same order on the same labels.
inline Bitrade bitrade_from_squares(const PartialLatinSquare &l1, const PartialLatinSquare &l2) {
  auto check_full = [](const PartialLatinSquare &l, const char *name) {
    const auto n = l.rows().size();
    if (n == 0 || l.cols().size() != n || l.symbols().size() != n || l.size() != n * n)
      throw InvalidInput(std::string(name) + " is not a full latin square");
  };
  check_full(l1, "first square");
  check_full(l2, "second square");
  if (l1.rows() != l2.rows() || l1.cols() != l2.cols() || l1.symbols() != l2.symbols())
    throw InvalidInput("latin squares use different label sets");

  std::vector<Entry> dia;
  std::vector<Entry> oti;
  std::set_difference(l1.entries().begin(), l1.entries().end(), l2.entries().begin(),
                      l2.entries().end(), std::back_inserter(dia));
  std::set_difference(l2.entries().begin(), l2.entries().end(), l1.entries().begin(),
                      l1.entries().end(), std::back_inserter(oti));
  return Bitrade::make(std::move(dia), std::move(oti));
}

/// True iff every row, column and symbol of T-dia occurs exactly k times.
inline bool is_k_homogeneous(const Bitrade &b, std::size_t k) {
  auto homogeneous = [k](std::span<const Entry> entries) {
    for (std::size_t pos = 0; pos < 3; ++pos)
      for (const auto &[label, count] : detail::count_labels(entries, pos))
        if (count != k)
          return false;
    return true;
  };
  const bool dia = homogeneous(b.t_dia().entries());
  if (dia != homogeneous(b.t_oti().entries()))
    throw std::logic_error("homogeneity differs between the halves of a valid bitrade");
  return dia;
}

/// True iff `subset` meets every row and every column of T-dia exactly once
/// and carries |subset| distinct symbols. Throws if `subset` is not inside T-dia.
inline bool is_transversal(std::span<const Entry> subset, const Bitrade &b) {
  for (const auto &e : subset)
    if (!b.t_dia().contains(e))
      throw InvalidInput(to_string(e) + " is not an entry of T-dia");
  for (std::size_t pos = 0; pos < 2; ++pos) {
    const auto hits = detail::count_labels(subset, pos);
    const auto all = detail::distinct_labels(b.t_dia().entries(), pos);
    if (hits.size() != all.size())
      return false;
    for (const auto &[label, count] : hits)
      if (count != 1)
        return false;
  }
  return detail::distinct_labels(subset, 2).size() == subset.size();
}

} // namespace latintrade
