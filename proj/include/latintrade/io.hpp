#pragma once

// Text and JSON formats for bitrades and tau representations.
//
// Triples:  one `r c s` entry per line, halves separated by a `%` line,
//           `#` starts a comment.
// Grid:     whitespace-separated symbols, `.` for an empty cell, one grid
//           row per line, halves separated by `%`. Rows and columns are
//           numbered from `index_base`.
// JSON:     {"t_dia": [[r,c,s],...], "t_oti": [[r,c,s],...]}
// Tau:      one permutation per line in cycle notation, darts as `r:c:s`.

#include <algorithm>
#include <array>
#include <cstddef>
#include <istream>
#include <iterator>
#include <sstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "permrep.hpp"

namespace latintrade {

enum class Format { triples, grid, json };

inline Format parse_format(std::string_view name) {
  if (name == "triples")
    return Format::triples;
  if (name == "grid")
    return Format::grid;
  if (name == "json")
    return Format::json;
  throw ParseError("unknown format: " + std::string(name));
}

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  return line;
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok)
    out.push_back(tok);
  return out;
}

inline std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    out.push_back(line);
  }
  return out;
}

inline std::string entry_line(const Entry &e) {
  return e.row().value() + " " + e.col().value() + " " + e.sym().value();
}

template <typename F>
auto parse_guard(std::size_t line_no, F &&f) {
  try {
    return f();
  } catch (const std::invalid_argument &ex) {
    throw ParseError("line " + std::to_string(line_no) + ": " + ex.what());
  }
}

} // namespace detail

inline std::string read_all(std::istream &in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// The two raw halves of a bitrade as read, before validation.
struct RawBitrade {
  std::vector<Entry> t_dia;
  std::vector<Entry> t_oti;
};

inline RawBitrade parse_triples_raw(std::string_view text) {
  RawBitrade raw;
  int half = 0;
  std::size_t line_no = 0;
  for (const auto &line : detail::lines_of(text)) {
    ++line_no;
    const auto tokens = detail::split_ws(detail::strip_comment(line));
    if (tokens.empty())
      continue;
    if (tokens.size() == 1 && tokens[0] == "%") {
      if (++half > 1)
        throw ParseError("line " + std::to_string(line_no) + ": more than one '%' separator");
      continue;
    }
    if (tokens.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected `row column symbol`");
    auto e = detail::parse_guard(line_no, [&] { return Entry(tokens[0], tokens[1], tokens[2]); });
    (half == 0 ? raw.t_dia : raw.t_oti).push_back(std::move(e));
  }
  if (half != 1)
    throw ParseError("missing '%' separator between the two halves");
  return raw;
}

inline std::string to_triples(const Bitrade &b) {
  std::string out;
  for (const auto &e : b.t_dia().entries())
    out += detail::entry_line(e) + "\n";
  out += "%\n";
  for (const auto &e : b.t_oti().entries())
    out += detail::entry_line(e) + "\n";
  return out;
}

inline RawBitrade parse_grid_raw(std::string_view text, long long index_base = 0) {
  std::array<std::vector<std::vector<std::string>>, 2> grids;
  int half = 0;
  std::size_t line_no = 0;
  for (const auto &line : detail::lines_of(text)) {
    ++line_no;
    auto tokens = detail::split_ws(detail::strip_comment(line));
    if (tokens.empty())
      continue;
    if (tokens.size() == 1 && tokens[0] == "%") {
      if (++half > 1)
        throw ParseError("line " + std::to_string(line_no) + ": more than one '%' separator");
      continue;
    }
    grids[static_cast<std::size_t>(half)].push_back(std::move(tokens));
  }
  if (half != 1)
    throw ParseError("missing '%' separator between the two grids");

  RawBitrade raw;
  for (std::size_t h = 0; h < 2; ++h) {
    const auto &g = grids[h];
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].size() != g.size())
        throw ParseError("grid " + std::to_string(h + 1) + " is not square (row " +
                         std::to_string(i) + " has " + std::to_string(g[i].size()) + " cells)");
      for (std::size_t j = 0; j < g[i].size(); ++j) {
        if (g[i][j] == ".")
          continue;
        std::optional<Label> sym;
        try {
          sym.emplace(Axis::symbol, g[i][j]);
        } catch (const std::invalid_argument &ex) {
          throw ParseError("grid " + std::to_string(h + 1) + ", row " + std::to_string(i) + ": " +
                           ex.what());
        }
        Entry e(Label(Axis::row, index_base + static_cast<long long>(i)),
                Label(Axis::column, index_base + static_cast<long long>(j)), *sym);
        (h == 0 ? raw.t_dia : raw.t_oti).push_back(std::move(e));
      }
    }
  }
  return raw;
}

/// Grid rendering; rows and columns must be integers index_base..index_base+n-1.
inline std::string to_grid(const Bitrade &b, long long index_base = 0) {
  long long n = 0;
  for (const auto *half : {&b.t_dia(), &b.t_oti()}) {
    for (const auto &e : half->entries()) {
      for (std::size_t pos = 0; pos < 2; ++pos) {
        auto v = e[pos].integer();
        if (!v || *v < index_base)
          throw InvalidInput("grid format needs integer row/column labels from " +
                             std::to_string(index_base) + ", got " + e[pos].value());
        n = std::max(n, *v - index_base + 1);
      }
    }
  }
  auto render = [&](const PartialLatinSquare &half) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n),
                                                std::vector<std::string>(static_cast<std::size_t>(n), "."));
    std::size_t width = 1;
    for (const auto &e : half.entries()) {
      cells[static_cast<std::size_t>(*e.row().integer() - index_base)]
           [static_cast<std::size_t>(*e.col().integer() - index_base)] = e.sym().value();
      width = std::max(width, e.sym().value().size());
    }
    std::string out;
    for (const auto &row : cells) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j)
          out += ' ';
        out += std::string(width - row[j].size(), ' ') + row[j];
      }
      out += '\n';
    }
    return out;
  };
  return render(b.t_dia()) + "%\n" + render(b.t_oti());
}

inline nlohmann::ordered_json entry_json(const Entry &e) {
  return nlohmann::ordered_json::array({e.row().value(), e.col().value(), e.sym().value()});
}

inline nlohmann::ordered_json entries_json(std::span<const Entry> entries) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto &e : entries)
    arr.push_back(entry_json(e));
  return arr;
}

inline RawBitrade parse_json_raw(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  auto label_text = [](const nlohmann::json &v) -> std::string {
    if (v.is_string())
      return v.get<std::string>();
    if (v.is_number_integer())
      return std::to_string(v.get<long long>());
    throw ParseError("labels must be strings or integers");
  };
  auto half = [&](const char *key) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
      throw ParseError(std::string("JSON needs an array \"") + key + "\"");
    std::vector<Entry> out;
    for (const auto &item : doc[key]) {
      if (!item.is_array() || item.size() != 3)
        throw ParseError(std::string("each entry of \"") + key + "\" must be [r, c, s]");
      try {
        out.emplace_back(label_text(item[0]), label_text(item[1]), label_text(item[2]));
      } catch (const std::invalid_argument &ex) {
        throw ParseError(ex.what());
      }
    }
    return out;
  };
  return {half("t_dia"), half("t_oti")};
}

inline std::string to_json(const Bitrade &b) {
  nlohmann::ordered_json doc;
  doc["t_dia"] = entries_json(b.t_dia().entries());
  doc["t_oti"] = entries_json(b.t_oti().entries());
  return doc.dump(2) + "\n";
}

inline RawBitrade parse_raw(std::string_view text, Format format, long long index_base = 0) {
  switch (format) {
  case Format::triples:
    return parse_triples_raw(text);
  case Format::grid:
    return parse_grid_raw(text, index_base);
  case Format::json:
    return parse_json_raw(text);
  }
  throw ParseError("unknown format");
}

/// Parses and validates; throws ParseError or InvalidInput.
inline Bitrade parse_bitrade(std::string_view text, Format format, long long index_base = 0) {
  auto raw = parse_raw(text, format, index_base);
  return Bitrade::make(std::move(raw.t_dia), std::move(raw.t_oti));
}

inline std::string format_bitrade(const Bitrade &b, Format format, long long index_base = 0) {
  switch (format) {
  case Format::triples:
    return to_triples(b);
  case Format::grid:
    return to_grid(b, index_base);
  case Format::json:
    return to_json(b);
  }
  throw ParseError("unknown format");
}

namespace detail {

// Splits on `sep` occurring outside parentheses.
inline std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(')
      ++depth;
    else if (ch == ')')
      --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

} // namespace detail

/// Parses `r:c:s`. Labels may themselves contain parenthesised text.
inline Entry parse_dart(std::string_view text) {
  auto parts = detail::split_top_level(text, ':');
  if (parts.size() != 3)
    throw ParseError("dart must look like r:c:s, got \"" + std::string(text) + "\"");
  try {
    return Entry(parts[0], parts[1], parts[2]);
  } catch (const std::invalid_argument &ex) {
    throw ParseError(ex.what());
  }
}

inline Permutation<Entry> parse_cycles(std::string_view line) {
  std::string compact;
  for (char ch : line)
    if (ch != ' ' && ch != '\t')
      compact += ch;
  std::vector<std::vector<Entry>> cycles;
  std::size_t i = 0;
  while (i < compact.size()) {
    if (compact[i] != '(')
      throw ParseError("expected '(' in cycle notation: " + compact);
    int depth = 0;
    std::size_t j = i;
    for (; j < compact.size(); ++j) {
      if (compact[j] == '(')
        ++depth;
      else if (compact[j] == ')' && --depth == 0)
        break;
    }
    if (j == compact.size())
      throw ParseError("unbalanced parentheses in cycle notation: " + compact);
    const std::string body = compact.substr(i + 1, j - i - 1);
    if (!body.empty()) {
      std::vector<Entry> cycle;
      for (const auto &dart : detail::split_top_level(body, ','))
        cycle.push_back(parse_dart(dart));
      cycles.push_back(std::move(cycle));
    }
    i = j + 1;
  }
  try {
    return Permutation<Entry>::from_cycles(cycles);
  } catch (const std::invalid_argument &ex) {
    throw ParseError(ex.what());
  }
}

/// Three lines of cycle notation; blank and `#` lines ignored.
inline TauRep<Entry> parse_tau(std::string_view text) {
  std::vector<Permutation<Entry>> perms;
  for (const auto &line : detail::lines_of(text)) {
    auto body = detail::strip_comment(line);
    if (body.find_first_not_of(" \t") == std::string_view::npos)
      continue;
    perms.push_back(parse_cycles(body));
  }
  if (perms.size() != 3)
    throw ParseError("tau representation needs exactly three permutations, got " +
                     std::to_string(perms.size()));
  return TauRep<Entry>({perms[0], perms[1], perms[2]});
}

template <Dart D>
std::string format_tau(const TauRep<D> &t) {
  std::string out;
  for (std::size_t p = 0; p < 3; ++p)
    out += format_cycles(t.tau(p)) + "\n";
  return out;
}

inline std::string format_report(const ValidationReport &r) {
  nlohmann::ordered_json doc;
  doc["ok"] = r.ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto &v : r.violations)
    arr.push_back({{"rule", rule_name(v.rule)}, {"witness", v.witness}, {"message", v.message}});
  doc["violations"] = arr;
  return doc.dump(2) + "\n";
}

} // namespace latintrade
