#pragma once

// Command-line front end. Exit codes: 0 success, 1 validation failure,
// 2 usage or parse error, 3 internal invariant breach.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <latintrade/latintrade.hpp>

namespace latintrade::cli {

enum Exit : int { ok = 0, invalid = 1, usage = 2, internal = 3 };

/// Failure carrying its own exit code.
struct Abort {
  int code;
  std::string message;
};

namespace detail {

using nlohmann::ordered_json;

inline std::string read_input(const std::string &path, std::istream &in) {
  if (path == "-")
    return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw Abort{usage, "cannot open input file: " + path};
  return read_all(file);
}

inline void write_output(const std::string &path, const std::string &text, std::ostream &out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw Abort{usage, "cannot open output file: " + path};
  file << text;
}

inline ordered_json genus_json(const GenusReport &g) {
  ordered_json j;
  j["z_sigma"] = g.z_sigma;
  j["z_alpha"] = g.z_alpha;
  j["z_phi"] = g.z_phi;
  j["omega_size"] = g.omega_size;
  j["euler_rhs"] = g.euler_rhs;
  j["genus"] = g.genus;
  j["surface_name"] = g.surface_name;
  return j;
}

inline ordered_json genus_document(const TauRep<Entry> &t) {
  if (!t.t_status().bitrade())
    throw InvalidInput("tau representation violates T1-T3");
  if (t.t_status().t4)
    return genus_json(genus(t));
  ordered_json doc;
  doc["components"] = ordered_json::array();
  for (const auto &g : genus_per_orbit(t))
    doc["components"].push_back(genus_json(g));
  return doc;
}

inline ordered_json partition_json(const TransversalPartition &p) {
  ordered_json doc;
  doc["classes"] = ordered_json::array();
  for (const auto &c : p.classes)
    doc["classes"].push_back(entries_json(c));
  doc["labeling"] = ordered_json::object();
  for (const auto &[e, l] : p.labeling)
    doc["labeling"][to_string(e)] = l;
  return doc;
}

inline ordered_json failure_json(const PartitionFailure &f) {
  ordered_json doc;
  doc["error"] = kind_name(f.kind);
  doc["witness"] = f.witness;
  doc["message"] = f.message;
  if (!f.darts.empty()) {
    doc["darts"] = ordered_json::array();
    for (const auto &x : f.darts)
      doc["darts"].push_back(to_string(x));
  }
  return doc;
}

inline std::array<long long, 2> parse_pair(const std::string &text, const char *what) {
  std::array<long long, 2> v{};
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> v[0] >> comma >> v[1]) || comma != ',' || !is.eof())
    throw Abort{usage, std::string(what) + " must look like a,b"};
  return v;
}

} // namespace detail

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format = "triples";
  long long index_base = 0;
  bool text = false;
  std::size_t cap = default_oracle_cap;
  std::optional<std::string> base;
  std::optional<double> radius;
  double domains = 3.0;
  std::string labels = "on";
  bool axes = false;
  std::string shade_color = "#c8c8c8";
  double scale = 48.0;
  std::optional<std::string> domain;
  std::string family;
  long long n = 3;
  std::string v1 = "2,0";
  std::string v2 = "0,2";
  int order = 3;
  std::size_t limit = 0;
};

class App {
public:
  App(std::istream &in, std::ostream &out, std::ostream &err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string> &args) {
    CLI::App app{"Latin bitrades: validation, tau representation, genus, transversal "
                 "partitions and plane tessellations"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    register_commands(app);
    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp &) {
      out_ << app.help();
      return ok;
    } catch (const CLI::CallForAllHelp &) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (const CLI::ParseError &e) {
      err_ << "error: " << e.what() << "\n";
      return usage;
    }
    try {
      return dispatch(*app.get_subcommands().front());
    } catch (const Abort &a) {
      err_ << "error: " << a.message << "\n";
      return a.code;
    } catch (const ParseError &e) {
      err_ << "parse error: " << e.what() << "\n";
      return usage;
    } catch (const InvalidInput &e) {
      err_ << "invalid input: " << e.what() << "\n";
      if (!e.report().ok())
        out_ << format_report(e.report());
      return invalid;
    } catch (const std::logic_error &e) {
      err_ << "internal invariant breach: " << e.what() << "\n";
      return internal;
    } catch (const std::exception &e) {
      err_ << "error: " << e.what() << "\n";
      return internal;
    }
  }

private:
  void add_io(CLI::App *cmd, bool tau_input = false) {
    cmd->add_option("input", o_.input, "Input file, - for stdin")->capture_default_str();
    std::vector<std::string> formats{"triples", "grid", "json"};
    if (tau_input)
      formats.emplace_back("tau");
    cmd->add_option("--format", o_.format, "Input format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--index-base", o_.index_base, "First row/column number in grid format")
        ->capture_default_str();
  }

  void register_commands(CLI::App &app) {
    auto *validate = app.add_subcommand("validate", "Check the latin and bitrade conditions");
    add_io(validate);
    validate->add_flag("--text", o_.text, "Human-readable report instead of JSON");

    auto *tau = app.add_subcommand("tau", "Print the three permutations in cycle notation");
    add_io(tau);
    tau->add_option("--output", o_.output, "Output file")->capture_default_str();

    auto *from_tau = app.add_subcommand("from-tau", "Build a bitrade from cycle notation");
    from_tau->add_option("input", o_.input, "Input file, - for stdin");
    from_tau->add_option("--format", o_.format, "Output format")
        ->check(CLI::IsMember({"triples", "grid", "json"}))
        ->capture_default_str();
    from_tau->add_option("--index-base", o_.index_base, "Grid row/column base");
    from_tau->add_option("--output", o_.output, "Output file")->capture_default_str();

    auto *genus_cmd = app.add_subcommand("genus", "Genus of the hypermap surface");
    add_io(genus_cmd, true);

    auto *partition = app.add_subcommand("partition", "Partition a 3-homogeneous bitrade into three transversals");
    add_io(partition, true);
    partition->add_option("--output", o_.output, "Output file")->capture_default_str();

    auto *oracle = app.add_subcommand("oracle", "All partitions into three transversals (exhaustive)");
    add_io(oracle);
    oracle->add_option("--cap", o_.cap, "Largest |T-dia| searched")->capture_default_str();

    auto *tess = app.add_subcommand("tessellate", "Draw the plane tessellation as SVG");
    add_io(tess);
    tess->add_option("--output", o_.output, "SVG output file")->required();
    tess->add_option("--base", o_.base, "Entry r:c:s placed above the origin (default: least entry)");
    tess->add_option("--radius", o_.radius, "Clipping radius in unit sides");
    tess->add_option("--domains", o_.domains, "Clipping radius in fundamental domains (if no --radius)")
        ->capture_default_str();
    tess->add_option("--labels", o_.labels, "Entry labels")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    tess->add_flag("--axes", o_.axes, "Draw the x and y axes");
    tess->add_option("--shade-color", o_.shade_color, "Fill colour of shaded triangles")->capture_default_str();
    tess->add_option("--scale", o_.scale, "Pixels per unit side")->capture_default_str();
    tess->add_option("--domain", o_.domain,
                     "Fundamental domain a,b,c,d: lattice vectors (a,b) and (c,d) in black-vertex coordinates");

    auto *gen = app.add_subcommand("generate", "Write a fixture or family member");
    gen->add_option("family", o_.family, "intercalate | example2 | cyclic | lattice")
        ->required()
        ->check(CLI::IsMember({"intercalate", "example2", "cyclic", "lattice"}));
    gen->add_option("--n", o_.n, "Order for the cyclic family")->capture_default_str();
    gen->add_option("--v1", o_.v1, "First lattice vector a,b (black-vertex coordinates)")->capture_default_str();
    gen->add_option("--v2", o_.v2, "Second lattice vector a,b")->capture_default_str();
    gen->add_option("--format", o_.format, "Output format")
        ->check(CLI::IsMember({"triples", "grid", "json"}))
        ->capture_default_str();
    gen->add_option("--index-base", o_.index_base, "Grid row/column base");
    gen->add_option("--output", o_.output, "Output file")->capture_default_str();

    auto *en = app.add_subcommand("enumerate", "Write all bitrades of a small order as a corpus");
    en->add_option("--order", o_.order, "Order of the latin squares (1-4)")->required();
    en->add_option("--output", o_.output, "Corpus directory")->required();
    en->add_option("--limit", o_.limit, "Write at most this many files (0: all)")->capture_default_str();
  }

  Bitrade read_bitrade() {
    return parse_bitrade(detail::read_input(o_.input, in_), parse_format(o_.format), o_.index_base);
  }

  TauRep<Entry> read_tau_or_bitrade() {
    if (o_.format == "tau")
      return parse_tau(detail::read_input(o_.input, in_));
    return tau_representation(read_bitrade());
  }

  int dispatch(const CLI::App &cmd) {
    const std::string name = cmd.get_name();
    if (name == "validate")
      return cmd_validate();
    if (name == "tau") {
      detail::write_output(o_.output, format_tau(tau_representation(read_bitrade())), out_);
      return ok;
    }
    if (name == "from-tau") {
      const auto t = parse_tau(detail::read_input(o_.input, in_));
      detail::write_output(o_.output,
                           format_bitrade(bitrade_from_tau(t), parse_format(o_.format), o_.index_base),
                           out_);
      return ok;
    }
    if (name == "genus") {
      out_ << detail::genus_document(read_tau_or_bitrade()).dump(2) << "\n";
      return ok;
    }
    if (name == "partition")
      return cmd_partition();
    if (name == "oracle")
      return cmd_oracle();
    if (name == "tessellate")
      return cmd_tessellate();
    if (name == "generate")
      return cmd_generate();
    if (name == "enumerate")
      return cmd_enumerate();
    throw Abort{usage, "unknown subcommand " + name};
  }

  int cmd_validate() {
    const auto raw = parse_raw(detail::read_input(o_.input, in_), parse_format(o_.format), o_.index_base);
    const auto report = validate_bitrade(raw.t_dia, raw.t_oti);
    if (o_.text) {
      out_ << (report.ok() ? "ok\n" : "invalid\n");
      for (const auto &v : report.violations)
        out_ << rule_name(v.rule) << "\t" << v.witness << "\t" << v.message << "\n";
    } else {
      out_ << format_report(report);
    }
    for (const auto &v : report.violations)
      err_ << rule_name(v.rule) << ": " << v.message << "\n";
    return report.ok() ? ok : invalid;
  }

  int report_failure(const PartitionFailure &f) {
    out_ << detail::failure_json(f).dump(2) << "\n";
    err_ << kind_name(f.kind) << ": " << f.message << "\n";
    return f.kind == PartitionFailure::Kind::not_3_homogeneous ? invalid : internal;
  }

  int cmd_partition() {
    if (o_.format == "tau") {
      auto result = three_transversal_partition(parse_tau(detail::read_input(o_.input, in_)));
      if (auto *f = std::get_if<PartitionFailure>(&result))
        return report_failure(*f);
      detail::write_output(o_.output,
                           detail::partition_json(std::get<TransversalPartition>(result)).dump(2) + "\n",
                           out_);
      return ok;
    }
    const auto b = read_bitrade();
    auto result = three_transversal_partition(b);
    if (auto *f = std::get_if<PartitionFailure>(&result))
      return report_failure(*f);
    const auto &p = std::get<TransversalPartition>(result);
    const auto check = verify_partition(p, b);
    if (!check.ok()) {
      out_ << format_report(check);
      err_ << "partition failed verification\n";
      return internal;
    }
    detail::write_output(o_.output, detail::partition_json(p).dump(2) + "\n", out_);
    return ok;
  }

  int cmd_oracle() {
    const auto b = read_bitrade();
    const auto all = brute_force_partitions(b, o_.cap);
    detail::ordered_json doc;
    doc["count"] = all.size();
    doc["partitions"] = detail::ordered_json::array();
    for (const auto &p : all) {
      detail::ordered_json item;
      item["classes"] = detail::ordered_json::array();
      for (const auto &c : p.classes)
        item["classes"].push_back(entries_json(c));
      doc["partitions"].push_back(item);
    }
    out_ << doc.dump(2) << "\n";
    return ok;
  }

  int cmd_tessellate() {
    if (o_.output == "-")
      throw Abort{usage, "tessellate writes SVG to a file; pass --output path.svg"};
    const auto b = read_bitrade();
    if (b.empty())
      throw InvalidInput("cannot draw the empty bitrade");
    const Entry base = o_.base ? parse_dart(*o_.base) : b.t_dia().entries().front();
    const double radius = o_.radius ? *o_.radius : fundamental_domain_radius(b, o_.domains);
    auto drawing = lift_to_plane(b, base, radius);
    if (o_.domain) {
      std::vector<long long> v;
      std::istringstream is(*o_.domain);
      std::string part;
      while (std::getline(is, part, ','))
        v.push_back(std::stoll(part));
      if (v.size() != 4)
        throw Abort{usage, "--domain needs four integers a,b,c,d"};
      drawing.fundamental_domain = std::array{from_black_basis(v[0], v[1]), from_black_basis(v[2], v[3])};
    }
    SvgOptions svg;
    svg.show_labels = o_.labels == "on";
    svg.show_axes = o_.axes;
    svg.shade_color = o_.shade_color;
    svg.scale = o_.scale;
    detail::write_output(o_.output, render_svg(drawing, svg), out_);

    std::size_t shaded = 0;
    for (const auto &t : drawing.triangles)
      shaded += t.shaded ? 1 : 0;
    detail::ordered_json doc;
    doc["output"] = o_.output;
    doc["base"] = to_string(base);
    doc["radius"] = radius;
    doc["triangles"] = drawing.triangles.size();
    doc["shaded"] = shaded;
    doc["conflicts"] = drawing.conflicts.size();
    out_ << doc.dump(2) << "\n";
    if (!drawing.conflicts.empty()) {
      err_ << "labelling conflicts in the lifted tessellation\n";
      return internal;
    }
    return ok;
  }

  int cmd_generate() {
    Bitrade b;
    if (o_.family == "intercalate")
      b = intercalate();
    else if (o_.family == "example2")
      b = example2();
    else if (o_.family == "cyclic")
      b = cyclic_shift_bitrade(o_.n);
    else
      b = lattice_quotient_bitrade({detail::parse_pair(o_.v1, "--v1"), detail::parse_pair(o_.v2, "--v2")});
    detail::write_output(o_.output, format_bitrade(b, parse_format(o_.format), o_.index_base), out_);
    return ok;
  }

  int cmd_enumerate() {
    namespace fs = std::filesystem;
    const fs::path dir(o_.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
      throw Abort{usage, "cannot create " + dir.string() + ": " + ec.message()};

    detail::ordered_json files = detail::ordered_json::array();
    std::size_t written = 0;
    std::size_t three_homogeneous = 0;
    std::size_t seen = 0;
    const auto count = for_each_small_bitrade(o_.order, [&](const Bitrade &b) {
      ++seen;
      const bool hom3 = is_k_homogeneous(b, 3);
      three_homogeneous += hom3 ? 1 : 0;
      if (o_.limit != 0 && written >= o_.limit)
        return;
      char name[32];
      std::snprintf(name, sizeof name, "bitrade_%06zu.txt", seen);
      std::ofstream file(dir / name, std::ios::binary);
      if (!file)
        throw Abort{usage, "cannot write " + (dir / name).string()};
      file << to_triples(b);
      ++written;

      const auto t = tau_representation(b);
      detail::ordered_json item;
      item["file"] = name;
      item["entries"] = b.size();
      std::optional<std::size_t> k;
      for (std::size_t cand = 1; cand <= b.size() && !k; ++cand)
        if (is_k_homogeneous(b, cand))
          k = cand;
      item["homogeneity"] = k ? detail::ordered_json(*k) : detail::ordered_json(nullptr);
      item["primary"] = t.t_status().t4;
      item["genus"] = detail::ordered_json::array();
      for (const auto &g : genus_per_orbit(t))
        item["genus"].push_back(g.genus);
      files.push_back(item);
    });

    detail::ordered_json manifest;
    manifest["order"] = o_.order;
    manifest["count"] = count;
    manifest["written"] = written;
    manifest["three_homogeneous"] = three_homogeneous;
    manifest["files"] = files;
    std::ofstream mf(dir / "manifest.json", std::ios::binary);
    if (!mf)
      throw Abort{usage, "cannot write manifest"};
    mf << manifest.dump(2) << "\n";

    detail::ordered_json summary;
    summary["order"] = o_.order;
    summary["count"] = count;
    summary["written"] = written;
    summary["three_homogeneous"] = three_homogeneous;
    out_ << summary.dump(2) << "\n";
    return ok;
  }

  std::istream &in_;
  std::ostream &out_;
  std::ostream &err_;
  Options o_;
};

inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  return App(in, out, err).run(args);
}

} // namespace latintrade::cli
