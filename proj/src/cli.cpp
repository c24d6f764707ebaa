#include "otis/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "otis/oracle.hpp"
#include "otis/routing.hpp"

namespace otis::cli {

using nlohmann::ordered_json;

std::string format_decimal(const Rational& q, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = q.numerator() < 0;
  const std::int64_t num = negative ? -q.numerator() : q.numerator();
  const std::int64_t den = q.denominator();
  // round(num / den * scale) with halves rounded up, in integers
  const std::int64_t scaled = (2 * num * scale + den) / (2 * den);
  std::string digits = std::to_string(scaled / scale);
  if (places > 0) {
    std::string frac = std::to_string(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    digits += "." + frac;
  }
  return (negative && scaled != 0 ? "-" : "") + digits;
}

namespace {

// A domain error tied to the command-line argument that caused it.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
auto for_argument(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw UsageError(name + ": " + e.what());
  }
}

std::vector<NetKind> kinds_for(const std::string& text) {
  if (text == "both") return {NetKind::Otis, NetKind::Eotis};
  return {for_argument("--kind", [&] { return parse_kind(text); })};
}

const std::vector<std::string> kKindNames{"otis", "eotis"};
const std::vector<std::string> kKindOrBoth{"otis", "eotis", "both"};

struct GenConfig {
  std::string kind;
  int n = 0;
  std::string format = "edgelist";
};

struct RouteConfig {
  std::string kind;
  int n = 0;
  std::string from;
  std::string to;
  bool path = false;
  std::string format = "text";
};

struct TableConfig {
  std::string kind = "both";
  int n = 0;
  int from = 0;
  int to = 0;
  std::string format;
};

struct VerifyConfig {
  std::string kind = "both";
  int n = 0;
  int from = 1;
  int to = kDefaultVerifyDepth;
  std::vector<std::string> scopes{"all"};
  bool deep = false;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string format = "text";
};

void run_gen(const GenConfig& c, std::ostream& out) {
  const NetKind kind = parse_kind(c.kind);
  for_argument("--n", [&] { check_dimension(c.n, kMaxEnumDimension); });
  export_graph(out, kind, c.n, c.format == "dot" ? GraphFormat::Dot : GraphFormat::EdgeList);
}

ordered_json path_json(int n, const Path& p) {
  ordered_json hops = ordered_json::array();
  for (std::size_t i = 0; i < p.hops.size(); ++i) {
    hops.push_back({{"from", format_node(n, p.nodes[i])},
                    {"to", format_node(n, p.nodes[i + 1])},
                    {"link", link_token(p.hops[i])}});
  }
  return {{"length", p.length()}, {"hops", hops}};
}

void run_route(const RouteConfig& c, bool with_path, const std::string& command, std::ostream& out) {
  const NetKind kind = parse_kind(c.kind);
  for_argument("--n", [&] { check_dimension(c.n); });
  const Node src = for_argument("--from", [&] { return parse_node(c.n, c.from); });
  const Node dst = for_argument("--to", [&] { return parse_node(c.n, c.to); });
  const RoutedPath routed = route(kind, c.n, src, dst);
  const DistanceBreakdown& bd = routed.breakdown;

  if (c.format == "json") {
    ordered_json doc{{"command", command},
                     {"kind", to_string(kind)},
                     {"n", c.n},
                     {"source", format_node(c.n, src)},
                     {"target", format_node(c.n, dst)},
                     {"same_group", bd.same_group}};
    if (bd.l1) doc["l1"] = *bd.l1;
    if (bd.l2) doc["l2"] = *bd.l2;
    if (bd.l3) doc["l3"] = *bd.l3;
    if (bd.anchor) doc["anchor"] = format_word(c.n, *bd.anchor);
    doc["distance"] = bd.distance;
    if (with_path) doc["path"] = path_json(c.n, routed.path);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "kind " << to_string(kind) << '\n';
  out << "source " << format_node(c.n, src) << '\n';
  out << "target " << format_node(c.n, dst) << '\n';
  if (bd.l1) out << "l1 " << *bd.l1 << '\n';
  if (bd.l2) out << "l2 " << *bd.l2 << '\n';
  if (bd.l3) out << "l3 " << *bd.l3 << '\n';
  if (bd.anchor) out << "anchor " << format_word(c.n, *bd.anchor) << '\n';
  out << "distance " << bd.distance << '\n';
  if (with_path) out << "path " << render_path(c.n, routed.path) << '\n';
}

void run_ecc(const TableConfig& c, std::ostream& out) {
  const std::vector<NetKind> kinds = kinds_for(c.kind);
  for_argument("--n", [&] { check_dimension(c.n); });
  const std::vector<EccRow> rows = ecc_table(c.n);
  auto value = [](const EccRow& r, NetKind k) { return k == NetKind::Otis ? r.otis : r.eotis; };

  if (c.format == "json") {
    ordered_json doc{{"command", "ecc"}, {"n", c.n}};
    ordered_json jrows = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row{{"h", r.k}};
      for (NetKind k : kinds) row["ecc_" + to_string(k)] = value(r, k);
      jrows.push_back(row);
    }
    doc["rows"] = jrows;
    for (NetKind k : kinds) {
      const Extremes e = extremes(k, c.n);
      doc[to_string(k)] = {{"radius", e.radius}, {"diameter", e.diameter}};
    }
    out << doc.dump(2) << '\n';
    return;
  }
  const char sep = c.format == "csv" ? ',' : '\t';
  out << 'h';
  for (NetKind k : kinds) out << sep << "ecc_" << to_string(k);
  out << '\n';
  for (const auto& r : rows) {
    out << r.k;
    for (NetKind k : kinds) out << sep << value(r, k);
    out << '\n';
  }
}

std::pair<int, int> dimension_range(const TableConfig& c, int limit) {
  int lo = c.n ? c.n : c.from;
  int hi = c.n ? c.n : c.to;
  if (!c.n && (c.from == 0 || c.to == 0)) throw UsageError("--n or both --from and --to are required");
  for_argument(c.n ? "--n" : "--from", [&] { check_dimension(lo, limit); });
  for_argument(c.n ? "--n" : "--to", [&] { check_dimension(hi, limit); });
  if (lo > hi) throw UsageError("--from: must not exceed --to");
  return {lo, hi};
}

void run_avg(const TableConfig& c, std::ostream& out) {
  const std::vector<NetKind> kinds = kinds_for(c.kind);
  const auto [lo, hi] = dimension_range(c, kMaxDimension);
  if (c.format == "json") {
    ordered_json doc{{"command", "avg-ecc"}};
    ordered_json rows = ordered_json::array();
    for (int n = lo; n <= hi; ++n) {
      ordered_json row{{"n", n}};
      for (NetKind k : kinds) {
        const Rational q = avg_ecc(k, n);
        row["avg_" + to_string(k)] = {{"exact", std::to_string(q.numerator()) + "/" +
                                                    std::to_string(q.denominator())},
                                      {"rounded", format_decimal(q, 3)}};
      }
      rows.push_back(row);
    }
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
    return;
  }
  out << 'n';
  for (NetKind k : kinds) out << ",avg_" << to_string(k);
  out << '\n';
  for (int n = lo; n <= hi; ++n) {
    out << n;
    for (NetKind k : kinds) out << ',' << format_decimal(avg_ecc(k, n), 3);
    out << '\n';
  }
}

void run_extremes(const TableConfig& c, std::ostream& out) {
  const std::vector<NetKind> kinds = kinds_for(c.kind);
  const auto [lo, hi] = dimension_range(c, kMaxDimension);
  if (c.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int n = lo; n <= hi; ++n) {
      for (NetKind k : kinds) {
        const Extremes e = extremes(k, n);
        rows.push_back({{"n", n}, {"kind", to_string(k)}, {"radius", e.radius}, {"diameter", e.diameter}});
      }
    }
    out << ordered_json{{"command", "extremes"}, {"rows", rows}}.dump(2) << '\n';
    return;
  }
  if (c.format == "csv") out << "n,kind,radius,diameter\n";
  for (int n = lo; n <= hi; ++n) {
    for (NetKind k : kinds) {
      const Extremes e = extremes(k, n);
      if (c.format == "csv") {
        out << n << ',' << to_string(k) << ',' << e.radius << ',' << e.diameter << '\n';
      } else {
        out << to_string(k) << " n=" << n << " radius " << e.radius << " diameter " << e.diameter
            << '\n';
      }
    }
  }
}

ordered_json report_json(const Report& r) {
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"src", format_node(r.n, f.src)},
                        {"dst", f.dst ? ordered_json(format_node(r.n, *f.dst)) : ordered_json(nullptr)},
                        {"expected", f.expected},
                        {"got", f.got}});
  }
  return {{"suite", to_string(r.scope)},    {"kind", to_string(r.kind)},
          {"n", r.n},                       {"pairs_checked", r.pairs_checked},
          {"passed", r.passed()},           {"failure_count", r.failure_count},
          {"summary", r.summary},           {"failures", failures}};
}

int run_verify(const VerifyConfig& c, std::ostream& out, std::ostream& err) {
  const std::vector<NetKind> kinds = kinds_for(c.kind);
  const int lo = c.n ? c.n : c.from;
  const int hi = c.n ? c.n : c.to;
  const int limit = c.deep ? kMaxEnumDimension : kDefaultVerifyDepth;
  const std::string flag = c.n ? "--n" : "--to";
  if (hi > kDefaultVerifyDepth && !c.deep) {
    throw UsageError(flag + ": dimensions above " + std::to_string(kDefaultVerifyDepth) +
                     " require --deep");
  }
  for_argument(c.n ? "--n" : "--from", [&] { check_dimension(lo, limit); });
  for_argument(flag, [&] { check_dimension(hi, limit); });
  if (lo > hi) throw UsageError("--from: must not exceed --to");

  std::vector<VerifyScope> scopes;
  for (const auto& s : c.scopes) {
    if (s == "all") {
      scopes.assign(std::begin(kAllScopes), std::end(kAllScopes));
      break;
    }
    scopes.push_back(for_argument("--scope", [&] { return parse_scope(s); }));
  }
  if (c.deep && hi > kDefaultVerifyDepth) {
    err << "warning: deep verification up to n=" << hi << " may run for several minutes\n";
  }

  VerifyOptions options;
  options.seed = c.seed;
  options.workers = c.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : c.workers;

  bool all_passed = true;
  ordered_json reports = ordered_json::array();
  for (int n = lo; n <= hi; ++n) {
    for (NetKind k : kinds) {
      for (VerifyScope s : scopes) {
        const Report r = verify(k, n, s, options);
        all_passed = all_passed && r.passed();
        if (c.format == "json") {
          reports.push_back(report_json(r));
          continue;
        }
        out << (r.passed() ? "PASS " : "FAIL ") << to_string(s) << ' ' << to_string(k) << " n=" << n
            << " checked=" << r.pairs_checked << " (" << r.summary << ")\n";
        for (const auto& f : r.failures) {
          out << "  src " << format_node(n, f.src);
          if (f.dst) out << " dst " << format_node(n, *f.dst);
          out << " expected " << f.expected << " got " << f.got << '\n';
        }
      }
    }
  }
  if (c.format == "json") {
    out << ordered_json{{"command", "verify"}, {"passed", all_passed}, {"reports", reports}}.dump(2)
        << '\n';
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"OTIS-cube and E-OTIS-cube topology, routing and eccentricity toolkit", "otiscube"};
  app.require_subcommand(1);

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "Export the network graph");
  gen_cmd->add_option("--kind", gen.kind, "otis or eotis")->required()->check(CLI::IsMember(kKindNames));
  gen_cmd->add_option("--n", gen.n, "Dimension")->required();
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"edgelist", "dot"}));

  RouteConfig dist, route_cfg;
  auto add_route_options = [](CLI::App* cmd, RouteConfig& c) {
    cmd->add_option("--kind", c.kind, "otis or eotis")->required()->check(CLI::IsMember(kKindNames));
    cmd->add_option("--n", c.n, "Dimension")->required();
    cmd->add_option("--from", c.from, "Source node GROUP:PROC")->required();
    cmd->add_option("--to", c.to, "Target node GROUP:PROC")->required();
    cmd->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
  };
  auto* dist_cmd = app.add_subcommand("dist", "Shortest-path distance and its breakdown");
  add_route_options(dist_cmd, dist);
  dist_cmd->add_flag("--path", dist.path, "Also emit the hop-by-hop path");
  auto* route_cmd = app.add_subcommand("route", "Shortest path, hop by hop");
  add_route_options(route_cmd, route_cfg);

  TableConfig ecc{.format = "csv"};
  auto* ecc_cmd = app.add_subcommand("ecc", "Eccentricity per Hamming class H(g,x)");
  ecc_cmd->add_option("--n", ecc.n, "Dimension")->required();
  ecc_cmd->add_option("--kind", ecc.kind)->check(CLI::IsMember(kKindOrBoth));
  ecc_cmd->add_option("--format", ecc.format)->check(CLI::IsMember({"csv", "text", "json"}));

  TableConfig avg{.format = "csv"};
  auto* avg_cmd = app.add_subcommand("avg-ecc", "Average eccentricity over a range of dimensions");
  auto* avg_n = avg_cmd->add_option("--n", avg.n, "Single dimension");
  avg_cmd->add_option("--from", avg.from, "First dimension")->excludes(avg_n);
  avg_cmd->add_option("--to", avg.to, "Last dimension")->excludes(avg_n);
  avg_cmd->add_option("--kind", avg.kind)->check(CLI::IsMember(kKindOrBoth));
  avg_cmd->add_option("--format", avg.format)->check(CLI::IsMember({"csv", "json"}));

  TableConfig ext{.format = "text"};
  auto* ext_cmd = app.add_subcommand("extremes", "Radius and diameter");
  auto* ext_n = ext_cmd->add_option("--n", ext.n, "Single dimension");
  ext_cmd->add_option("--from", ext.from, "First dimension")->excludes(ext_n);
  ext_cmd->add_option("--to", ext.to, "Last dimension")->excludes(ext_n);
  ext_cmd->add_option("--kind", ext.kind)->check(CLI::IsMember(kKindOrBoth));
  ext_cmd->add_option("--format", ext.format)->check(CLI::IsMember({"text", "csv", "json"}));

  VerifyConfig ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check closed forms and routing against BFS");
  auto* ver_n = ver_cmd->add_option("--n", ver.n, "Single dimension");
  ver_cmd->add_option("--from", ver.from, "First dimension")->excludes(ver_n);
  ver_cmd->add_option("--to", ver.to, "Last dimension")->excludes(ver_n);
  ver_cmd->add_option("--kind", ver.kind)->check(CLI::IsMember(kKindOrBoth));
  ver_cmd->add_option("--scope", ver.scopes, "distances, paths, eccentricities, extremes, averages or all")
      ->check(CLI::IsMember({"all", "distances", "paths", "eccentricities", "extremes", "averages"}));
  ver_cmd->add_flag("--deep", ver.deep, "Allow dimensions up to 8");
  ver_cmd->add_option("--seed", ver.seed, "Seed for representative sources");
  ver_cmd->add_option("--workers", ver.workers, "Worker threads (0 = hardware concurrency)");
  ver_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) run_gen(gen, out);
    if (dist_cmd->parsed()) run_route(dist, dist.path, "dist", out);
    if (route_cmd->parsed()) run_route(route_cfg, true, "route", out);
    if (ecc_cmd->parsed()) run_ecc(ecc, out);
    if (avg_cmd->parsed()) run_avg(avg, out);
    if (ext_cmd->parsed()) run_extremes(ext, out);
    if (ver_cmd->parsed()) return run_verify(ver, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace otis::cli
