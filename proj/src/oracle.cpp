#include "otis/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "otis/analytics.hpp"
#include "otis/routing.hpp"

namespace otis {

int DistanceField::eccentricity() const { return *std::max_element(dist.begin(), dist.end()); }

DistanceField bfs_distances(NetKind kind, int n, const Node& source) {
  check_dimension(n, kMaxEnumDimension);
  check_node(n, source);
  DistanceField field;
  field.kind = kind;
  field.n = n;
  field.source = source;
  const std::uint32_t total = std::uint32_t{1} << (2 * n);
  field.dist.assign(total, -1);

  std::vector<std::uint32_t> queue;
  queue.reserve(total);
  const std::uint32_t start = dense_id(n, source);
  field.dist[start] = 0;
  queue.push_back(start);
  std::uint32_t adj[kMaxEnumDimension + 1];
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    const int next = field.dist[v] + 1;
    const int deg = neighbor_ids(kind, n, v, adj);
    for (int j = 0; j < deg; ++j) {
      int& d = field.dist[adj[j]];
      if (d < 0) {
        d = next;
        queue.push_back(adj[j]);
      }
    }
  }
  return field;
}

int bfs_eccentricity(NetKind kind, int n, const Node& source) {
  return bfs_distances(kind, n, source).eccentricity();
}

std::string to_string(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::Distances:
      return "distances";
    case VerifyScope::Paths:
      return "paths";
    case VerifyScope::Eccentricities:
      return "eccentricities";
    case VerifyScope::Extremes:
      return "extremes";
    case VerifyScope::Averages:
      return "averages";
  }
  return {};
}

VerifyScope parse_scope(std::string_view text) {
  for (VerifyScope s : kAllScopes) {
    if (text == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown verification scope '" + std::string(text) + "'");
}

std::vector<Node> verification_sources(int n, bool exhaustive, std::uint64_t seed) {
  check_dimension(n, kMaxEnumDimension);
  std::vector<Node> out;
  if (exhaustive) {
    const std::uint32_t total = std::uint32_t{1} << (2 * n);
    out.reserve(total);
    for (std::uint32_t id = 0; id < total; ++id) out.push_back(node_from_id(n, id));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::vector<int> bits(static_cast<std::size_t>(n));
  std::set<Node> chosen;
  for (int k = 0; k <= n; ++k) {
    const Node base{0, word_mask(k)};
    if (chosen.insert(base).second) out.push_back(base);

    const BitWord g = static_cast<BitWord>(rng() & word_mask(n));
    std::iota(bits.begin(), bits.end(), 0);
    std::shuffle(bits.begin(), bits.end(), rng);
    BitWord flip = 0;
    for (int i = 0; i < k; ++i) flip |= BitWord{1} << bits[static_cast<std::size_t>(i)];
    const Node spot{g, g ^ flip};
    if (chosen.insert(spot).second) out.push_back(spot);
  }
  return out;
}

namespace {

struct SourceResult {
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;
  int eccentricity = 0;
};

// Runs `fn` once per source, fanning contiguous chunks out to workers. The
// results come back in source order regardless of scheduling.
template <typename Fn>
std::vector<SourceResult> for_each_source(const std::vector<Node>& sources, unsigned workers,
                                          Fn fn) {
  std::vector<SourceResult> results(sources.size());
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) results[i] = fn(sources[i]);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(sources.size())));
  if (workers == 1) {
    run(0, sources.size());
    return results;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (sources.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < sources.size(); begin += chunk) {
    jobs.push_back(std::async(std::launch::async, run, begin, std::min(sources.size(), begin + chunk)));
  }
  for (auto& j : jobs) j.get();
  return results;
}

void note_failure(SourceResult& r, std::size_t cap, Failure f) {
  ++r.failure_count;
  if (r.failures.size() < cap) r.failures.push_back(std::move(f));
}

std::string rational_text(const Rational& q) {
  std::ostringstream s;
  s << q.numerator();
  if (q.denominator() != 1) s << '/' << q.denominator();
  return s.str();
}

SourceResult check_distances(NetKind kind, int n, const Node& src, std::size_t cap) {
  SourceResult r;
  const DistanceField field = bfs_distances(kind, n, src);
  const std::uint32_t total = static_cast<std::uint32_t>(field.dist.size());
  for (std::uint32_t id = 0; id < total; ++id) {
    const Node dst = node_from_id(n, id);
    const int got = kind == NetKind::Otis ? otis_distance(n, src, dst)
                                          : eroute(n, src, dst).breakdown.distance;
    ++r.checked;
    if (got != field.dist[id]) {
      note_failure(r, cap, {src, dst, std::to_string(field.dist[id]), std::to_string(got)});
    }
  }
  return r;
}

SourceResult check_paths(NetKind kind, int n, const Node& src, std::size_t cap) {
  SourceResult r;
  const DistanceField field = bfs_distances(kind, n, src);
  const std::uint32_t total = static_cast<std::uint32_t>(field.dist.size());
  const int optical_budget = kind == NetKind::Otis ? 2 : 3;
  for (std::uint32_t id = 0; id < total; ++id) {
    const Node dst = node_from_id(n, id);
    const RoutedPath routed = route(kind, n, src, dst);
    const Path& p = routed.path;
    ++r.checked;
    if (auto bad = validate_path(kind, n, p)) {
      note_failure(r, cap, {src, dst, "valid path", "hop " + std::to_string(bad->hop) + ": " + bad->reason});
    } else if (p.source() != src || p.target() != dst) {
      note_failure(r, cap, {src, dst, "path between requested endpoints", render_path(n, p)});
    } else if (p.length() != routed.breakdown.distance || p.length() != field.dist[id]) {
      note_failure(r, cap, {src, dst, std::to_string(field.dist[id]), std::to_string(p.length())});
    } else if (p.count(LinkType::ELink) > 1 ||
               p.count(LinkType::Optical) + p.count(LinkType::ELink) > optical_budget) {
      note_failure(r, cap, {src, dst, "at most one E-link and " + std::to_string(optical_budget) +
                                          " optical hops", render_path(n, p)});
    }
  }
  return r;
}

SourceResult check_eccentricity(NetKind kind, int n, const Node& src, std::size_t cap) {
  SourceResult r;
  r.eccentricity = bfs_eccentricity(kind, n, src);
  r.checked = 1;
  const int expected = ecc_closed_form(kind, n, hamming(src.group, src.proc));
  if (r.eccentricity != expected) {
    note_failure(r, cap, {src, std::nullopt, std::to_string(expected), std::to_string(r.eccentricity)});
  }
  return r;
}

}  // namespace

Report verify(NetKind kind, int n, VerifyScope scope, const VerifyOptions& options) {
  check_dimension(n, kMaxEnumDimension);
  Report report;
  report.scope = scope;
  report.kind = kind;
  report.n = n;

  const bool exhaustive = options.exhaustive || n <= kExhaustiveLimit;
  std::vector<Node> sources;
  if (scope == VerifyScope::Averages && !exhaustive) {
    // Eccentricity depends on H(g,x) only, so group 0 carries every class in
    // its true proportion.
    for (BitWord x = 0; x <= word_mask(n); ++x) sources.push_back({0, x});
  } else {
    sources = verification_sources(n, exhaustive, options.seed);
  }
  const std::size_t cap = options.max_failures;

  std::vector<SourceResult> results;
  switch (scope) {
    case VerifyScope::Distances:
      results = for_each_source(sources, options.workers,
                                [&](const Node& s) { return check_distances(kind, n, s, cap); });
      break;
    case VerifyScope::Paths:
      results = for_each_source(sources, options.workers,
                                [&](const Node& s) { return check_paths(kind, n, s, cap); });
      break;
    case VerifyScope::Eccentricities:
    case VerifyScope::Extremes:
    case VerifyScope::Averages:
      results = for_each_source(sources, options.workers,
                                [&](const Node& s) { return check_eccentricity(kind, n, s, cap); });
      break;
  }

  for (const auto& r : results) {
    report.pairs_checked += r.checked;
    if (scope == VerifyScope::Distances || scope == VerifyScope::Paths ||
        scope == VerifyScope::Eccentricities) {
      report.failure_count += r.failure_count;
      for (const auto& f : r.failures) {
        if (report.failures.size() < cap) report.failures.push_back(f);
      }
    }
  }

  std::ostringstream summary;
  if (scope == VerifyScope::Eccentricities) {
    const EccentricityProfile profile = eccentricity_profile(kind, n);
    summary << "profile (";
    for (std::size_t k = 0; k < profile.ecc.size(); ++k) summary << (k ? "," : "") << profile.ecc[k];
    summary << ")";
  } else if (scope == VerifyScope::Extremes) {
    int lo = results.front().eccentricity, hi = lo;
    for (const auto& r : results) {
      lo = std::min(lo, r.eccentricity);
      hi = std::max(hi, r.eccentricity);
    }
    const Extremes e = extremes(kind, n);
    summary << "radius " << lo << ", diameter " << hi;
    if (lo != e.radius || hi != e.diameter) {
      ++report.failure_count;
      report.failures.push_back({sources.front(), std::nullopt,
                                 "radius " + std::to_string(e.radius) + ", diameter " + std::to_string(e.diameter),
                                 summary.str()});
    }
  } else if (scope == VerifyScope::Averages) {
    std::int64_t sum = 0;
    for (const auto& r : results) sum += r.eccentricity;
    const Rational mean(sum, static_cast<std::int64_t>(results.size()));
    const Rational expected = avg_ecc(kind, n);
    summary << "mean BFS eccentricity " << rational_text(mean);
    if (mean != expected) {
      ++report.failure_count;
      report.failures.push_back({sources.front(), std::nullopt, rational_text(expected), rational_text(mean)});
    }
  } else {
    summary << sources.size() << " sources";
  }
  report.summary = summary.str();
  return report;
}

}  // namespace otis
