#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otis/topology.hpp"

namespace otis {

/// Unweighted shortest-path distances from one source, indexed by dense id.
struct DistanceField {
  NetKind kind = NetKind::Otis;
  int n = 0;
  Node source;
  std::vector<int> dist;

  int at(const Node& v) const { return dist[dense_id(n, v)]; }
  int eccentricity() const;
};

/// Breadth-first search over the explicitly enumerated graph.
DistanceField bfs_distances(NetKind kind, int n, const Node& source);
int bfs_eccentricity(NetKind kind, int n, const Node& source);

enum class VerifyScope { Distances, Paths, Eccentricities, Extremes, Averages };

std::string to_string(VerifyScope scope);
/// Throws std::invalid_argument for unknown names.
VerifyScope parse_scope(std::string_view text);
inline constexpr VerifyScope kAllScopes[] = {VerifyScope::Distances, VerifyScope::Paths,
                                             VerifyScope::Eccentricities, VerifyScope::Extremes,
                                             VerifyScope::Averages};

/// Dimensions above this use per-class representative sources unless
/// `exhaustive` is requested.
inline constexpr int kExhaustiveLimit = 6;

struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool exhaustive = false;  // force every node as a source regardless of n
  std::size_t max_failures = 10;
};

struct Failure {
  Node src;
  std::optional<Node> dst;
  std::string expected;
  std::string got;
};

struct Report {
  VerifyScope scope = VerifyScope::Distances;
  NetKind kind = NetKind::Otis;
  int n = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // first max_failures, in source order
  std::string summary;

  bool passed() const { return failure_count == 0; }
};

/// Source nodes used by `verify`: every node when exhaustive, otherwise for
/// each Hamming class k one node in group 0 and one in a seeded random group.
std::vector<Node> verification_sources(int n, bool exhaustive, std::uint64_t seed);

/// Compares closed forms and routing results against BFS.
Report verify(NetKind kind, int n, VerifyScope scope, const VerifyOptions& options = {});

}  // namespace otis
