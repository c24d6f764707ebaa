#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otis/topology.hpp"

namespace otis {

/// An explicit route. hops[i] is the link taken from nodes[i] to nodes[i + 1].
struct Path {
  NetKind kind = NetKind::Otis;
  std::vector<Node> nodes;
  std::vector<Link> hops;

  int length() const { return static_cast<int>(hops.size()); }
  int count(LinkType type) const;
  const Node& source() const { return nodes.front(); }
  const Node& target() const { return nodes.back(); }
};

/// Candidate lengths behind a routing decision.
///
/// `l1`/`l2` are the one- and two-optical-hop route lengths and are empty
/// when source and target share a group. `l3` and `anchor` describe the best
/// route through an E-link and are set only for E-OTIS.
struct DistanceBreakdown {
  bool same_group = false;
  std::optional<int> l1;
  std::optional<int> l2;
  std::optional<int> l3;
  std::optional<BitWord> anchor;
  int distance = 0;
};

/// Best route through an E-link <anchor,anchor> -- <~anchor,~anchor>.
struct AnchorChoice {
  int length = 0;
  BitWord anchor = 0;
};

struct RoutedPath {
  DistanceBreakdown breakdown;
  Path path;
};

struct PathViolation {
  int hop = 0;  // index into Path::hops; -1 for whole-path problems
  std::string reason;
};

int hamming(BitWord u, BitWord v);

/// Shortest-path distance in OTIS-Q_n.
int otis_distance(int n, const Node& src, const Node& dst);

/// Shortest path in OTIS-Q_n. Ties between the one- and two-optical-hop
/// forms take the one-optical-hop form.
Path route_otis(int n, const Node& src, const Node& dst);

/// Length and anchor of the shortest E-OTIS path that uses exactly one E-link.
AnchorChoice rte(int n, const Node& src, const Node& dst);

/// The one-E-link path src -> <b,b> -> <~b,~b> -> dst for a given anchor b.
Path route_via_anchor(int n, const Node& src, const Node& dst, BitWord anchor);

/// Shortest path in E-OTIS-Q_n. Prefers the E-link-free route on ties.
RoutedPath eroute(int n, const Node& src, const Node& dst);

/// Breakdown plus path for either network kind.
RoutedPath route(NetKind kind, int n, const Node& src, const Node& dst);

/// Returns the first violated path invariant, or nothing if the path is valid.
std::optional<PathViolation> validate_path(NetKind kind, int n, const Path& path);

/// `00:01 -opt-> 01:00 -e1-> 01:10`
std::string render_path(int n, const Path& path);

}  // namespace otis
