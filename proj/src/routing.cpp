#include "otis/routing.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace otis {

namespace {

void check_pair(int n, const Node& src, const Node& dst) {
  check_dimension(n);
  check_node(n, src);
  check_node(n, dst);
}

// Walks inside group `at.group` to processor `to`, flipping bits in
// ascending order.
void walk_group(Path& path, BitWord to) {
  const Node at = path.nodes.back();
  BitWord diff = at.proc ^ to;
  BitWord proc = at.proc;
  while (diff != 0) {
    const int bit = std::countr_zero(diff);
    proc ^= BitWord{1} << bit;
    diff &= diff - 1;
    path.nodes.push_back({at.group, proc});
    path.hops.push_back(Link::electrical(bit));
  }
}

void take_optical(Path& path) {
  const Node at = path.nodes.back();
  path.nodes.push_back({at.proc, at.group});
  path.hops.push_back(Link::optical());
}

int one_optical_length(const Node& s, const Node& d) {
  return hamming(s.proc, d.group) + hamming(s.group, d.proc) + 1;
}

int two_optical_length(const Node& s, const Node& d) {
  return hamming(s.group, d.group) + hamming(s.proc, d.proc) + 2;
}

// Appends the OTIS route from path.nodes.back() to dst.
void append_otis_route(Path& path, const Node& dst) {
  const Node src = path.nodes.back();
  if (src.group == dst.group) {
    walk_group(path, dst.proc);
  } else if (two_optical_length(src, dst) < one_optical_length(src, dst)) {
    // <g,x> -> <x,g> -> <x,h> -> <h,x> -> <h,y>
    take_optical(path);
    walk_group(path, dst.group);
    take_optical(path);
    walk_group(path, dst.proc);
  } else {
    // <g,x> -> <g,h> -> <h,g> -> <h,y>
    walk_group(path, dst.group);
    take_optical(path);
    walk_group(path, dst.proc);
  }
}

}  // namespace

int Path::count(LinkType type) const {
  return static_cast<int>(
      std::count_if(hops.begin(), hops.end(), [type](const Link& l) { return l.type == type; }));
}

int hamming(BitWord u, BitWord v) { return std::popcount(u ^ v); }

int otis_distance(int n, const Node& src, const Node& dst) {
  check_pair(n, src, dst);
  if (src.group == dst.group) return hamming(src.proc, dst.proc);
  return std::min(two_optical_length(src, dst), one_optical_length(src, dst));
}

Path route_otis(int n, const Node& src, const Node& dst) {
  check_pair(n, src, dst);
  Path path;
  path.kind = NetKind::Otis;
  path.nodes.push_back(src);
  append_otis_route(path, dst);
  return path;
}

AnchorChoice rte(int n, const Node& src, const Node& dst) {
  check_pair(n, src, dst);
  const BitWord mask = word_mask(n);
  const BitWord g = src.group, x = src.proc, h = dst.group, y = dst.proc;
  auto xnor = [mask](BitWord a, BitWord b) { return ~(a ^ b) & mask; };

  // t: bits where g != x and h = y = g, the only bits that favour b[i] != g[i].
  // u: bits where h != y and g = x = h, the mirror set on the target side.
  const BitWord t = (g ^ x) & xnor(g, h) & xnor(h, y);
  const BitWord u = (h ^ y) & xnor(g, h) & xnor(g, x);

  BitWord b;
  if (t == 0) {
    b = g;
  } else if (u != 0) {
    b = g ^ t;
  } else {
    b = complement(h, n);
  }
  const BitWord nb = complement(b, n);
  return {otis_distance(n, src, {b, b}) + 1 + otis_distance(n, {nb, nb}, dst), b};
}

Path route_via_anchor(int n, const Node& src, const Node& dst, BitWord anchor) {
  check_pair(n, src, dst);
  check_node(n, {anchor, anchor});
  Path path;
  path.kind = NetKind::Eotis;
  path.nodes.push_back(src);
  append_otis_route(path, {anchor, anchor});
  const BitWord far = complement(anchor, n);
  path.nodes.push_back({far, far});
  path.hops.push_back(Link::elink());
  append_otis_route(path, dst);
  return path;
}

RoutedPath eroute(int n, const Node& src, const Node& dst) {
  check_pair(n, src, dst);
  RoutedPath out;
  DistanceBreakdown& bd = out.breakdown;
  bd.same_group = src.group == dst.group;
  if (!bd.same_group) {
    bd.l1 = one_optical_length(src, dst);
    bd.l2 = two_optical_length(src, dst);
  }
  const int direct = otis_distance(n, src, dst);
  const AnchorChoice via = rte(n, src, dst);
  bd.l3 = via.length;
  bd.anchor = via.anchor;
  if (direct <= via.length) {
    bd.distance = direct;
    out.path = route_otis(n, src, dst);
    out.path.kind = NetKind::Eotis;
  } else {
    bd.distance = via.length;
    out.path = route_via_anchor(n, src, dst, via.anchor);
  }
  return out;
}

RoutedPath route(NetKind kind, int n, const Node& src, const Node& dst) {
  if (kind == NetKind::Eotis) return eroute(n, src, dst);
  RoutedPath out;
  DistanceBreakdown& bd = out.breakdown;
  out.path = route_otis(n, src, dst);
  bd.same_group = src.group == dst.group;
  if (!bd.same_group) {
    bd.l1 = one_optical_length(src, dst);
    bd.l2 = two_optical_length(src, dst);
  }
  bd.distance = otis_distance(n, src, dst);
  return out;
}

std::optional<PathViolation> validate_path(NetKind kind, int n, const Path& path) {
  if (path.nodes.empty()) return PathViolation{-1, "path has no nodes"};
  if (path.hops.size() + 1 != path.nodes.size()) {
    return PathViolation{-1, "hop count does not match node count"};
  }
  if (path.kind != kind) return PathViolation{-1, "path built for a different network kind"};
  const BitWord mask = word_mask(n);
  for (const Node& v : path.nodes) {
    if ((v.group & ~mask) != 0 || (v.proc & ~mask) != 0) {
      return PathViolation{-1, "node " + std::to_string(v.group) + ":" + std::to_string(v.proc) +
                                   " exceeds dimension"};
    }
  }
  bool seen_elink = false;
  for (std::size_t i = 0; i < path.hops.size(); ++i) {
    const int hop = static_cast<int>(i);
    const auto actual = is_adjacent(kind, n, path.nodes[i], path.nodes[i + 1]);
    if (!actual) return PathViolation{hop, "consecutive nodes are not adjacent"};
    if (!(*actual == path.hops[i])) {
      return PathViolation{hop, "hop labelled " + link_token(path.hops[i]) + " but link is " +
                                    link_token(*actual)};
    }
    if (actual->type == LinkType::ELink) {
      if (seen_elink) return PathViolation{hop, "second E-link hop"};
      seen_elink = true;
    }
  }
  return std::nullopt;
}

std::string render_path(int n, const Path& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    if (i > 0) out << " -" << link_token(path.hops[i - 1]) << "-> ";
    out << format_node(n, path.nodes[i]);
  }
  return out.str();
}

}  // namespace otis
