#include <algorithm>
#include <random>

#include "doctest.h"
#include "otis/analytics.hpp"
#include "otis/oracle.hpp"
#include "otis/routing.hpp"

using namespace otis;

namespace {

Node nd(int n, const char* text) { return parse_node(n, text); }

// Exhaustive minimum over every anchor of the one-E-link route length.
int brute_force_anchor_length(int n, const Node& src, const Node& dst) {
  int best = 1 << 30;
  for (BitWord b = 0; b <= word_mask(n); ++b) {
    const BitWord c = complement(b, n);
    best = std::min(best, otis_distance(n, src, {b, b}) + 1 + otis_distance(n, {c, c}, dst));
  }
  return best;
}

template <typename Fn>
void for_all_pairs(int n, Fn fn) {
  const std::uint32_t total = 1u << (2 * n);
  for (std::uint32_t a = 0; a < total; ++a)
    for (std::uint32_t b = 0; b < total; ++b) fn(node_from_id(n, a), node_from_id(n, b));
}

}  // namespace

TEST_CASE("hamming") {
  CHECK(hamming(0b0101, 0b0101) == 0);
  CHECK(hamming(0b0000, 0b1111) == 4);
  CHECK(hamming(0b01, 0b10) == 2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const BitWord a = rng() & 0xFFFF, b = rng() & 0xFFFF, c = rng() & 0xFFFF;
    CHECK(hamming(a, b) == hamming(b, a));
    CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
  }
}

TEST_CASE("otis_distance examples") {
  CHECK(otis_distance(2, nd(2, "00:01"), nd(2, "00:11")) == 1);
  CHECK(otis_distance(2, nd(2, "00:01"), nd(2, "10:11")) == 4);
  CHECK(otis_distance(2, nd(2, "00:00"), nd(2, "11:11")) == 5);
  CHECK_THROWS_AS(otis_distance(2, Node{0, 4}, Node{0, 0}), std::invalid_argument);
}

TEST_CASE("route_otis examples") {
  SUBCASE("same group") {
    const Path p = route_otis(2, nd(2, "00:01"), nd(2, "00:00"));
    REQUIRE(p.length() == 1);
    CHECK(p.hops[0] == Link::electrical(0));
    CHECK(render_path(2, p) == "00:01 -e0-> 00:00");
  }
  SUBCASE("two optical hops win") {
    const Path p = route_otis(2, nd(2, "00:01"), nd(2, "10:11"));
    CHECK(p.length() == 4);
    CHECK(p.count(LinkType::Optical) == 2);
    CHECK_FALSE(validate_path(NetKind::Otis, 2, p).has_value());
    CHECK(render_path(2, p) == "00:01 -opt-> 01:00 -e1-> 01:10 -opt-> 10:01 -e1-> 10:11");
  }
  SUBCASE("diagonal source forces one optical hop") {
    const Path p = route_otis(2, nd(2, "00:00"), nd(2, "11:11"));
    CHECK(p.length() == 5);
    CHECK(p.count(LinkType::Optical) == 1);
    CHECK_FALSE(validate_path(NetKind::Otis, 2, p).has_value());
    CHECK(render_path(2, p) == "00:00 -e0-> 00:01 -e1-> 00:11 -opt-> 11:00 -e0-> 11:01 -e1-> 11:11");
  }
}

TEST_CASE("rte examples") {
  auto r = rte(2, nd(2, "00:00"), nd(2, "11:11"));
  CHECK(r.length == 1);
  CHECK(r.anchor == 0b00);
  r = rte(3, nd(3, "000:111"), nd(3, "000:000"));
  CHECK(r.length == 5);
  CHECK(r.anchor == 0b111);
  CHECK(brute_force_anchor_length(3, nd(3, "000:111"), nd(3, "000:000")) == 5);
  r = rte(2, nd(2, "00:01"), nd(2, "00:00"));
  CHECK(r.length == 5);
  CHECK(r.anchor == 0b11);
  CHECK(brute_force_anchor_length(2, nd(2, "00:01"), nd(2, "00:00")) == 5);
}

TEST_CASE("eroute examples") {
  auto r = eroute(2, nd(2, "00:01"), nd(2, "00:00"));
  CHECK(r.breakdown.distance == 1);
  CHECK(r.breakdown.same_group);
  CHECK(r.path.count(LinkType::ELink) == 0);
  CHECK(r.breakdown.l3 == 5);

  r = eroute(2, nd(2, "00:00"), nd(2, "11:11"));
  CHECK(r.breakdown.distance == 1);
  REQUIRE(r.path.length() == 1);
  CHECK(r.path.hops[0] == Link::elink());

  r = eroute(2, nd(2, "00:01"), nd(2, "10:11"));
  CHECK(r.breakdown.distance == 4);
  CHECK(r.breakdown.l3 == 4);
  CHECK(r.path.count(LinkType::ELink) == 0);
}

TEST_CASE("validate_path reports violations") {
  const Path good = eroute(2, nd(2, "00:01"), nd(2, "11:10")).path;
  CHECK_FALSE(validate_path(NetKind::Eotis, 2, good).has_value());

  SUBCASE("two E-links") {
    Path p;
    p.kind = NetKind::Eotis;
    p.nodes = {nd(2, "00:00"), nd(2, "11:11"), nd(2, "00:00")};
    p.hops = {Link::elink(), Link::elink()};
    const auto bad = validate_path(NetKind::Eotis, 2, p);
    REQUIRE(bad.has_value());
    CHECK(bad->hop == 1);
  }
  SUBCASE("non-adjacent nodes") {
    Path p;
    p.kind = NetKind::Otis;
    p.nodes = {nd(2, "00:00"), nd(2, "00:11")};
    p.hops = {Link::electrical(0)};
    const auto bad = validate_path(NetKind::Otis, 2, p);
    REQUIRE(bad.has_value());
    CHECK(bad->hop == 0);
  }
  SUBCASE("wrong hop label") {
    Path p;
    p.kind = NetKind::Otis;
    p.nodes = {nd(2, "00:00"), nd(2, "00:10")};
    p.hops = {Link::electrical(0)};
    CHECK(validate_path(NetKind::Otis, 2, p).has_value());
  }
  SUBCASE("E-link absent in OTIS") {
    Path p;
    p.kind = NetKind::Otis;
    p.nodes = {nd(2, "00:00"), nd(2, "11:11")};
    p.hops = {Link::elink()};
    CHECK(validate_path(NetKind::Otis, 2, p).has_value());
  }
  SUBCASE("shape errors") {
    Path p;
    CHECK(validate_path(NetKind::Otis, 2, p)->hop == -1);
    p.nodes = {nd(2, "00:00")};
    p.hops = {Link::optical()};
    CHECK(validate_path(NetKind::Otis, 2, p)->hop == -1);
  }
}

TEST_CASE("routing matches BFS for every pair, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t total = 1u << (2 * n);
    for (std::uint32_t a = 0; a < total; ++a) {
      const Node src = node_from_id(n, a);
      const DistanceField otis_bfs = bfs_distances(NetKind::Otis, n, src);
      const DistanceField eotis_bfs = bfs_distances(NetKind::Eotis, n, src);
      for (std::uint32_t b = 0; b < total; ++b) {
        const Node dst = node_from_id(n, b);
        const Path po = route_otis(n, src, dst);
        const RoutedPath pe = eroute(n, src, dst);
        REQUIRE(po.length() == otis_bfs.dist[b]);
        REQUIRE(pe.path.length() == eotis_bfs.dist[b]);
        REQUIRE(pe.breakdown.distance == eotis_bfs.dist[b]);
        REQUIRE_FALSE(validate_path(NetKind::Otis, n, po).has_value());
        REQUIRE_FALSE(validate_path(NetKind::Eotis, n, pe.path).has_value());
        CHECK(po.count(LinkType::ELink) == 0);
        CHECK(pe.path.count(LinkType::Optical) + pe.path.count(LinkType::ELink) <= 3);
        // extra E-links only ever shorten routes
        CHECK(pe.breakdown.distance <= po.length());
        // a same-group pair never profits from an E-link
        if (src.group == dst.group) CHECK(pe.breakdown.distance == hamming(src.proc, dst.proc));
      }
    }
  }
}

TEST_CASE("rte equals the brute-force anchor minimum, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for_all_pairs(n, [n](const Node& s, const Node& d) {
      REQUIRE(rte(n, s, d).length == brute_force_anchor_length(n, s, d));
    });
  }
}

TEST_CASE("a second E-link never helps") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t total = 1u << (2 * n);
    for (std::uint32_t a = 0; a < total; ++a) {
      const Node src = node_from_id(n, a);
      const DistanceField bfs = bfs_distances(NetKind::Eotis, n, src);
      for (std::uint32_t b = 0; b < total; ++b) {
        const Node dst = node_from_id(n, b);
        if (bfs.dist[b] < otis_distance(n, src, dst)) {
          REQUIRE(brute_force_anchor_length(n, src, dst) == bfs.dist[b]);
        }
      }
    }
  }
}

TEST_CASE("symmetry of distances") {
  for (int n = 1; n <= 4; ++n) {
    for_all_pairs(n, [n](const Node& s, const Node& d) {
      REQUIRE(otis_distance(n, s, d) == otis_distance(n, d, s));
      REQUIRE(eroute(n, s, d).breakdown.distance == eroute(n, d, s).breakdown.distance);
    });
  }
}

TEST_CASE("per-bit link usage on the anchor route follows the six cost cases") {
  std::mt19937_64 rng(2024);
  const int n = 6;
  for (int trial = 0; trial < 3000; ++trial) {
    const Node src{static_cast<BitWord>(rng() & word_mask(n)), static_cast<BitWord>(rng() & word_mask(n))};
    const Node dst{static_cast<BitWord>(rng() & word_mask(n)), static_cast<BitWord>(rng() & word_mask(n))};
    const AnchorChoice choice = rte(n, src, dst);
    const Path p = route_via_anchor(n, src, dst, choice.anchor);
    REQUIRE_FALSE(validate_path(NetKind::Eotis, n, p).has_value());
    CHECK(p.length() == choice.length);
    for (int i = 0; i < n; ++i) {
      auto bit = [i](BitWord w) { return ((w >> i) & 1u) != 0; };
      const bool g = bit(src.group), x = bit(src.proc), h = bit(dst.group), y = bit(dst.proc);
      const bool b = bit(choice.anchor);
      const int uses = static_cast<int>(std::count(p.hops.begin(), p.hops.end(), Link::electrical(i)));
      CHECK(uses == anchor_route_bit_cost(g, x, h, y, b));
      const int c = anchor_case(g, x, h, y);
      if (c != 3 && c != 4) CHECK((b != g) == anchor_prefers_flip(c));
    }
  }
}

TEST_CASE("route() dispatches by kind") {
  const auto r = route(NetKind::Otis, 2, nd(2, "00:00"), nd(2, "11:11"));
  CHECK(r.breakdown.distance == 5);
  CHECK(r.breakdown.l1 == 5);
  CHECK(r.breakdown.l2 == 6);
  CHECK_FALSE(r.breakdown.l3.has_value());
  CHECK(r.path.kind == NetKind::Otis);
  const auto e = route(NetKind::Eotis, 2, nd(2, "00:00"), nd(2, "11:11"));
  CHECK(e.breakdown.distance == 1);
  CHECK(e.breakdown.anchor == 0b00u);
}

TEST_CASE("routing at large dimension stays consistent") {
  std::mt19937_64 rng(99);
  const int n = 20;
  for (int trial = 0; trial < 2000; ++trial) {
    const Node src{static_cast<BitWord>(rng() & word_mask(n)), static_cast<BitWord>(rng() & word_mask(n))};
    const Node dst{static_cast<BitWord>(rng() & word_mask(n)), static_cast<BitWord>(rng() & word_mask(n))};
    const RoutedPath r = eroute(n, src, dst);
    REQUIRE_FALSE(validate_path(NetKind::Eotis, n, r.path).has_value());
    CHECK(r.path.length() == r.breakdown.distance);
    CHECK(r.path.source() == src);
    CHECK(r.path.target() == dst);
  }
}
