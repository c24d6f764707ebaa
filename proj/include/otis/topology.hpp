#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otis {

/// An n-bit word; bit i is the coefficient of 2^i.
using BitWord = std::uint32_t;

/// Largest dimension accepted by closed-form analytics and routing.
inline constexpr int kMaxDimension = 20;
/// Largest dimension for which the whole graph may be enumerated.
inline constexpr int kMaxEnumDimension = 8;

enum class NetKind { Otis, Eotis };

/// A node <group, proc>. Both words share the enclosing network's dimension.
struct Node {
  BitWord group = 0;
  BitWord proc = 0;

  friend constexpr auto operator<=>(const Node&, const Node&) = default;
};

enum class LinkType { Electrical, Optical, ELink };

/// A link kind. `bit` is meaningful only for electrical links.
struct Link {
  LinkType type = LinkType::Electrical;
  int bit = 0;

  static constexpr Link electrical(int i) { return {LinkType::Electrical, i}; }
  static constexpr Link optical() { return {LinkType::Optical, 0}; }
  static constexpr Link elink() { return {LinkType::ELink, 0}; }

  friend constexpr bool operator==(const Link& a, const Link& b) {
    if (a.type != b.type) return false;
    return a.type != LinkType::Electrical || a.bit == b.bit;
  }
};

struct Neighbor {
  Node node;
  Link link;
};

enum class GraphFormat { EdgeList, Dot };

constexpr BitWord word_mask(int n) { return (BitWord{1} << n) - 1; }
constexpr BitWord complement(BitWord w, int n) { return ~w & word_mask(n); }

/// Throws std::out_of_range unless 1 <= n <= limit.
void check_dimension(int n, int limit = kMaxDimension);
/// Throws std::invalid_argument if either word of `v` has bits at or above n.
void check_node(int n, const Node& v);

std::uint64_t node_count(int n);

/// Dense index group * 2^n + proc.
constexpr std::uint32_t dense_id(int n, const Node& v) { return (v.group << n) | v.proc; }
constexpr Node node_from_id(int n, std::uint32_t id) { return {id >> n, id & word_mask(n)}; }

/// Neighbors in deterministic order: electrical by ascending bit, then optical,
/// then the E-link.
std::vector<Neighbor> neighbors(NetKind kind, int n, const Node& v);

/// Allocation-free variant of `neighbors` for hot loops. Returns the degree.
int neighbor_ids(NetKind kind, int n, std::uint32_t id, std::uint32_t* out);

std::optional<Link> is_adjacent(NetKind kind, int n, const Node& u, const Node& v);

/// Number of undirected edges, from the counting formula.
std::uint64_t edge_count(NetKind kind, int n);

/// Fixed-width binary `GGG:PPP`, most significant bit first.
std::string format_node(int n, const Node& v);
/// Inverse of format_node. Throws std::invalid_argument on malformed text.
Node parse_node(int n, std::string_view text);

std::string format_word(int n, BitWord w);
std::string link_token(const Link& link);
/// Parses `e<i>`, `opt` or `elink`. Throws std::invalid_argument.
Link parse_link_token(std::string_view token);

std::string to_string(NetKind kind);
/// Accepts `otis` or `eotis` (case-insensitive).
NetKind parse_kind(std::string_view text);

/// Writes each undirected edge once, ordered by the smaller endpoint.
void export_graph(std::ostream& out, NetKind kind, int n, GraphFormat format);

struct Edge {
  Node u;
  Node v;
  Link link;
};

/// Reads the `<u> <v> <kind>` edge-list format back.
std::vector<Edge> parse_edge_list(std::istream& in, int n);

}  // namespace otis
