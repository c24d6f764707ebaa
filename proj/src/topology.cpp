#include "otis/topology.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace otis {

void check_dimension(int n, int limit) {
  if (n < 1 || n > limit) {
    throw std::out_of_range("dimension " + std::to_string(n) + " outside supported range 1.." +
                            std::to_string(limit));
  }
}

void check_node(int n, const Node& v) {
  const BitWord mask = word_mask(n);
  if ((v.group & ~mask) != 0 || (v.proc & ~mask) != 0) {
    throw std::invalid_argument("node word exceeds " + std::to_string(n) + " bits");
  }
}

std::uint64_t node_count(int n) {
  check_dimension(n);
  return std::uint64_t{1} << (2 * n);
}

int neighbor_ids(NetKind kind, int n, std::uint32_t id, std::uint32_t* out) {
  const BitWord g = id >> n;
  const BitWord x = id & word_mask(n);
  int deg = 0;
  for (int i = 0; i < n; ++i) out[deg++] = id ^ (BitWord{1} << i);
  if (g != x) {
    out[deg++] = (x << n) | g;
  } else if (kind == NetKind::Eotis) {
    const BitWord c = complement(g, n);
    out[deg++] = (c << n) | c;
  }
  return deg;
}

std::vector<Neighbor> neighbors(NetKind kind, int n, const Node& v) {
  check_dimension(n);
  check_node(n, v);
  std::vector<Neighbor> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    out.push_back({{v.group, v.proc ^ (BitWord{1} << i)}, Link::electrical(i)});
  }
  if (v.group != v.proc) {
    out.push_back({{v.proc, v.group}, Link::optical()});
  } else if (kind == NetKind::Eotis) {
    const BitWord c = complement(v.group, n);
    out.push_back({{c, c}, Link::elink()});
  }
  return out;
}

std::optional<Link> is_adjacent(NetKind kind, int n, const Node& u, const Node& v) {
  check_dimension(n);
  check_node(n, u);
  check_node(n, v);
  if (u.group == v.group) {
    const BitWord diff = u.proc ^ v.proc;
    if (diff != 0 && (diff & (diff - 1)) == 0) {
      int bit = 0;
      while ((diff >> bit) != 1) ++bit;
      return Link::electrical(bit);
    }
    return std::nullopt;
  }
  if (u.group != u.proc && v.group == u.proc && v.proc == u.group) return Link::optical();
  if (kind == NetKind::Eotis && u.group == u.proc && v.group == v.proc &&
      v.group == complement(u.group, n)) {
    return Link::elink();
  }
  return std::nullopt;
}

std::uint64_t edge_count(NetKind kind, int n) {
  check_dimension(n);
  const std::uint64_t nodes = std::uint64_t{1} << (2 * n);
  const std::uint64_t groups = std::uint64_t{1} << n;
  std::uint64_t edges = static_cast<std::uint64_t>(n) * (nodes / 2) + (nodes - groups) / 2;
  if (kind == NetKind::Eotis) edges += groups / 2;
  return edges;
}

std::string format_word(int n, BitWord w) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((w >> i) & 1u) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  }
  return s;
}

std::string format_node(int n, const Node& v) {
  return format_word(n, v.group) + ":" + format_word(n, v.proc);
}

namespace {

BitWord parse_word(int n, std::string_view text, std::string_view whole) {
  if (text.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("node '" + std::string(whole) + "' must have " + std::to_string(n) +
                                "-bit group and processor words");
  }
  BitWord w = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("node '" + std::string(whole) + "' contains non-binary digit");
    }
    w = (w << 1) | static_cast<BitWord>(c - '0');
  }
  return w;
}

}  // namespace

Node parse_node(int n, std::string_view text) {
  check_dimension(n);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("node '" + std::string(text) + "' is not of the form GROUP:PROC");
  }
  return {parse_word(n, text.substr(0, colon), text), parse_word(n, text.substr(colon + 1), text)};
}

std::string link_token(const Link& link) {
  switch (link.type) {
    case LinkType::Electrical:
      return "e" + std::to_string(link.bit);
    case LinkType::Optical:
      return "opt";
    case LinkType::ELink:
      return "elink";
  }
  return {};
}

Link parse_link_token(std::string_view token) {
  if (token == "opt") return Link::optical();
  if (token == "elink") return Link::elink();
  if (token.size() >= 2 && token[0] == 'e' &&
      std::all_of(token.begin() + 1, token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return Link::electrical(std::stoi(std::string(token.substr(1))));
  }
  throw std::invalid_argument("unknown link kind '" + std::string(token) + "'");
}

std::string to_string(NetKind kind) { return kind == NetKind::Otis ? "otis" : "eotis"; }

NetKind parse_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "otis") return NetKind::Otis;
  if (lower == "eotis" || lower == "e-otis") return NetKind::Eotis;
  throw std::invalid_argument("unknown network kind '" + std::string(text) + "'");
}

void export_graph(std::ostream& out, NetKind kind, int n, GraphFormat format) {
  check_dimension(n, kMaxEnumDimension);
  const std::uint32_t total = std::uint32_t{1} << (2 * n);
  if (format == GraphFormat::Dot) {
    out << "graph \"" << (kind == NetKind::Otis ? "OTIS-Q" : "E-OTIS-Q") << n << "\" {\n";
  }
  for (std::uint32_t id = 0; id < total; ++id) {
    const Node u = node_from_id(n, id);
    for (const auto& nb : neighbors(kind, n, u)) {
      if (dense_id(n, nb.node) <= id) continue;
      if (format == GraphFormat::EdgeList) {
        out << format_node(n, u) << ' ' << format_node(n, nb.node) << ' ' << link_token(nb.link)
            << '\n';
      } else {
        out << "  \"" << format_node(n, u) << "\" -- \"" << format_node(n, nb.node)
            << "\" [label=\"" << link_token(nb.link) << "\"];\n";
      }
    }
  }
  if (format == GraphFormat::Dot) out << "}\n";
}

std::vector<Edge> parse_edge_list(std::istream& in, int n) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string u, v, k, extra;
    if (!(fields >> u >> v >> k) || (fields >> extra)) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) + " is malformed");
    }
    edges.push_back({parse_node(n, u), parse_node(n, v), parse_link_token(k)});
  }
  return edges;
}

}  // namespace otis
