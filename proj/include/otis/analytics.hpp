#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "otis/topology.hpp"

namespace otis {

using Rational = boost::rational<std::int64_t>;

// ---------------------------------------------------------------------------
// Per-bit classification of a (source, target) pair.
//
// Bit i of <g,x> -> <h,y> falls in exactly one of eight cases:
//   1: g != x, h = y = g        5: g = x, h = y = g
//   2: g != x, h = y != g       6: g = x, h = y != g
//   3: g = x = h, h != y        7: g != x, h != y, h = g
//   4: g = x != h, h != y       8: g != x, h != y, h != g
// ---------------------------------------------------------------------------

int bit_case(bool g, bool x, bool h, bool y);

struct BitClasses {
  int n = 0;
  std::array<int, 8> counts{};  // counts[c - 1] = |S_c|

  int s(int c) const { return counts.at(static_cast<std::size_t>(c - 1)); }
  /// |S1| + |S2| + |S3| + |S4|
  int t_sum() const { return s(1) + s(2) + s(3) + s(4); }
};

BitClasses classify_bits(int n, const Node& src, const Node& dst);

/// Uses of electrical link i on the one-optical (a), two-optical (b) and
/// E-link (c) routes for a bit in the given case.
struct PerBitCosts {
  int case_id = 0;
  int a = 0;
  int b = 0;
  int c = 0;
};

PerBitCosts per_bit_costs(int case_id);

struct LemmaLengths {
  int l1 = 0;
  int l2 = 0;
  int l3_lo = 0;
  int l3_hi = 0;
  /// Set when |S1| = 0 and |S3| + |S5| + |S7| > 0.
  std::optional<int> l3_exact;
};

/// Route lengths expressed through the class counts. Throws
/// std::invalid_argument when the counts are negative or do not sum to n.
LemmaLengths lemma_lengths(const BitClasses& bc);

/// Uses of link i on the walk <g,x> -> <b,b> (or <~b,~b> -> <h,y>, passing
/// h, y and ~b), given the three bits at position i.
int segment_bit_cost(bool group_bit, bool proc_bit, bool anchor_bit);

/// The six anchor-cost cases for a bit of an E-link route:
///   1: g != x, h = y = g      4: g = x, h = y = g
///   2: g != x, h = y != g     5: g = x, h = y != g
///   3: g != x, h != y         6: g = x, h != y
int anchor_case(bool g, bool x, bool h, bool y);

/// Total uses of link i on <g,x> -> <b,b> -> <~b,~b> -> <h,y>.
int anchor_route_bit_cost(bool g, bool x, bool h, bool y, bool b);

/// Whether the cheapest choice for this bit is b[i] != g[i]. Cases 3 and 4
/// are indifferent and report false.
bool anchor_prefers_flip(int case_id);

// ---------------------------------------------------------------------------
// Eccentricity.
// ---------------------------------------------------------------------------

/// Eccentricity of any node <g,x> with H(g,x) = k.
int ecc_closed_form(NetKind kind, int n, int k);

struct Extremes {
  int radius = 0;
  int diameter = 0;
};

Extremes extremes(NetKind kind, int n);

struct EccentricityProfile {
  NetKind kind = NetKind::Otis;
  int n = 0;
  std::vector<int> ecc;  // indexed by k = H(g,x)
  int radius = 0;
  int diameter = 0;
  Rational average;
};

EccentricityProfile eccentricity_profile(NetKind kind, int n);

/// C(n, k), exact.
std::uint64_t binomial(int n, int k);

/// Mean eccentricity over all nodes. OTIS uses (3n + 2) / 2; E-OTIS sums
/// the two eccentricity regimes weighted by class size.
Rational avg_ecc(NetKind kind, int n);

/// sum_k C(n,k) * ecc_closed_form(kind, n, k) / 2^n
Rational class_weighted_average(NetKind kind, int n);

struct EccRow {
  int k = 0;
  int otis = 0;
  int eotis = 0;
};

std::vector<EccRow> ecc_table(int n);

}  // namespace otis
