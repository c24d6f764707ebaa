#include "otis/analytics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace otis {

int bit_case(bool g, bool x, bool h, bool y) {
  if (g != x) {
    if (h == y) return h == g ? 1 : 2;
    return h == g ? 7 : 8;
  }
  if (h != y) return h == g ? 3 : 4;
  return h == g ? 5 : 6;
}

BitClasses classify_bits(int n, const Node& src, const Node& dst) {
  check_dimension(n);
  check_node(n, src);
  check_node(n, dst);
  BitClasses bc;
  bc.n = n;
  for (int i = 0; i < n; ++i) {
    auto bit = [i](BitWord w) { return ((w >> i) & 1u) != 0; };
    const int c = bit_case(bit(src.group), bit(src.proc), bit(dst.group), bit(dst.proc));
    ++bc.counts[static_cast<std::size_t>(c - 1)];
  }
  return bc;
}

PerBitCosts per_bit_costs(int case_id) {
  static constexpr std::array<PerBitCosts, 8> table{{
      {1, 1, 1, 1},
      {2, 1, 1, 1},
      {3, 1, 1, 1},
      {4, 1, 1, 1},
      {5, 0, 0, 2},
      {6, 2, 2, 0},
      {7, 2, 0, 2},
      {8, 0, 2, 2},
  }};
  if (case_id < 1 || case_id > 8) {
    throw std::out_of_range("bit case " + std::to_string(case_id) + " outside 1..8");
  }
  return table[static_cast<std::size_t>(case_id - 1)];
}

LemmaLengths lemma_lengths(const BitClasses& bc) {
  int total = 0;
  for (int c : bc.counts) {
    if (c < 0) throw std::invalid_argument("negative bit-class count");
    total += c;
  }
  if (total != bc.n) {
    throw std::invalid_argument("bit-class counts sum to " + std::to_string(total) +
                                ", expected " + std::to_string(bc.n));
  }
  const int t = bc.t_sum();
  LemmaLengths out;
  out.l1 = t + 2 * bc.s(6) + 2 * bc.s(7) + 1;
  out.l2 = t + 2 * bc.s(6) + 2 * bc.s(8) + 2;
  // Electrical cost of the best E-link route plus one to three optical hops.
  const int electrical = t + 2 * bc.s(5) + 2 * bc.s(7) + 2 * bc.s(8);
  out.l3_lo = electrical + 1;
  out.l3_hi = electrical + 3;
  // With S1 empty the anchor is g itself (no optical hop before the E-link),
  // and S3/S5/S7 bits force ~g != h (one optical hop after it).
  if (bc.s(1) == 0 && bc.s(3) + bc.s(5) + bc.s(7) > 0) out.l3_exact = electrical + 2;
  return out;
}

int segment_bit_cost(bool group_bit, bool proc_bit, bool anchor_bit) {
  if (group_bit != proc_bit) return 1;
  return group_bit == anchor_bit ? 0 : 2;
}

int anchor_case(bool g, bool x, bool h, bool y) {
  if (g != x) {
    if (h != y) return 3;
    return h == g ? 1 : 2;
  }
  if (h != y) return 6;
  return h == g ? 4 : 5;
}

int anchor_route_bit_cost(bool g, bool x, bool h, bool y, bool b) {
  return segment_bit_cost(g, x, b) + segment_bit_cost(h, y, !b);
}

bool anchor_prefers_flip(int case_id) {
  if (case_id < 1 || case_id > 6) {
    throw std::out_of_range("anchor case " + std::to_string(case_id) + " outside 1..6");
  }
  return case_id == 1;
}

int ecc_closed_form(NetKind kind, int n, int k) {
  check_dimension(n);
  if (k < 0 || k > n) {
    throw std::out_of_range("Hamming class " + std::to_string(k) + " outside 0.." +
                            std::to_string(n));
  }
  if (kind == NetKind::Eotis && k <= 2 * n / 3) return n + (k + 3) / 2;
  return 2 * n + 1 - k;
}

Extremes extremes(NetKind kind, int n) {
  check_dimension(n);
  Extremes e{ecc_closed_form(kind, n, 0), ecc_closed_form(kind, n, 0)};
  for (int k = 1; k <= n; ++k) {
    const int v = ecc_closed_form(kind, n, k);
    e.radius = std::min(e.radius, v);
    e.diameter = std::max(e.diameter, v);
  }
  return e;
}

EccentricityProfile eccentricity_profile(NetKind kind, int n) {
  check_dimension(n);
  EccentricityProfile p;
  p.kind = kind;
  p.n = n;
  for (int k = 0; k <= n; ++k) p.ecc.push_back(ecc_closed_form(kind, n, k));
  p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
  p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  p.average = avg_ecc(kind, n);
  return p;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 62) throw std::out_of_range("binomial row " + std::to_string(n) + " unsupported");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  // r * (n - k + i) is divisible by i at each step.
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

Rational avg_ecc(NetKind kind, int n) {
  check_dimension(n);
  if (kind == NetKind::Otis) return Rational(3 * n + 2, 2);
  const int split = 2 * n / 3;
  std::int64_t sum = 0;
  for (int k = 0; k <= split; ++k) {
    sum += static_cast<std::int64_t>(binomial(n, k)) * (n + (k + 3) / 2);
  }
  for (int k = split + 1; k <= n; ++k) {
    sum += static_cast<std::int64_t>(binomial(n, k)) * (2 * n + 1 - k);
  }
  return Rational(sum, std::int64_t{1} << n);
}

Rational class_weighted_average(NetKind kind, int n) {
  check_dimension(n);
  std::int64_t sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += static_cast<std::int64_t>(binomial(n, k)) * ecc_closed_form(kind, n, k);
  }
  return Rational(sum, std::int64_t{1} << n);
}

std::vector<EccRow> ecc_table(int n) {
  check_dimension(n);
  std::vector<EccRow> rows;
  for (int k = 0; k <= n; ++k) {
    rows.push_back({k, ecc_closed_form(NetKind::Otis, n, k), ecc_closed_form(NetKind::Eotis, n, k)});
  }
  return rows;
}

}  // namespace otis
