#include "trigprod/coeffs.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "trigprod/errors.hpp"

namespace trigprod {

namespace {

void check_build_args(int n, const BuildLimits& limits) {
  if (n < 1) throw std::domain_error("coefficient table requires n >= 1");
  if (triangular(n) > limits.max_degree) {
    throw resource_limit_error("degree " + std::to_string(triangular(n)) +
                               " exceeds memory cap " + std::to_string(limits.max_degree));
  }
}

// Multiplies the current table (degree up to deg-k) by (1 -+ z^k) in place.
// Descending j keeps coeffs[j-k] at its pre-factor value.
void apply_factor(std::vector<BigInt>& c, std::int64_t deg, int k, bool subtract) {
  if (subtract) {
    for (std::int64_t j = deg; j >= k; --j) c[j] -= c[j - k];
  } else {
    for (std::int64_t j = deg; j >= k; --j) c[j] += c[j - k];
  }
}

CoefficientTable build(ProductKind kind, int n, const BuildLimits& limits) {
  check_build_args(n, limits);
  const bool subtract = kind == ProductKind::P;
  CoefficientTable table{kind, n, {}};
  table.coeffs.assign(static_cast<std::size_t>(triangular(n)) + 1, 0);
  table.coeffs[0] = 1;
  std::int64_t deg = 0;
  for (int k = 1; k <= n; ++k) {
    deg += k;
    apply_factor(table.coeffs, deg, k, subtract);
  }
  return table;
}

}  // namespace

CoefficientTable pn_coefficients(int n, const BuildLimits& limits) {
  return build(ProductKind::P, n, limits);
}

CoefficientTable qn_coefficients(int n, const BuildLimits& limits) {
  return build(ProductKind::Q, n, limits);
}

void for_each_product_prefix(ProductKind kind, int n_max,
                             const std::function<void(const CoefficientTable&)>& visit,
                             const BuildLimits& limits) {
  check_build_args(n_max, limits);
  const bool subtract = kind == ProductKind::P;
  CoefficientTable table{kind, 0, {}};
  table.coeffs.reserve(static_cast<std::size_t>(triangular(n_max)) + 1);
  table.coeffs.assign(1, 1);
  std::int64_t deg = 0;
  for (int k = 1; k <= n_max; ++k) {
    deg += k;
    table.coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
    apply_factor(table.coeffs, deg, k, subtract);
    table.n = k;
    visit(table);
  }
}

namespace {

void check_oracle_args(std::int64_t j, int n, int cap) {
  if (n < 1) throw std::domain_error("oracle requires n >= 1");
  if (n > cap) {
    throw oracle_limit_error("oracle scale exceeded: n = " + std::to_string(n) +
                             " > cap " + std::to_string(cap));
  }
  if (j < 0 || j > triangular(n)) {
    throw std::domain_error("oracle requires 0 <= j <= n(n+1)/2");
  }
}

// Enumerates partitions of j into distinct parts <= max_part, descending.
// parity_acc tracks (-1)^parts via counters.
void enumerate_distinct(std::int64_t j, int max_part, int parts, ParityCounts& out) {
  if (j == 0) {
    (parts % 2 == 0 ? out.even : out.odd) += 1;
    return;
  }
  // Largest reachable sum with parts <= max_part.
  if (triangular(max_part) < j) return;
  const int hi = static_cast<int>(std::min<std::int64_t>(max_part, j));
  for (int p = hi; p >= 1; --p) {
    enumerate_distinct(j - p, p - 1, parts + 1, out);
  }
}

}  // namespace

std::uint64_t distinct_partition_count_oracle(std::int64_t j, int n, int cap) {
  const ParityCounts c = even_odd_distinct_counts_oracle(j, n, cap);
  return c.even + c.odd;
}

ParityCounts even_odd_distinct_counts_oracle(std::int64_t j, int n, int cap) {
  check_oracle_args(j, n, cap);
  ParityCounts out;
  enumerate_distinct(j, n, 0, out);
  return out;
}

namespace {

// Full subset walk over {1..n}; depth is at most n.
void walk_subsets(int part, int n, std::int64_t sum, int parity,
                  std::vector<std::uint64_t>& even, std::vector<std::uint64_t>& odd) {
  if (part > n) {
    (parity == 0 ? even : odd)[static_cast<std::size_t>(sum)] += 1;
    return;
  }
  walk_subsets(part + 1, n, sum, parity, even, odd);
  walk_subsets(part + 1, n, sum + part, 1 - parity, even, odd);
}

}  // namespace

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
even_odd_distinct_count_tables(int n, int cap) {
  check_oracle_args(0, n, cap);
  const std::size_t size = static_cast<std::size_t>(triangular(n)) + 1;
  std::vector<std::uint64_t> even(size, 0), odd(size, 0);
  walk_subsets(1, n, 0, 0, even, odd);
  return {std::move(even), std::move(odd)};
}

std::vector<int> pentagonal_series_prefix(std::int64_t limit) {
  if (limit < 0) throw std::domain_error("pentagonal prefix requires limit >= 0");
  std::vector<int> out(static_cast<std::size_t>(limit) + 1, 0);
  out[0] = 1;  // k = 0
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t lo = k * (3 * k - 1) / 2;  // +k
    const std::int64_t hi = k * (3 * k + 1) / 2;  // -k
    if (lo > limit) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    out[static_cast<std::size_t>(lo)] = sign;
    if (hi <= limit) out[static_cast<std::size_t>(hi)] = sign;
  }
  return out;
}

std::int64_t nonzero_count(const CoefficientTable& table) {
  std::int64_t count = 0;
  for (const BigInt& c : table.coeffs) {
    if (c != 0) ++count;
  }
  return count;
}

}  // namespace trigprod
