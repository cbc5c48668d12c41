#ifndef TRIGPROD_COEFFS_HPP
#define TRIGPROD_COEFFS_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "trigprod/bigint.hpp"

namespace trigprod {

enum class ProductKind { P, Q };

inline char kind_letter(ProductKind k) { return k == ProductKind::P ? 'P' : 'Q'; }

/// Exact signed coefficient vector of prod_{k<=n}(1 -+ z^k), indexed 0..N
/// with N = n(n+1)/2.
struct CoefficientTable {
  ProductKind kind;
  int n;
  std::vector<BigInt> coeffs;

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
};

inline std::int64_t triangular(std::int64_t n) { return n * (n + 1) / 2; }

struct BuildLimits {
  // Degree cap: N <= 2e5 means n <= 632.
  std::int64_t max_degree = 200000;
};

/// Coefficients of prod_{k=1}^{n}(1 - z^k); coeffs[k] = e_{n,k} - o_{n,k}.
CoefficientTable pn_coefficients(int n, const BuildLimits& limits = {});

/// Coefficients of prod_{k=1}^{n}(1 + z^k); coeffs[j] counts partitions of j
/// into distinct parts <= n.
CoefficientTable qn_coefficients(int n, const BuildLimits& limits = {});

/// Builds the product incrementally and calls visit(table) after each factor,
/// so a sweep over n = 1..n_max costs the same as one build of n_max.
void for_each_product_prefix(ProductKind kind, int n_max,
                             const std::function<void(const CoefficientTable&)>& visit,
                             const BuildLimits& limits = {});

inline constexpr int kOracleCap = 25;  // 2^25 subsets

/// Exact count of partitions of j into distinct parts each <= n, by direct
/// recursive enumeration. Exponential time, intended for n <= 25.
std::uint64_t distinct_partition_count_oracle(std::int64_t j, int n, int cap = kOracleCap);

struct ParityCounts {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
};

/// Same enumeration split by parity of the number of parts;
/// even - odd equals pn_coefficients(n).coeffs[j].
ParityCounts even_odd_distinct_counts_oracle(std::int64_t j, int n, int cap = kOracleCap);

/// One 2^n walk producing the (even, odd) counts for every j at once.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>
even_odd_distinct_count_tables(int n, int cap = kOracleCap);

/// Entry m is (-1)^k when m = k(3k-1)/2 for some integer k, else 0.
std::vector<int> pentagonal_series_prefix(std::int64_t limit);

std::int64_t nonzero_count(const CoefficientTable& table);

}  // namespace trigprod

#endif
