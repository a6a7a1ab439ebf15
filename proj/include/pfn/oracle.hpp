#ifndef PFN_ORACLE_HPP
#define PFN_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <vector>

namespace pfn {

// Exact values p(0)..p(limit). Strictly increasing from n = 1 on; immutable
// once built and safe for concurrent reads.
class PartitionTable {
 public:
  PartitionTable() = default;
  explicit PartitionTable(std::vector<mpz_class> values);

  std::uint64_t limit() const { return values_.empty() ? 0 : values_.size() - 1; }
  bool covers(std::uint64_t n) const { return n < values_.size(); }
  const mpz_class& at(std::uint64_t n) const;

  // Cache file: header "pn-table v1 limit=<L>" then one decimal value per
  // line, index implied. Reload is bit-exact.
  void save(const std::filesystem::path& path) const;
  static PartitionTable load(const std::filesystem::path& path);

 private:
  std::vector<mpz_class> values_;
};

// Builds p(0..limit) from the divisor-sum recurrence
//   n p(n) = sum_{v=1..n} sigma(v) p(n-v),
// entirely in exact integer arithmetic; the division by n is checked to be
// exact at every step.
PartitionTable p_exact_sigma(std::uint64_t limit);

// Independent rebuild from the double-sum identity
//   n p(n) = sum_v sum_k v * p(n - k v)   (k v <= n).
PartitionTable p_exact_erdos(std::uint64_t limit);

// Counts partitions of n by direct lexicographic generation. Ground truth
// of last resort; n > 60 is rejected.
mpz_class p_enumerate(unsigned n);

// Checks p(n) < e^{c sqrt n}, c = pi (2/3)^{1/2}, for 1 <= n <= limit.
// Returns the violating indices (expected: none).
std::vector<std::uint64_t> erdos_upper_bound_check(const PartitionTable& table,
                                                   std::uint64_t limit);

}  // namespace pfn

#endif  // PFN_ORACLE_HPP
