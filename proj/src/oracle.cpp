#include "pfn/oracle.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "pfn/bigreal.hpp"
#include "pfn/numtheory.hpp"
#include "pfn/series.hpp"

namespace pfn {

PartitionTable::PartitionTable(std::vector<mpz_class> values)
    : values_(std::move(values)) {}

const mpz_class& PartitionTable::at(std::uint64_t n) const {
  if (!covers(n)) throw std::out_of_range("PartitionTable::at: index beyond limit");
  return values_[n];
}

void PartitionTable::save(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open table cache for writing");
  os << "pn-table v1 limit=" << limit() << "\n";
  for (const mpz_class& v : values_) os << v.get_str() << "\n";
  if (!os) throw std::runtime_error("table cache write failed");
}

PartitionTable PartitionTable::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open table cache");
  std::string header;
  std::getline(is, header);
  const std::string prefix = "pn-table v1 limit=";
  if (header.rfind(prefix, 0) != 0)
    throw std::runtime_error("table cache: bad header");
  std::uint64_t limit = std::stoull(header.substr(prefix.size()));
  std::vector<mpz_class> values;
  values.reserve(limit + 1);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    values.emplace_back(line);
  }
  if (values.size() != limit + 1)
    throw std::runtime_error("table cache: value count does not match header");
  return PartitionTable(std::move(values));
}

PartitionTable p_exact_sigma(std::uint64_t limit) {
  std::vector<mpz_class> p(limit + 1);
  p[0] = 1;
  if (limit == 0) return PartitionTable(std::move(p));
  std::vector<std::uint64_t> sigma = divisor_sigma_table(limit);
  mpz_class acc;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    acc = 0;
    for (std::uint64_t v = 1; v <= n; ++v)
      mpz_addmul_ui(acc.get_mpz_t(), p[n - v].get_mpz_t(),
                    static_cast<unsigned long>(sigma[v]));
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)))
      throw std::logic_error("p_exact_sigma: inexact division, recurrence broken");
    mpz_divexact_ui(p[n].get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(n));
  }
  return PartitionTable(std::move(p));
}

PartitionTable p_exact_erdos(std::uint64_t limit) {
  std::vector<mpz_class> p(limit + 1);
  p[0] = 1;
  mpz_class acc;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    acc = 0;
    for (std::uint64_t v = 1; v <= n; ++v)
      for (std::uint64_t kv = v; kv <= n; kv += v)
        mpz_addmul_ui(acc.get_mpz_t(), p[n - kv].get_mpz_t(),
                      static_cast<unsigned long>(v));
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)))
      throw std::logic_error("p_exact_erdos: inexact division, recurrence broken");
    mpz_divexact_ui(p[n].get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(n));
  }
  return PartitionTable(std::move(p));
}

mpz_class p_enumerate(unsigned n) {
  if (n > 60) throw std::invalid_argument("p_enumerate: capped at n = 60");
  if (n == 0) return 1;
  // Generate partitions as non-increasing part lists, counting each one.
  std::vector<unsigned> parts(n, 0);
  std::uint64_t count = 0;
  unsigned k = 0;
  parts[0] = n;
  while (true) {
    ++count;
    // Find the rightmost part > 1 to decrement, gathering the tail of 1s.
    unsigned rem = 0;
    while (parts[k] == 1) {
      ++rem;
      if (k == 0) return mpz_class(static_cast<unsigned long>(count));
      --k;
    }
    parts[k] -= 1;
    ++rem;
    // Redistribute rem over parts of size parts[k].
    while (rem > parts[k]) {
      parts[k + 1] = parts[k];
      rem -= parts[k];
      ++k;
    }
    parts[k + 1] = rem;
    ++k;
  }
}

std::vector<std::uint64_t> erdos_upper_bound_check(const PartitionTable& table,
                                                   std::uint64_t limit) {
  if (limit > table.limit()) limit = table.limit();
  std::vector<std::uint64_t> violations;
  const long bits = 192;
  BigReal c = growth_constant(bits);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    BigReal rhs = exp(c * sqrt(BigReal::from_ui(n, bits)));
    BigReal lhs = BigReal::from_integer(table.at(n), bits);
    if (!(lhs < rhs)) violations.push_back(n);
  }
  return violations;
}

}  // namespace pfn
