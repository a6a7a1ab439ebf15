#ifndef PFN_ENGINE_HPP
#define PFN_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pfn/bounds.hpp"
#include "pfn/oracle.hpp"
#include "pfn/series.hpp"

namespace pfn {

// Serial is the reference implementation; OpenMP runs the same per-item
// work across threads. Results are identical by construction (each item is
// a pure function of its inputs and reductions are order-independent), and
// tests hold the two lanes to bitwise equality.
enum class Execution { Serial, OpenMP };

// One certified evaluation: plan, certificate, evaluated sum, rounded value.
struct CertifiedValue {
  std::uint64_t n = 0;
  SeriesKind kind = SeriesKind::Rademacher;
  TruncationCertificate certificate;
  PrecisionPlan plan;
  BigReal sum;
  mpz_class value;  // nearest integer to sum, meaningful when certified
};

CertifiedValue compute_certified(std::uint64_t n, SeriesKind kind,
                                 long bits_override = 0);

struct SweepRow {
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  long bits = 0;
  bool certified = false;
  mpz_class value;
  std::optional<bool> oracle_match;
};

// Certified evaluation of every n in [from, to]; oracle comparison where the
// table covers n. Rows come back ordered by n regardless of schedule.
std::vector<SweepRow> certified_range(std::uint64_t from, std::uint64_t to,
                                      SeriesKind kind,
                                      const PartitionTable* oracle,
                                      Execution exec);

// Divergent-series sweep at the fixed rule N = floor(2 sqrt n / 3)
// (n > 600), rounding against the oracle.
std::vector<SweepRow> lehmer_rule_range(std::uint64_t from, std::uint64_t to,
                                        const PartitionTable& oracle,
                                        Execution exec);

// Cross-route disagreement maxima over coefficient grids.
struct AkAgreement {
  double max_hr_selberg = 0.0;        // k <= k_pair
  double max_hr_table2 = 0.0;         // k <= 18, repaired table
  double max_selberg_table2 = 0.0;    // k <= 18, repaired table
  double max_printed_defect = 0.0;    // k in {15,16,17}, printed table vs hr
  double max_imag_residue = 0.0;
};

AkAgreement ak_agreement_grid(std::uint64_t k_pair, std::uint64_t n_max,
                              long bits, Execution exec);

// max |A_k(n)| / k^{5/6} over 1 <= k <= k_max, 0 <= n <= n_max, and the
// count of entries violating |A_k(n)| < 2 k^{5/6}.
struct AkBoundSweep {
  double max_ratio = 0.0;
  std::uint64_t violations = 0;
};

AkBoundSweep ak_bound_sweep(std::uint64_t k_max, std::uint64_t n_max,
                            long bits, Execution exec);

}  // namespace pfn

#endif  // PFN_ENGINE_HPP
