#ifndef PFN_ESTIMATORS_HPP
#define PFN_ESTIMATORS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pfn/bigreal.hpp"
#include "pfn/oracle.hpp"

namespace pfn {

enum class EstimateFormula { HR141, HR155, Uspensky, TwoTerm161, FourTerm161x };

// The one-line asymptotic e^{C sqrt n} / (4 sqrt 3 n).
BigReal estimate_hr141(std::uint64_t n, long bits);

// The sharp first-term form:
//   e^{C lambda_n} / (4 sqrt 3 lambda_n^2) * (1 - 1/(C lambda_n)).
BigReal estimate_hr155(std::uint64_t n, long bits);

// Uspensky's independently found equivalent; the correction factor
// sqrt(3)/(pi sqrt(2n - 1/12)) equals 1/(C lambda_n) identically, so this
// agrees with estimate_hr155 to rounding.
BigReal estimate_uspensky(std::uint64_t n, long bits);

// Partial sum of the divergent series with 1..4 terms. The two-, three-
// and four-term coefficients match the classical displayed forms; the
// display identities are verified in tests, not re-derived here.
BigReal estimate_multiterm161(std::uint64_t n, unsigned terms, long bits);

struct EstimateReport {
  std::uint64_t n = 0;
  EstimateFormula formula = EstimateFormula::HR141;
  BigReal estimate;
  mpz_class exact;
  BigReal ratio;         // estimate / exact
  BigReal scaled_error;  // formula-specific normalization, see make_report
};

// scaled_error normalizations:
//   HR141       ratio - 1                       (relative excess)
//   HR155       |p - est| * n * e^{-C sqrt n/2}
//   Uspensky    |p - est| * e^{-C sqrt n/2}
//   TwoTerm161  |p - est| * e^{-0.9 (C/2) sqrt n}
//   FourTerm161x|p - est| * e^{-0.9 (C/4) sqrt n}
// Each is the error divided by its formula's guaranteed envelope shape
// (no explicit constants exist, so these are bounded-ratio diagnostics).
EstimateReport make_report(std::uint64_t n, EstimateFormula formula,
                           const PartitionTable& table, long bits);

struct LogAsymptoticsRow {
  std::uint64_t n = 0;
  BigReal log_p_over_sqrt_n;   // tends to C
  BigReal normalized_residual; // log p - C sqrt n + log n + log(4 sqrt 3), tends to 0
};

std::vector<LogAsymptoticsRow> log_asymptotics_report(
    std::span<const std::uint64_t> n_grid, const PartitionTable& table,
    long bits);

}  // namespace pfn

#endif  // PFN_ESTIMATORS_HPP
