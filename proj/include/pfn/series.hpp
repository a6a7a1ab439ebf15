#ifndef PFN_SERIES_HPP
#define PFN_SERIES_HPP

#include <cstdint>
#include <vector>

#include "pfn/aksum.hpp"
#include "pfn/bigreal.hpp"

namespace pfn {

enum class SeriesKind { HardyRamanujan, Rademacher };

// C = pi * sqrt(2/3), the growth constant of log p(n).
BigReal growth_constant(long bits);

// mu(n) = (pi/6) * sqrt(24n - 1). Canonical scale parameter; equals
// growth_constant * lambda_n exactly.
BigReal mu(std::uint64_t n, long bits);

// lambda_n = sqrt(n - 1/24).
BigReal lambda_n(std::uint64_t n, long bits);

struct SeriesTerm {
  std::uint64_t k = 0;
  AkValue ak;
  BigReal kernel;
  BigReal term;  // ak.value * kernel
};

// k-th kernel of the divergent series in closed algebraic form:
//   sqrt(12)/(24n-1) * k^{-1/2} * (1 - k/mu) * e^{mu/k}.
BigReal hr_kernel(std::uint64_t k, std::uint64_t n, long bits);

// Same expression with a real-valued k (the factor (1 - k/mu) vanishes
// when k equals mu; only tests ever pass a non-integer).
BigReal hr_kernel_real(const BigReal& k, std::uint64_t n, long bits);

// k-th kernel of the convergent series:
//   sqrt(12)/(24n-1) * k^{-1/2} * [(1 - k/mu) e^{mu/k} + (1 + k/mu) e^{-mu/k}].
// The second exponent is negative: the bracket is the expansion of
// 2[ (mu/k) cosh(mu/k) - sinh(mu/k) ] * (k/mu), which the sinh-derivative
// route below reproduces identically, and the series does not converge
// under any other reading.
BigReal rademacher_kernel(std::uint64_t k, std::uint64_t n, long bits);

SeriesTerm hr_term(std::uint64_t k, std::uint64_t n, long bits);
SeriesTerm rademacher_term(std::uint64_t k, std::uint64_t n, long bits);

// Reference route used only by tests and the estimator cross-checks:
// the q-th term kernel written as a derivative in n,
//   phi_q(n) = (sqrt(q)/(2 pi sqrt(2))) * d/dn( e^{C lambda_n / q} / lambda_n ),
// with the derivative carried out symbolically:
//   d/dn( e^{C lambda / q} / lambda ) = e^{mu/q} (mu/q - 1) / (2 lambda^3).
BigReal phi_derivative_form(std::uint64_t q, std::uint64_t n, long bits);

// Derivative form of the convergent kernel:
//   (1/(pi sqrt(2))) * sqrt(k) * d/dn( sinh(C lambda_n / k) / lambda_n )
// = (1/(pi sqrt(2))) * sqrt(k) * [ (mu/k) cosh(mu/k) - sinh(mu/k) ] / (2 lambda^3).
BigReal rademacher_derivative_form(std::uint64_t k, std::uint64_t n, long bits);

struct PartialSum {
  std::uint64_t n = 0;
  SeriesKind kind = SeriesKind::HardyRamanujan;
  std::uint64_t terms = 0;
  BigReal sum;
  std::vector<SeriesTerm> term_list;
};

// Accumulates terms k = 1..N in ascending k (descending magnitude), keeping
// the per-term values for diagnostics. Term evaluations are independent;
// the fold is a deterministic sequential pass over the ordered list.
PartialSum partial_sum(std::uint64_t n, SeriesKind kind, std::uint64_t N,
                       long bits);

// Sum only, no retained terms.
BigReal partial_sum_value(std::uint64_t n, SeriesKind kind, std::uint64_t N,
                          long bits);

struct TermMagnitude {
  std::uint64_t k = 0;
  BigReal magnitude;
  BigReal inv_k_squared;
};

// |term_k| next to the 1/k^2 comparison scale, k ascending. A raw
// convergence/divergence diagnostic; it measures, it does not claim.
std::vector<TermMagnitude> term_magnitude_report(std::uint64_t n,
                                                 SeriesKind kind,
                                                 std::uint64_t N_max,
                                                 long bits);

}  // namespace pfn

#endif  // PFN_SERIES_HPP
