#ifndef PFN_AKSUM_HPP
#define PFN_AKSUM_HPP

#include <cstdint>
#include <span>
#include <string_view>

#include "pfn/bigreal.hpp"
#include "pfn/numtheory.hpp"

namespace pfn {

// omega(p, q): the 24q-th root of unity sign * e^{i * angle} entering the
// circle-method coefficient A_q(n). The phase is assembled in exact rational
// arithmetic; sign is the Jacobi-symbol factor.
struct OmegaRoot {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  ExactAngle angle;
  int sign = 1;
};

// Which of the two classical defining formulas to use. PNumerator is valid
// when p is odd, QNumerator when q is odd; when both are odd they agree and
// QNumerator is the canonical choice.
enum class OmegaFormula { PNumerator, QNumerator };

OmegaRoot omega(std::uint64_t p, std::uint64_t q);

// Evaluation with an explicit formula and an explicit p' (any positive
// integer with q | 1 + p*p'). The result is provably independent of both
// choices; exposed so that independence is testable.
OmegaRoot omega_with(std::uint64_t p, std::uint64_t q, std::uint64_t p_prime,
                     OmegaFormula formula);

// One coefficient A_k(n), real-valued. imag_residue records the magnitude of
// the discarded imaginary part on the root-of-unity route (zero by
// construction on the cosine routes).
struct AkValue {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  BigReal value;
  BigReal imag_residue;
};

// Root-of-unity definition: sum over 1 <= p < k coprime to k of
// omega(p,k) * e^{-2 n p pi i / k}; A_1 = 1 (empty sum fixed by convention).
AkValue ak_hr(std::uint64_t k, std::uint64_t n, long bits);

// Selberg's cosine form: (k/3)^{1/2} * sum of (-1)^l cos((6l+1)pi/(6k)) over
// 0 <= l < 2k with (3l^2+l)/2 = -n (mod k); the congruence is tested in
// exact integer arithmetic. This is the production route.
AkValue ak_selberg(std::uint64_t k, std::uint64_t n, long bits);

// Closed cosine forms for k = 1..18 from the classical table, with three
// printing defects repaired (see table2_repairs). k outside 1..18 is an
// input error.
AkValue ak_table2(std::uint64_t k, std::uint64_t n, long bits);

// The same table exactly as printed, defects included. Diagnostic only.
AkValue ak_table2_printed(std::uint64_t k, std::uint64_t n, long bits);

// The printed table disagrees with both independent routes at three
// summands; the repaired phases below are the unique readings consistent
// with the root-of-unity derivation. Kept as data so reports can surface
// them instead of silently absorbing the fix.
struct Table2Repair {
  unsigned k;
  unsigned summand;         // 1-based position in the printed sum
  std::string_view printed;
  std::string_view repaired;
};

std::span<const Table2Repair> table2_repairs();

}  // namespace pfn

#endif  // PFN_AKSUM_HPP
