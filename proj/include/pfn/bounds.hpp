#ifndef PFN_BOUNDS_HPP
#define PFN_BOUNDS_HPP

#include <cstdint>

#include "pfn/bigreal.hpp"
#include "pfn/series.hpp"

namespace pfn {

enum class BoundSource { R12, L7, L10, L11, LehmerRule, DeltaRule };

struct RemainderBound {
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  SeriesKind kind = SeriesKind::HardyRamanujan;
  BoundSource source = BoundSource::L10;
  BigReal value;
};

// Rademacher's explicit remainder after N terms of the divergent series:
//   44 pi^2/(225 sqrt 3) N^{-1/2}
// + (pi sqrt 2 / 75) (N/(n-1))^{1/2} sinh(C sqrt n / N)
// + (1/(2 sqrt 3)) ((N+1)^{3/2}/(n-1)) e^{-C sqrt(n-1)/N}
//     * (1/3 + (sqrt 3/(5 pi sqrt 2)) (N+1)/(n-1)^{1/2}).
// Requires n >= 2 (divides by n - 1).
RemainderBound bound_R12(std::uint64_t n, std::uint64_t N, long bits);

// Rademacher's bound for the convergent series:
//   44 pi^2/(225 sqrt 3) N^{-1/2}
// + (pi sqrt 2 / 75) (N^{1/2}/(n-1)^{1/2}) sinh(pi (2n/3)^{1/2} / N).
// The sinh argument is the same quantity as in bound_R12 since
// C = pi sqrt(2/3); both call one helper rather than duplicating constants.
RemainderBound bound_L7(std::uint64_t n, std::uint64_t N, long bits);

// Lehmer's sharpened bound for the convergent series:
//   (pi^2/sqrt 3) N^{-2/3} { (N/mu)^3 sinh(mu/N) + 1/6 - (N/mu)^2 }.
RemainderBound bound_L10(std::uint64_t n, std::uint64_t N, long bits);

// Lehmer's sharpened bound for the divergent series:
//   (pi^2 N^{7/3} / (sqrt 3 mu^3)) { sinh(mu/N) + (1/6)(mu/N)^3
//       + (1 + N/mu)(1/7 + (1/3) mu^{1/3} N^{-5/3}) }.
RemainderBound bound_L11(std::uint64_t n, std::uint64_t N, long bits);

// floor(2 sqrt(n) / 3), exact via integer square root. Lehmer's term count
// for rounding the divergent series; the theorem requires n > 600 and the
// precondition is enforced.
std::uint64_t lehmer_rule_terms(std::uint64_t n);

// Threshold above which floor(sqrt(n)/delta) terms suffice, delta > 1:
//   27^{1/2} c^6 delta^{-2} { sinh(c delta)/(c^3 delta^3) + 1/6 }^3,
// c = pi (2/3)^{1/2}.
BigReal delta_rule_threshold(const BigReal& delta);

struct TruncationCertificate {
  std::uint64_t n = 0;
  std::uint64_t N = 0;
  SeriesKind kind = SeriesKind::Rademacher;
  RemainderBound bound;
  BigReal rounding_slack;
  bool certified = false;
};

// Scans N upward from 1 and returns the least N whose remainder bound plus
// rounding slack clears 1/2 - 2^{-20}; L10 drives the convergent series,
// L11 the divergent one. Gives up (certified = false) at N = 8*ceil(sqrt n):
// past that scale the divergent series only gets worse and the convergent
// bounds have long since decided. bits_override = 0 means plan precision.
TruncationCertificate certify(std::uint64_t n, SeriesKind kind,
                              long bits_override = 0);

}  // namespace pfn

#endif  // PFN_BOUNDS_HPP
