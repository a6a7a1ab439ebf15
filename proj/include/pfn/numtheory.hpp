#ifndef PFN_NUMTHEORY_HPP
#define PFN_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

#include "pfn/bigreal.hpp"

namespace pfn {

// Jacobi symbol (a/b) for odd positive b. a is reduced mod b first, so
// negative and large numerators are fine. Returns -1, 0 or +1; 0 exactly
// when gcd(a, b) > 1.
int jacobi(long long a, unsigned long long b);

// Least positive p' with 1 + p*p' divisible by q. Requires gcd(p, q) = 1
// and q >= 2.
std::uint64_t mod_inverse_complement(std::uint64_t p, std::uint64_t q);

// sigma(v) = sum of positive divisors of v, for v = 1..limit, by sieve.
// Index 0 is unused (zero).
std::vector<std::uint64_t> divisor_sigma_table(std::uint64_t limit);

// An angle that is an exact rational multiple of pi, reduced mod 2*pi:
// value = (num/den) * pi with 0 <= num/den < 2, gcd(num, den) = 1, den >= 1.
// Two angles differing by a multiple of 2*pi compare equal by construction.
class ExactAngle {
 public:
  ExactAngle() : num_(0), den_(1) {}
  ExactAngle(long long num, long long den);

  static ExactAngle from_wide(__int128 num, __int128 den);

  ExactAngle operator+(const ExactAngle& rhs) const;
  bool operator==(const ExactAngle& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

 private:
  long long num_;  // 0 <= num_ < 2*den_
  long long den_;
};

// cos / sin of an exact angle at the requested precision. Exact at the
// quarter-turn angles 0, pi/2, pi, 3pi/2.
BigReal angle_cos(const ExactAngle& theta, long bits);
BigReal angle_sin(const ExactAngle& theta, long bits);

}  // namespace pfn

#endif  // PFN_NUMTHEORY_HPP
