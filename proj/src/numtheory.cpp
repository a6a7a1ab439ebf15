#include "pfn/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace pfn {

int jacobi(long long a, unsigned long long b) {
  if (b == 0 || b % 2 == 0)
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  unsigned long long n = b;
  // Reduce a into [0, n); the symbol is periodic in its numerator.
  unsigned long long u =
      static_cast<unsigned long long>(((a % static_cast<long long>(n)) +
                                       static_cast<long long>(n))) % n;
  int result = 1;
  while (u != 0) {
    while (u % 2 == 0) {
      u /= 2;
      if (n % 8 == 3 || n % 8 == 5) result = -result;
    }
    std::swap(u, n);
    if (u % 4 == 3 && n % 4 == 3) result = -result;
    u %= n;
  }
  return n == 1 ? result : 0;
}

std::uint64_t mod_inverse_complement(std::uint64_t p, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("mod_inverse_complement: q must be >= 2");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("mod_inverse_complement: p and q must be coprime");
  // Extended Euclid for p^{-1} mod q, then p' = -p^{-1} mod q in [1, q].
  std::int64_t r0 = static_cast<std::int64_t>(q), r1 = static_cast<std::int64_t>(p % q);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t div = r0 / r1;
    std::int64_t r2 = r0 - div * r1;
    std::int64_t s2 = s0 - div * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(q);
  if (inv < 0) inv += static_cast<std::int64_t>(q);
  std::uint64_t pp = q - static_cast<std::uint64_t>(inv);  // -inv mod q, in [1, q]
  return pp;
}

std::vector<std::uint64_t> divisor_sigma_table(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("divisor_sigma_table: limit must be >= 1");
  std::vector<std::uint64_t> sigma(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d)
    for (std::uint64_t m = d; m <= limit; m += d) sigma[m] += d;
  return sigma;
}

ExactAngle::ExactAngle(long long num, long long den)
    : ExactAngle(from_wide(num, den)) {}

ExactAngle ExactAngle::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("ExactAngle: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  __int128 two = 2 * den;
  num %= two;
  if (num < 0) num += two;
  __int128 a = num, b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;  // num == 0
  ExactAngle r;
  r.num_ = static_cast<long long>(num / a);
  r.den_ = static_cast<long long>(den / a);
  return r;
}

ExactAngle ExactAngle::operator+(const ExactAngle& rhs) const {
  return from_wide(static_cast<__int128>(num_) * rhs.den_ +
                       static_cast<__int128>(rhs.num_) * den_,
                   static_cast<__int128>(den_) * rhs.den_);
}

namespace {

// Quarter turns are exact: r in {0, 1/2, 1, 3/2}.
bool quarter_turn(const ExactAngle& t, int& quadrant) {
  if (t.denominator() == 1) {
    quadrant = t.numerator() == 0 ? 0 : 2;
    return true;
  }
  if (t.denominator() == 2) {
    quadrant = t.numerator() == 1 ? 1 : 3;
    return true;
  }
  return false;
}

BigReal angle_eval(const ExactAngle& theta, long bits, bool want_sin) {
  int quad;
  if (quarter_turn(theta, quad)) {
    static const int cos_q[4] = {1, 0, -1, 0};
    static const int sin_q[4] = {0, 1, 0, -1};
    return BigReal::from_si(want_sin ? sin_q[quad] : cos_q[quad], bits);
  }
  long work = bits + 64;
  BigReal t = BigReal::pi(work)
                  .mul_ui(static_cast<unsigned long>(theta.numerator()))
                  .div_ui(static_cast<unsigned long>(theta.denominator()));
  BigReal r(bits);
  if (want_sin)
    mpfr_sin(r.raw_mut(), t.raw(), MPFR_RNDN);
  else
    mpfr_cos(r.raw_mut(), t.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal angle_cos(const ExactAngle& theta, long bits) {
  return angle_eval(theta, bits, false);
}

BigReal angle_sin(const ExactAngle& theta, long bits) {
  return angle_eval(theta, bits, true);
}

}  // namespace pfn
