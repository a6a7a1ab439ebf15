#include "doctest.h"
#include "pfn/numtheory.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

using namespace pfn;

namespace {

// Brute-force Legendre value for odd prime b: +1 iff a is a nonzero square.
int legendre_by_enumeration(long long a, unsigned long long b) {
  long long r = ((a % (long long)b) + (long long)b) % (long long)b;
  if (r == 0) return 0;
  for (unsigned long long x = 1; x < b; ++x)
    if ((x * x) % b == (unsigned long long)r) return 1;
  return -1;
}

std::uint64_t sigma_by_enumeration(std::uint64_t v) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= v; ++d)
    if (v % d == 0) s += d;
  return s;
}

}  // namespace

TEST_CASE("jacobi basics") {
  CHECK(jacobi(1, 1) == 1);  // empty product
  CHECK(jacobi(-1, 3) == -1);
  CHECK(jacobi(2, 15) == 1);
  CHECK(jacobi(3, 15) == 0);
  CHECK_THROWS_AS(jacobi(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
}

TEST_CASE("jacobi equals quadratic-residue enumeration for odd primes") {
  const unsigned long long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                       37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                       79, 83, 89, 97};
  for (unsigned long long b : primes)
    for (long long a = -(long long)b; a <= (long long)(2 * b); ++a)
      CHECK(jacobi(a, b) == legendre_by_enumeration(a, b));
}

TEST_CASE("jacobi is completely multiplicative in the numerator") {
  for (unsigned long long b = 1; b <= 99; b += 2)
    for (long long a1 = -50; a1 <= 50; ++a1)
      for (long long a2 = -50; a2 <= 50; a2 += 7)
        CHECK(jacobi(a1 * a2, b) == jacobi(a1, b) * jacobi(a2, b));
}

TEST_CASE("mod_inverse_complement") {
  CHECK(mod_inverse_complement(3, 7) == 2);  // 1 + 3*2 = 7
  CHECK(mod_inverse_complement(1, 2) == 1);  // 1 + 1 = 2
  for (std::uint64_t q = 2; q <= 50; ++q)
    CHECK(mod_inverse_complement(1, q) == q - 1);
  // Least-positive property against a direct scan.
  for (std::uint64_t q = 2; q <= 60; ++q)
    for (std::uint64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      std::uint64_t expect = 0;
      for (std::uint64_t c = 1; c <= q; ++c)
        if ((1 + p * c) % q == 0) { expect = c; break; }
      CHECK(mod_inverse_complement(p, q) == expect);
    }
  CHECK_THROWS_AS(mod_inverse_complement(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(mod_inverse_complement(1, 1), std::invalid_argument);
}

TEST_CASE("divisor sigma sieve") {
  auto sigma = divisor_sigma_table(1000);
  CHECK(sigma[1] == 1);
  CHECK(sigma[6] == 12);
  CHECK(sigma[28] == 56);  // perfect number
  for (std::uint64_t v = 1; v <= 120; ++v)
    CHECK(sigma[v] == sigma_by_enumeration(v));
  // Double counting: sum_{v<=L} sigma(v) = sum_{d<=L} d*floor(L/d).
  for (std::uint64_t L : {std::uint64_t{10}, std::uint64_t{100}, std::uint64_t{1000}}) {
    std::uint64_t lhs = 0, rhs = 0;
    for (std::uint64_t v = 1; v <= L; ++v) lhs += sigma[v];
    for (std::uint64_t d = 1; d <= L; ++d) rhs += d * (L / d);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact angle reduction") {
  CHECK(ExactAngle(5, 2) == ExactAngle(1, 2));    // 5/2 - 2 = 1/2
  CHECK(ExactAngle(-1, 2) == ExactAngle(3, 2));   // wraps to [0, 2)
  CHECK(ExactAngle(7, 3) == ExactAngle(1, 3));
  CHECK(ExactAngle(2, 4) == ExactAngle(1, 2));    // gcd reduction
  CHECK(ExactAngle(0, 7) == ExactAngle(0, 1));
  CHECK(ExactAngle(4, 1) == ExactAngle(0, 1));    // full turns vanish
  CHECK((ExactAngle(1, 3) + ExactAngle(1, 6)) == ExactAngle(1, 2));
  CHECK((ExactAngle(3, 2) + ExactAngle(3, 2)) == ExactAngle(1, 1));
  CHECK_THROWS_AS(ExactAngle(1, 0), std::invalid_argument);
}

TEST_CASE("angle_cos exact and close values") {
  CHECK(angle_cos(ExactAngle(0, 1), 128).cmp_ui(1) == 0);
  CHECK(angle_cos(ExactAngle(1, 1), 128).cmp_si(-1) == 0);
  CHECK(angle_cos(ExactAngle(1, 2), 128).is_zero());
  CHECK(angle_cos(ExactAngle(3, 2), 128).is_zero());
  CHECK(angle_sin(ExactAngle(1, 2), 128).cmp_ui(1) == 0);
  CHECK(angle_sin(ExactAngle(3, 2), 128).cmp_si(-1) == 0);

  BigReal half = BigReal::from_string("0.5", 128);
  CHECK(ulp_distance(angle_cos(ExactAngle(1, 3), 128), half, 128) <= 4.0);

  // Equality across a 2 pi shift is representational, hence bitwise.
  BigReal a = angle_cos(ExactAngle(5, 7), 160);
  BigReal b = angle_cos(ExactAngle(5 + 14, 7), 160);
  CHECK(a == b);
}
