#include "doctest.h"
#include "pfn/bigreal.hpp"

#include <stdexcept>

using namespace pfn;

TEST_CASE("precision floor and propagation") {
  CHECK(BigReal(10).precision_bits() == 64);
  CHECK(BigReal(200).precision_bits() == 200);
  BigReal a = BigReal::from_ui(3, 128);
  BigReal b = BigReal::from_ui(5, 256);
  CHECK((a + b).precision_bits() == 256);
  CHECK((b * a).precision_bits() == 256);
  CHECK((a - b).precision_bits() == 256);
  CHECK((a / b).precision_bits() == 256);
}

TEST_CASE("transcendental kernel identities") {
  BigReal zero = BigReal::from_ui(0, 128);
  CHECK(eval_transcendental(zero, Transcendental::Exp).cmp_ui(1) == 0);
  CHECK(eval_transcendental(zero, Transcendental::Sinh).is_zero());
  CHECK(eval_transcendental(zero, Transcendental::Cos).cmp_ui(1) == 0);

  // exp(round(ln 2)) must land on 2 to within a few ulp.
  BigReal ln2(128);
  mpfr_const_log2(ln2.raw_mut(), MPFR_RNDN);
  BigReal e2 = eval_transcendental(ln2, Transcendental::Exp);
  CHECK(ulp_distance(e2, BigReal::from_ui(2, 128), 128) <= 4.0);

  CHECK_THROWS_AS(eval_transcendental(BigReal::from_si(-1, 64), Transcendental::Sqrt),
                  std::domain_error);
  CHECK_THROWS_AS(eval_transcendental(zero, Transcendental::Log), std::domain_error);
  CHECK(sqrt(BigReal::from_ui(9, 64)).cmp_ui(3) == 0);
}

TEST_CASE("plan_precision honours the bit formula") {
  // mu(1)/ln2 = 3.6227..., mu(100)/ln2 = 36.99885..., mu(10^4)/ln2 = 370.06...
  CHECK(mu_ceil_bits(1) == 4);
  CHECK(mu_ceil_bits(100) == 37);
  CHECK(mu_ceil_bits(10000) == 371);

  PrecisionPlan p11 = plan_precision(1, 1);
  CHECK(p11.bits == 4 + 64 + 10);  // ceil(10*log2(2)) = 10
  CHECK(p11.bits >= 64);
  CHECK(p11.rounding_slack * BigReal::from_ui(8, 64) <
        BigReal::from_ui(1, 64));  // slack < 1/8

  PrecisionPlan p = plan_precision(100, 10);
  CHECK(p.bits == 37 + 64 + 35);  // ceil(10*log2(11)) = 35

  PrecisionPlan big = plan_precision(10000, 70);
  CHECK(big.bits == 371 + 64 + 62);  // ceil(10*log2(71)) = 62
  CHECK(big.rounding_slack * BigReal::from_ui(8, 64) < BigReal::from_ui(1, 64));

  // Slack is exactly (N+5) * 2^(-bits + ceil(mu/ln2) + 8).
  BigReal expect = BigReal::pow2(-p.bits + 37 + 8, 96).mul_ui(15);
  CHECK(p.rounding_slack == expect);

  CHECK_THROWS_AS(plan_precision(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(plan_precision(1, 0), std::invalid_argument);
}

TEST_CASE("plan_precision is monotone in n and N") {
  const std::uint64_t ns[] = {1, 2, 3, 10, 50, 100, 500, 1000, 5000, 10000};
  const std::uint64_t Ns[] = {1, 2, 5, 10, 31, 64, 100};
  for (std::size_t i = 0; i + 1 < std::size(ns); ++i)
    for (std::uint64_t N : Ns)
      CHECK(plan_precision(ns[i + 1], N).bits >= plan_precision(ns[i], N).bits);
  for (std::uint64_t n : ns)
    for (std::size_t j = 0; j + 1 < std::size(Ns); ++j)
      CHECK(plan_precision(n, Ns[j + 1]).bits >= plan_precision(n, Ns[j]).bits);
  // Dense single-step check around small n.
  for (std::uint64_t n = 1; n < 300; ++n)
    CHECK(plan_precision(n + 1, 10).bits >= plan_precision(n, 10).bits);
}

TEST_CASE("rounding and formatting") {
  CHECK(BigReal::from_double(2.4, 64).round_to_nearest() == 2);
  CHECK(BigReal::from_double(2.6, 64).round_to_nearest() == 3);
  CHECK(BigReal::from_double(-2.4, 64).round_to_nearest() == -2);
  CHECK(BigReal::from_ui(2, 64).str(5) == "2.0000e+00");
  CHECK(BigReal::from_string("0.5", 64).str(3) == "5.00e-01");
  CHECK(BigReal::from_string("1.25e3", 96).round_to_nearest() == 1250);
  CHECK_THROWS_AS(BigReal::from_string("not-a-number", 64), std::invalid_argument);
}

TEST_CASE("ulp distance") {
  BigReal one = BigReal::from_ui(1, 128);
  BigReal one_ulp = one + BigReal::pow2(-127, 128);  // exp(1.0) = 1, ulp = 2^-127
  CHECK(ulp_distance(one, one, 128) == 0.0);
  CHECK(ulp_distance(one, one_ulp, 128) == doctest::Approx(1.0));
  CHECK(ulp_distance(one, BigReal::from_ui(0, 128), 128) > 1e30);
}
