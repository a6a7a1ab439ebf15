#include "pfn/bounds.hpp"

#include <stdexcept>

namespace pfn {

namespace {

constexpr long kBoundEvalBits = 192;

BigReal round_to(const BigReal& x, long bits) {
  BigReal r(bits);
  mpfr_set(r.raw_mut(), x.raw(), MPFR_RNDN);
  return r;
}

// 44 pi^2 / (225 sqrt 3) N^{-1/2}  +  (pi sqrt 2/75) sqrt(N/(n-1)) sinh(C sqrt n / N):
// the two leading summands shared by bound_R12 and bound_L7. The sinh
// argument pi (2n/3)^{1/2} / N is written via C = pi sqrt(2/3); same number.
BigReal shared_leading_terms(std::uint64_t n, std::uint64_t N, long work) {
  BigReal piw = BigReal::pi(work);
  BigReal sqrt3 = sqrt(BigReal::from_ui(3, work));
  BigReal t1 = (piw.sqr().mul_ui(44)) / (sqrt3.mul_ui(225)) /
               sqrt(BigReal::from_ui(N, work));
  BigReal arg = growth_constant(work) * sqrt(BigReal::from_ui(n, work)).div_ui(N);
  BigReal t2 = piw * sqrt(BigReal::from_ui(2, work)).div_ui(75) *
               sqrt(BigReal::from_ui(N, work).div_ui(n - 1)) * sinh(arg);
  return t1 + t2;
}

}  // namespace

RemainderBound bound_R12(std::uint64_t n, std::uint64_t N, long bits) {
  if (n < 2) throw std::invalid_argument("bound_R12: needs n >= 2");
  if (N == 0) throw std::invalid_argument("bound_R12: needs N >= 1");
  long work = bits + 32;
  BigReal lead = shared_leading_terms(n, N, work);
  BigReal np1 = BigReal::from_ui(N + 1, work);
  BigReal nm1 = BigReal::from_ui(n - 1, work);
  BigReal piw = BigReal::pi(work);
  BigReal sqrt3 = sqrt(BigReal::from_ui(3, work));
  BigReal expo = exp(-(growth_constant(work) * sqrt(nm1).div_ui(N)));
  BigReal inner = BigReal::from_ui(1, work).div_ui(3) +
                  sqrt3 / (piw * sqrt(BigReal::from_ui(2, work))).mul_ui(5) *
                      np1 / sqrt(nm1);
  BigReal t3 =
      np1.pow_rational(3, 2) / nm1 / sqrt3.mul_ui(2) * expo * inner;
  RemainderBound rb;
  rb.n = n;
  rb.N = N;
  rb.kind = SeriesKind::HardyRamanujan;
  rb.source = BoundSource::R12;
  rb.value = round_to(lead + t3, bits);
  return rb;
}

RemainderBound bound_L7(std::uint64_t n, std::uint64_t N, long bits) {
  if (n < 2) throw std::invalid_argument("bound_L7: needs n >= 2");
  if (N == 0) throw std::invalid_argument("bound_L7: needs N >= 1");
  RemainderBound rb;
  rb.n = n;
  rb.N = N;
  rb.kind = SeriesKind::Rademacher;
  rb.source = BoundSource::L7;
  rb.value = round_to(shared_leading_terms(n, N, bits + 32), bits);
  return rb;
}

RemainderBound bound_L10(std::uint64_t n, std::uint64_t N, long bits) {
  if (n == 0 || N == 0) throw std::invalid_argument("bound_L10: n, N >= 1");
  long work = bits + 32;
  BigReal m = mu(n, work);
  BigReal NN = BigReal::from_ui(N, work);
  BigReal x = NN / m;
  BigReal braces = x * x * x * sinh(m / NN) +
                   BigReal::from_ui(1, work).div_ui(6) - x * x;
  BigReal val = BigReal::pi(work).sqr() / sqrt(BigReal::from_ui(3, work)) *
                NN.pow_rational(-2, 3) * braces;
  RemainderBound rb;
  rb.n = n;
  rb.N = N;
  rb.kind = SeriesKind::Rademacher;
  rb.source = BoundSource::L10;
  rb.value = round_to(val, bits);
  return rb;
}

RemainderBound bound_L11(std::uint64_t n, std::uint64_t N, long bits) {
  if (n == 0 || N == 0) throw std::invalid_argument("bound_L11: n, N >= 1");
  long work = bits + 32;
  BigReal m = mu(n, work);
  BigReal NN = BigReal::from_ui(N, work);
  BigReal x = m / NN;
  BigReal one = BigReal::from_ui(1, work);
  BigReal braces = sinh(x) + x * x * x / BigReal::from_ui(6, work) +
                   (one + NN / m) * (one.div_ui(7) +
                                     m.pow_rational(1, 3) *
                                         NN.pow_rational(-5, 3).div_ui(3));
  BigReal val = BigReal::pi(work).sqr() * NN.pow_rational(7, 3) /
                (sqrt(BigReal::from_ui(3, work)) * m * m * m) * braces;
  RemainderBound rb;
  rb.n = n;
  rb.N = N;
  rb.kind = SeriesKind::HardyRamanujan;
  rb.source = BoundSource::L11;
  rb.value = round_to(val, bits);
  return rb;
}

std::uint64_t lehmer_rule_terms(std::uint64_t n) {
  if (n <= 600)
    throw std::invalid_argument("lehmer_rule_terms: the rule holds for n > 600");
  mpz_class m = 4 * mpz_class(static_cast<unsigned long>(n));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());  // floor(sqrt(4n)) = floor(2 sqrt n)
  return mpz_class(r / 3).get_ui();
}

BigReal delta_rule_threshold(const BigReal& delta) {
  if (delta.cmp_ui(1) <= 0)
    throw std::invalid_argument("delta_rule_threshold: delta must exceed 1");
  long work = delta.precision_bits() + 32;
  BigReal c = growth_constant(work);
  BigReal d(work);
  mpfr_set(d.raw_mut(), delta.raw(), MPFR_RNDN);
  BigReal braces = sinh(c * d) / (c * c * c * d * d * d) +
                   BigReal::from_ui(1, work).div_ui(6);
  BigReal val = sqrt(BigReal::from_ui(27, work)) * c.pow_rational(6, 1) /
                (d * d) * braces * braces * braces;
  return round_to(val, delta.precision_bits());
}

TruncationCertificate certify(std::uint64_t n, SeriesKind kind,
                              long bits_override) {
  if (n == 0) throw std::invalid_argument("certify: n must be >= 1");
  mpz_class s;
  mpz_class nz(static_cast<unsigned long>(n));
  mpz_sqrt(s.get_mpz_t(), nz.get_mpz_t());
  if (s * s < nz) s += 1;
  std::uint64_t cap = 8 * s.get_ui();

  // bound + slack must clear the half-integer gate with margin to spare;
  // the margin also absorbs the bound evaluation's own rounding.
  BigReal gate = BigReal::from_ui(1, 96).div_ui(2) - BigReal::pow2(-20, 96);

  TruncationCertificate cert;
  cert.n = n;
  cert.kind = kind;
  for (std::uint64_t N = 1; N <= cap; ++N) {
    long bits = bits_override > 0 ? std::max(bits_override, BigReal::kMinBits)
                                  : plan_precision(n, N).bits;
    BigReal slack = rounding_slack_at(n, N, bits);
    RemainderBound rb = kind == SeriesKind::Rademacher
                            ? bound_L10(n, N, kBoundEvalBits)
                            : bound_L11(n, N, kBoundEvalBits);
    cert.N = N;
    cert.bound = rb;
    cert.rounding_slack = slack;
    if (rb.value + slack < gate) {
      cert.certified = true;
      return cert;
    }
  }
  cert.certified = false;
  return cert;
}

}  // namespace pfn
