#include "pfn/bigreal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pfn {

namespace {

long clamp_bits(long bits) { return bits < BigReal::kMinBits ? BigReal::kMinBits : bits; }

}  // namespace

BigReal::BigReal(long precision_bits) { mpfr_init2(x_, clamp_bits(precision_bits)); }

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(x_, mpfr_get_prec(other.x_));
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  x_[0] = other.x_[0];
  other.owned_ = false;
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    if (owned_) mpfr_clear(x_);
    x_[0] = other.x_[0];
    owned_ = true;
    other.owned_ = false;
  }
  return *this;
}

BigReal::~BigReal() {
  if (owned_) mpfr_clear(x_);
}

BigReal BigReal::from_ui(unsigned long v, long bits) {
  BigReal r(bits);
  mpfr_set_ui(r.x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_si(long v, long bits) {
  BigReal r(bits);
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_double(double v, long bits) {
  BigReal r(bits);
  mpfr_set_d(r.x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_string(const std::string& s, long bits) {
  BigReal r(bits);
  if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("BigReal::from_string: unparsable literal");
  return r;
}

BigReal BigReal::from_integer(const mpz_class& z, long bits) {
  long need = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)) + 1;
  BigReal r(need > bits ? need : bits);
  mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigReal BigReal::pi(long bits) {
  BigReal r(bits);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long e, long bits) {
  BigReal r(bits);
  mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDN);
  return r;
}

#define PFN_BINOP(opname, mpfr_fn)                                  \
  BigReal BigReal::operator opname(const BigReal& rhs) const {      \
    long p = precision_bits(), q = rhs.precision_bits();            \
    BigReal r(p > q ? p : q);                                       \
    mpfr_fn(r.x_, x_, rhs.x_, MPFR_RNDN);                           \
    return r;                                                       \
  }

PFN_BINOP(+, mpfr_add)
PFN_BINOP(-, mpfr_sub)
PFN_BINOP(*, mpfr_mul)
PFN_BINOP(/, mpfr_div)
#undef PFN_BINOP

BigReal BigReal::operator-() const {
  BigReal r(precision_bits());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::add_ui(unsigned long v) const {
  BigReal r(precision_bits());
  mpfr_add_ui(r.x_, x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::sub_ui(unsigned long v) const {
  BigReal r(precision_bits());
  mpfr_sub_ui(r.x_, x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::mul_ui(unsigned long v) const {
  BigReal r(precision_bits());
  mpfr_mul_ui(r.x_, x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::div_ui(unsigned long v) const {
  BigReal r(precision_bits());
  mpfr_div_ui(r.x_, x_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::ui_div(unsigned long v) const {
  BigReal r(precision_bits());
  mpfr_ui_div(r.x_, v, x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::abs() const {
  BigReal r(precision_bits());
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::sqr() const {
  BigReal r(precision_bits());
  mpfr_sqr(r.x_, x_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow_rational(long num, unsigned long den) const {
  if (den == 0) throw std::invalid_argument("pow_rational: zero denominator");
  long bits = precision_bits();
  BigReal r(bits);
  if (den == 1) {
    mpfr_pow_si(r.x_, x_, num, MPFR_RNDN);
    return r;
  }
  // x^(num/den) = exp(log(x) * num/den); x > 0 on all call paths.
  BigReal t(bits + 32);
  mpfr_log(t.x_, x_, MPFR_RNDN);
  mpfr_mul_si(t.x_, t.x_, num, MPFR_RNDN);
  mpfr_div_ui(t.x_, t.x_, den, MPFR_RNDN);
  mpfr_exp(r.x_, t.x_, MPFR_RNDN);
  return r;
}

mpz_class BigReal::round_to_nearest() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDN);
  return z;
}

std::string BigReal::str(int digits) const {
  if (digits < 1) digits = 1;
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x_);
  return std::string(buf.data());
}

BigReal eval_transcendental(const BigReal& x, Transcendental kind) {
  BigReal r(x.precision_bits());
  switch (kind) {
    case Transcendental::Exp:
      mpfr_exp(r.raw_mut(), x.raw(), MPFR_RNDN);
      break;
    case Transcendental::Sinh:
      mpfr_sinh(r.raw_mut(), x.raw(), MPFR_RNDN);
      break;
    case Transcendental::Cosh:
      mpfr_cosh(r.raw_mut(), x.raw(), MPFR_RNDN);
      break;
    case Transcendental::Cos:
      mpfr_cos(r.raw_mut(), x.raw(), MPFR_RNDN);
      break;
    case Transcendental::Sqrt:
      if (x.sign() < 0) throw std::domain_error("sqrt of negative value");
      mpfr_sqrt(r.raw_mut(), x.raw(), MPFR_RNDN);
      break;
    case Transcendental::Log:
      if (x.sign() <= 0) throw std::domain_error("log of non-positive value");
      mpfr_log(r.raw_mut(), x.raw(), MPFR_RNDN);
      break;
  }
  return r;
}

BigReal exp(const BigReal& x) { return eval_transcendental(x, Transcendental::Exp); }
BigReal sinh(const BigReal& x) { return eval_transcendental(x, Transcendental::Sinh); }
BigReal cosh(const BigReal& x) { return eval_transcendental(x, Transcendental::Cosh); }
BigReal cos(const BigReal& x) { return eval_transcendental(x, Transcendental::Cos); }
BigReal sqrt(const BigReal& x) { return eval_transcendental(x, Transcendental::Sqrt); }
BigReal log(const BigReal& x) { return eval_transcendental(x, Transcendental::Log); }

long mu_ceil_bits(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mu_ceil_bits: n must be >= 1");
  // mu/ln2 rounded upward at every step, so the ceiling cannot come out low.
  mpfr_t t, d;
  mpfr_init2(t, 128);
  mpfr_init2(d, 128);
  mpfr_set_ui(t, 24, MPFR_RNDU);
  mpfr_mul_ui(t, t, n, MPFR_RNDU);
  mpfr_sub_ui(t, t, 1, MPFR_RNDU);
  mpfr_sqrt(t, t, MPFR_RNDU);
  mpfr_const_pi(d, MPFR_RNDU);
  mpfr_mul(t, t, d, MPFR_RNDU);
  mpfr_div_ui(t, t, 6, MPFR_RNDU);
  mpfr_const_log2(d, MPFR_RNDD);  // smaller divisor -> larger quotient
  mpfr_div(t, t, d, MPFR_RNDU);
  mpfr_ceil(t, t);
  long r = mpfr_get_si(t, MPFR_RNDN);
  mpfr_clear(t);
  mpfr_clear(d);
  return r;
}

namespace {

// ceil(10 * log2(N+1)) = ceil(log2((N+1)^10)), exact via integer powering.
long term_surcharge_bits(std::uint64_t terms) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(terms + 1), 10);
  size_t sz = mpz_sizeinbase(m.get_mpz_t(), 2);
  // sizeinbase gives floor(log2)+1; powers of two need one less for the ceil.
  bool pow2 = mpz_scan1(m.get_mpz_t(), 0) == sz - 1;
  return static_cast<long>(pow2 ? sz - 1 : sz);
}

}  // namespace

BigReal rounding_slack_at(std::uint64_t n, std::uint64_t terms, long bits) {
  long mu_bits = mu_ceil_bits(n);
  BigReal s = BigReal::pow2(-bits + mu_bits + 8, 96);
  return s.mul_ui(static_cast<unsigned long>(terms + 5));
}

PrecisionPlan plan_precision(std::uint64_t n, std::uint64_t terms) {
  if (n == 0 || terms == 0)
    throw std::invalid_argument("plan_precision: n and terms must be >= 1");
  PrecisionPlan plan;
  plan.n = n;
  plan.terms = terms;
  plan.bits = mu_ceil_bits(n) + 64 + term_surcharge_bits(terms);
  plan.rounding_slack = rounding_slack_at(n, terms, plan.bits);
  return plan;
}

double ulp_distance(const BigReal& a, const BigReal& b, long bits) {
  BigReal d = (a - b).abs();
  if (d.is_zero()) return 0.0;
  mpfr_exp_t ea = a.is_zero() ? mpfr_get_exp(b.raw()) : mpfr_get_exp(a.raw());
  if (!b.is_zero()) {
    mpfr_exp_t eb = mpfr_get_exp(b.raw());
    if (eb > ea) ea = eb;
  }
  // One ulp at exponent ea and precision bits is 2^(ea - bits).
  mpfr_t q;
  mpfr_init2(q, 64);
  mpfr_set(q, d.raw(), MPFR_RNDU);
  mpfr_mul_2si(q, q, static_cast<long>(bits - ea), MPFR_RNDU);
  double r = mpfr_get_d(q, MPFR_RNDU);
  mpfr_clear(q);
  return r;
}

}  // namespace pfn
